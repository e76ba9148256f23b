#include <benchmark/benchmark.h>

#include <vector>

#include "logarr/arrangement/arrangement.hpp"
#include "logarr/core/linalg.hpp"
#include "logarr/logmodules/generators.hpp"
#include "logarr/logmodules/problem.hpp"

using namespace logarr;

namespace {

struct Workload {
  std::vector<RatRow> rows;
  int ncols = 0;
};

/// Degree-m conditions cutting D^p of the Edelman-Reiner arrangement out of its ambient module.
Workload er_conditions(int p, int m) {
  const LogModuleProblem prob(edelman_reiner(), ModuleSelector{Side::Der, p, false});
  return {prob.conditions(m), prob.ambient().dim(m)};
}

std::vector<ModRow> reduce_rows(const ModField& f, const std::vector<RatRow>& rows) {
  std::vector<ModRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    ModRow s;
    for (std::size_t k = 0; k < r.size(); ++k)
      if (const auto v = f.reduce(r.val[k]); v != 0) s.push(r.idx[k], v);
    out.push_back(std::move(s));
  }
  return out;
}

RatMatrix dense(const Workload& w) {
  RatMatrix m(static_cast<int>(w.rows.size()), w.ncols);
  for (int i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < w.rows[static_cast<std::size_t>(i)].size(); ++k)
      m(i, w.rows[static_cast<std::size_t>(i)].idx[k]) = w.rows[static_cast<std::size_t>(i)].val[k];
  return m;
}

void BM_GaussJordanRat(benchmark::State& st, Exec exec) {
  const Workload w = er_conditions(1, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(gauss_jordan(RatField{}, w.rows, w.ncols, exec).rank());
  st.counters["rows"] = static_cast<double>(w.rows.size());
  st.counters["cols"] = w.ncols;
}

void BM_DenseReference(benchmark::State& st) {
  const RatMatrix m = dense(er_conditions(1, static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(rref_reference(m).pivots.size());
}

void BM_GaussJordanMod(benchmark::State& st, Exec exec) {
  const ModField f(default_prime());
  const Workload w = er_conditions(2, static_cast<int>(st.range(0)));
  const auto rows = reduce_rows(f, w.rows);
  for (auto _ : st) benchmark::DoNotOptimize(gauss_jordan(f, rows, w.ncols, exec).rank());
}

void BM_EchelonRankMod(benchmark::State& st, Exec exec) {
  const ModField f(default_prime());
  const Workload w = er_conditions(2, static_cast<int>(st.range(0)));
  const auto rows = reduce_rows(f, w.rows);
  for (auto _ : st) benchmark::DoNotOptimize(echelon_rank(f, rows, w.ncols, exec));
  st.counters["rows"] = static_cast<double>(w.rows.size());
  st.counters["cols"] = w.ncols;
}

}  // namespace

BENCHMARK_CAPTURE(BM_GaussJordanRat, serial, Exec::Serial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GaussJordanRat, parallel, Exec::Parallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DenseReference)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GaussJordanMod, serial, Exec::Serial)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GaussJordanMod, parallel, Exec::Parallel)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EchelonRankMod, serial, Exec::Serial)->Arg(7)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EchelonRankMod, parallel, Exec::Parallel)->Arg(7)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
