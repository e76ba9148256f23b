#include "logarr/logmodules/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace logarr {

std::uint32_t default_prime() {
  static const std::uint32_t p = choose_prime(0x6c6f67617272ULL);
  return p;
}

namespace {

std::vector<ModRow> reduce_rows(const ModField& field, const std::vector<RatRow>& rows) {
  std::vector<ModRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    ModRow m = reduce_row(field, r);
    if (!m.empty()) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::int64_t modular_kernel_dim(const KernelProblem& problem, int m, const ModField& field) {
  const int ncols = problem.ambient().dim(m);
  if (ncols == 0) return 0;
  return ncols - echelon_rank(field, reduce_rows(field, problem.conditions(m)), ncols);
}

std::int64_t exact_kernel_dim(const KernelProblem& problem, int m) {
  const int ncols = problem.ambient().dim(m);
  if (ncols == 0) return 0;
  return ncols - echelon_rank(RatField{}, problem.conditions(m), ncols);
}

GeneratorEngine::GeneratorEngine(const KernelProblem& problem, int start_degree, std::uint32_t prime)
    : problem_(problem), next_(start_degree), field_(prime) {}

std::vector<GradedVector> GeneratorEngine::multiples(int m) const {
  std::vector<GradedVector> out;
  for (const auto& g : gens_) {
    if (g.degree >= m) continue;
    for (const auto& mono : monomial_basis(problem_.ambient().nvars, m - g.degree).monomials())
      out.push_back(multiply(problem_.ambient(), g, mono));
  }
  return out;
}

std::int64_t GeneratorEngine::certified_step(int m, const std::vector<RatRow>& cond, bool& certified) {
  certified = false;
  const int ncols = problem_.ambient().dim(m);
  try {
    const std::int64_t upper = ncols - echelon_rank(field_, reduce_rows(field_, cond), ncols);
    if (upper == 0) {
      certified = true;
      return 0;
    }
    const auto mult = multiples(m);
    if (mult.empty()) return -1;
    std::vector<ModRow> rows;
    rows.reserve(mult.size());
    for (const auto& v : mult) rows.push_back(reduce_row(field_, v.vec));
    const std::int64_t lower = echelon_rank(field_, std::move(rows), ncols);
    if (lower == upper) {
      certified = true;
      return upper;
    }
  } catch (const std::domain_error&) {
    // The prime divides a denominator; fall through to rational elimination.
  }
  return -1;
}

std::int64_t GeneratorEngine::exact_step(int m, const std::vector<RatRow>& cond) {
  ++exact_steps_;
  const int ncols = problem_.ambient().dim(m);
  const auto ech = gauss_jordan(RatField{}, cond, ncols);
  const auto kernel = kernel_from_echelon(RatField{}, ech);
  const auto free_cols = ech.free_columns();
  if (kernel.empty()) return 0;

  // Coordinates of an element of the kernel are its values at the free columns.
  std::vector<int> slot(static_cast<std::size_t>(ncols), -1);
  for (std::size_t k = 0; k < free_cols.size(); ++k) slot[static_cast<std::size_t>(free_cols[k])] = static_cast<int>(k);
  std::vector<RatRow> projected;
  for (const auto& v : multiples(m)) {
    RatRow r;
    for (std::size_t e = 0; e < v.vec.size(); ++e) {
      const int s = slot[static_cast<std::size_t>(v.vec.idx[e])];
      if (s >= 0) r.push(s, v.vec.val[e]);
    }
    projected.push_back(std::move(r));
  }
  const auto sub = gauss_jordan(RatField{}, std::move(projected), static_cast<int>(free_cols.size()));
  std::vector<bool> covered(free_cols.size(), false);
  for (int pc : sub.pivots) covered[static_cast<std::size_t>(pc)] = true;
  for (std::size_t k = 0; k < kernel.size(); ++k)
    if (!covered[k]) gens_.push_back(GradedVector{m, kernel[k]});
  return static_cast<std::int64_t>(kernel.size());
}

int GeneratorEngine::step() {
  const int m = next_++;
  if (problem_.ambient().dim(m) == 0) {
    dims_[m] = 0;
    return m;
  }
  const auto cond = problem_.conditions(m);
  bool certified = false;
  std::int64_t dim = certified_step(m, cond, certified);
  if (!certified) dim = exact_step(m, cond);
  dims_[m] = dim;
  return m;
}

}  // namespace logarr
