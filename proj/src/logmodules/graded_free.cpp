#include "logarr/logmodules/graded_free.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace logarr {

int GradedFreeModule::dim(int m) const {
  std::int64_t total = 0;
  for (int s : shifts) total += dim_polys(nvars, m - s);
  return static_cast<int>(total);
}

int GradedFreeModule::offset(int c, int m) const {
  std::int64_t total = 0;
  for (int k = 0; k < c; ++k) total += dim_polys(nvars, m - shifts[static_cast<std::size_t>(k)]);
  return static_cast<int>(total);
}

int GradedFreeModule::column(int c, const Monomial& mono, int m) const {
  const int idx = monomial_basis(nvars, m - shifts[static_cast<std::size_t>(c)]).index_of(mono);
  if (idx < 0) throw std::logic_error("monomial outside its component");
  return offset(c, m) + idx;
}

std::pair<int, Monomial> GradedFreeModule::locate(int col, int m) const {
  for (int c = 0; c < components(); ++c) {
    const auto& basis = monomial_basis(nvars, m - shifts[static_cast<std::size_t>(c)]);
    if (col < basis.size()) return {c, basis[col]};
    col -= basis.size();
  }
  throw std::out_of_range("column outside the graded piece");
}

int GradedFreeModule::min_degree() const {
  if (shifts.empty()) return 0;
  return *std::min_element(shifts.begin(), shifts.end());
}

GradedVector multiply(const GradedFreeModule& f, const GradedVector& v, const Monomial& mono) {
  GradedVector out;
  out.degree = v.degree + mono.degree();
  std::vector<std::pair<int, Rat>> entries;
  entries.reserve(v.vec.size());
  for (std::size_t k = 0; k < v.vec.size(); ++k) {
    const auto [c, m] = f.locate(v.vec.idx[k], v.degree);
    entries.emplace_back(f.column(c, m * mono, out.degree), v.vec.val[k]);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [c, val] : entries) out.vec.push(c, val);
  return out;
}

std::vector<MPoly> component_polys(const GradedFreeModule& f, const GradedVector& v) {
  std::vector<MPoly> out(static_cast<std::size_t>(f.components()), MPoly(f.nvars));
  for (std::size_t k = 0; k < v.vec.size(); ++k) {
    const auto [c, m] = f.locate(v.vec.idx[k], v.degree);
    out[static_cast<std::size_t>(c)].add_term(m, v.vec.val[k]);
  }
  return out;
}

ModRow reduce_row(const ModField& field, const RatRow& r) {
  ModRow out;
  out.idx.reserve(r.size());
  out.val.reserve(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    const auto v = field.reduce(r.val[k]);
    if (v != 0) out.push(r.idx[k], v);
  }
  return out;
}

}  // namespace logarr
