#include "logarr/core/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace logarr {

MPoly::MPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported number of variables");
}

MPoly::MPoly(int nvars, const Rat& constant) : MPoly(nvars) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

MPoly MPoly::variable(int nvars, int i) { return monomial(nvars, Monomial::var(i)); }

MPoly MPoly::monomial(int nvars, const Monomial& m, const Rat& c) {
  MPoly p(nvars);
  p.add_term(m, c);
  return p;
}

MPoly MPoly::linear_form(std::span<const Rat> coeffs) {
  MPoly p(static_cast<int>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(Monomial::var(static_cast<int>(i)), coeffs[i]);
  return p;
}

Rat MPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::optional<int> MPoly::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

MPoly MPoly::derivative(int i) const {
  MPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    const int e = m[i];
    if (e == 0) continue;
    r.add_term(m.with(i, e - 1), c * e);
  }
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MPoly MPoly::times_monomial(const Monomial& m) const {
  MPoly r(nvars_);
  for (const auto& [mm, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, c);
  return r;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  MPoly r(nvars_, 1), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

MPoly MPoly::substitute(std::span<const MPoly> images) const {
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitute: wrong number of images");
  const int out_vars = images.empty() ? 0 : images[0].nvars();
  std::vector<std::vector<MPoly>> powers(images.size());
  MPoly r(out_vars);
  for (const auto& [m, c] : terms_) {
    MPoly t(out_vars, c);
    for (int i = 0; i < nvars_; ++i) {
      const int e = m[i];
      if (e == 0) continue;
      auto& pw = powers[static_cast<std::size_t>(i)];
      if (pw.empty()) pw.emplace_back(out_vars, 1);
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[static_cast<std::size_t>(i)]);
      t = t * pw[static_cast<std::size_t>(e)];
    }
    r += t;
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    if (a < 0) a = -a;
    const bool unit = (a == 1);
    const bool constant = (m.degree() == 0);
    if (!unit || constant) os << a.get_str();
    bool need_star = !unit || constant;
    for (int i = 0; i < nvars_; ++i) {
      const int e = m[i];
      if (e == 0) continue;
      if (need_star) os << "*";
      os << "x" << i;
      if (e > 1) os << "^" << e;
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

LinearDivision divide_by_linear(const MPoly& g, std::span<const Rat> form, int pivot) {
  const Rat& a = form[static_cast<std::size_t>(pivot)];
  if (a == 0) throw std::invalid_argument("pivot coefficient of linear form is zero");
  const MPoly l = MPoly::linear_form(form);
  LinearDivision out{MPoly(g.nvars()), g};
  // Every step cancels the largest term still containing x_pivot; new terms have lower x_pivot degree.
  for (;;) {
    const MPoly::Terms& t = out.remainder.terms();
    auto it = t.begin();
    while (it != t.end() && it->first[pivot] == 0) ++it;
    if (it == t.end()) break;
    const Monomial m = it->first / Monomial::var(pivot);
    const Rat c = it->second / a;
    out.quotient.add_term(m, c);
    out.remainder -= l.times_monomial(m) * c;
  }
  return out;
}

MPoly exact_divide_linear(const MPoly& g, std::span<const Rat> form) {
  int pivot = 0;
  while (pivot < static_cast<int>(form.size()) && form[static_cast<std::size_t>(pivot)] == 0) ++pivot;
  if (pivot == static_cast<int>(form.size())) throw std::invalid_argument("division by zero form");
  LinearDivision d = divide_by_linear(g, form, pivot);
  if (!d.remainder.is_zero()) throw std::domain_error("linear form does not divide polynomial");
  return std::move(d.quotient);
}

MPoly determinant(const std::vector<std::vector<MPoly>>& m, int nvars) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly(nvars, 1);
  if (n == 1) return m[0][0];
  MPoly r(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MPoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MPoly> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    MPoly term = m[0][j] * determinant(minor, nvars);
    if (j % 2 == 0) r += term;
    else r -= term;
  }
  return r;
}

}  // namespace logarr
