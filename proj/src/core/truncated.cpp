#include "logarr/core/truncated.hpp"

#include <stdexcept>

namespace logarr {

TruncPoly::TruncPoly(int modulus) : c_(static_cast<std::size_t>(modulus)) {
  if (modulus < 1) throw std::invalid_argument("truncation modulus must be positive");
}

TruncPoly::TruncPoly(int modulus, const Rat& constant) : TruncPoly(modulus) { c_[0] = constant; }

TruncPoly::TruncPoly(int modulus, const std::vector<Rat>& coeffs) : TruncPoly(modulus) {
  for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
}

TruncPoly TruncPoly::from_upoly(int modulus, const UPoly& p) { return TruncPoly(modulus, p.coeffs()); }

TruncPoly TruncPoly::monomial(int modulus, int k, const Rat& c) {
  TruncPoly r(modulus);
  if (k >= 0 && k < modulus) r.c_[static_cast<std::size_t>(k)] = c;
  return r;
}

bool TruncPoly::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

void TruncPoly::check_same(const TruncPoly& o) const {
  if (o.c_.size() != c_.size()) throw std::invalid_argument("truncated polynomials with different moduli");
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncPoly& TruncPoly::operator*=(const Rat& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
  a.check_same(b);
  const std::size_t m = a.c_.size();
  TruncPoly r(static_cast<int>(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < m; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TruncPoly TruncPoly::pow(int e) const {
  if (e < 0) return trunc_invert(*this).pow(-e);
  TruncPoly r(modulus(), 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

TruncPoly TruncPoly::negate_t() const {
  TruncPoly r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

std::vector<std::int64_t> TruncPoly::integer_coeffs() const {
  std::vector<std::int64_t> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(to_int64(v));
  return out;
}

TruncPoly trunc_invert(const TruncPoly& p) {
  if (p[0] == 0) throw std::domain_error("not a unit");
  const int m = p.modulus();
  TruncPoly q(m);
  q[0] = 1 / p[0];
  // q_k = -(1/p_0) sum_{i=1..k} p_i q_{k-i}
  for (int k = 1; k < m; ++k) {
    Rat s = 0;
    for (int i = 1; i <= k; ++i) s += p[i] * q[k - i];
    q[k] = -s * q[0];
  }
  return q;
}

USeries::USeries(int modulus, int max_order) : modulus_(modulus), max_order_(max_order) {}

int USeries::min_order() const { return c_.empty() ? max_order_ + 1 : c_.begin()->first; }

TruncPoly USeries::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? TruncPoly(modulus_) : it->second;
}

void USeries::add(int k, const TruncPoly& c) {
  if (k > max_order_ || c.is_zero()) return;
  auto [it, inserted] = c_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

USeries& USeries::operator+=(const USeries& o) {
  if (o.modulus_ != modulus_) throw std::invalid_argument("u-series with different moduli");
  max_order_ = std::min(max_order_, o.max_order_);
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->first > max_order_) it = c_.erase(it);
    else ++it;
  }
  for (const auto& [k, c] : o.c_) add(k, c);
  return *this;
}

USeries USeries::scaled(const TruncPoly& c) const {
  USeries r(modulus_, max_order_);
  for (const auto& [k, v] : c_) r.add(k, v * c);
  return r;
}

USeries USeries::shifted(int k) const {
  USeries r(modulus_, k < 0 ? max_order_ + k : max_order_);
  for (const auto& [j, v] : c_) r.add(j + k, v);
  return r;
}

}  // namespace logarr
