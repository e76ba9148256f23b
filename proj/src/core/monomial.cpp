#include "logarr/core/monomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace logarr {

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars) throw std::invalid_argument("too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const int e = exponents[i];
    if (e < 0 || e > kMaxExponent) throw std::invalid_argument("exponent out of range");
    bits_ |= static_cast<std::uint64_t>(e) << shift(static_cast<int>(i));
  }
}

Monomial Monomial::var(int i, int power) { return Monomial{}.with(i, power); }

int Monomial::degree() const {
  int d = 0;
  for (std::uint64_t b = bits_; b != 0; b >>= 8) d += static_cast<int>(b & 0xffu);
  return d;
}

Monomial Monomial::with(int i, int e) const {
  if (e < 0 || e > kMaxExponent) throw std::invalid_argument("exponent out of range");
  Monomial m = *this;
  m.bits_ &= ~(std::uint64_t{0xff} << shift(i));
  m.bits_ |= static_cast<std::uint64_t>(e) << shift(i);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if ((*this)[i] > other[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    const int e = a[i] + b[i];
    if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
  }
  r.bits_ = a.bits_ + b.bits_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.bits_ = a.bits_ - b.bits_;
  return r;
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> e(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) e[static_cast<std::size_t>(i)] = (*this)[i];
  return e;
}

namespace {

void enumerate(int nvars, int var, int remaining, std::vector<int>& cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur[static_cast<std::size_t>(var)] = remaining;
    out.emplace_back(std::span<const int>(cur));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[static_cast<std::size_t>(var)] = e;
    enumerate(nvars, var + 1, remaining - e, cur, out);
  }
}

}  // namespace

MonomialBasis::MonomialBasis(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported number of variables");
  if (degree < 0) return;
  if (nvars == 0) {
    if (degree == 0) monos_.emplace_back();
  } else {
    std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
    enumerate(nvars, 0, degree, cur, monos_);
  }
  index_.reserve(monos_.size());
  for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], static_cast<int>(i));
}

int MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

const MonomialBasis& monomial_basis(int nvars, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> cache;
  const auto key = std::make_pair(nvars, degree < 0 ? -1 : degree);
  std::lock_guard lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<MonomialBasis>(nvars, key.second);
  return *slot;
}

std::int64_t dim_polys(int nvars, int degree) {
  if (degree < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  // C(degree + nvars - 1, nvars - 1)
  std::int64_t r = 1;
  for (int i = 1; i < nvars; ++i) r = r * (degree + i) / i;
  return r;
}

}  // namespace logarr
