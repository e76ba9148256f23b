#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

namespace logarr {

inline constexpr int kMaxVars = 8;
inline constexpr int kMaxExponent = 255;

/// Exponent vector packed one byte per variable, x0 in the most significant byte.
///
/// With that layout, comparing the packed words of two monomials of the same
/// total degree is exactly lexicographic comparison with x0 > x1 > ... , so the
/// graded-lex order only needs an extra degree comparison.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial var(int i, int power = 1);

  int operator[](int i) const { return static_cast<int>((bits_ >> shift(i)) & 0xffu); }
  int degree() const;
  std::uint64_t bits() const { return bits_; }

  Monomial with(int i, int e) const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires divisor.divides(*this).
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::vector<int> exponents(int nvars) const;

private:
  static constexpr int shift(int i) { return 8 * (kMaxVars - 1 - i); }
  std::uint64_t bits_ = 0;
};

/// Strict graded-lex order, larger monomials first when used as a map comparator.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.bits() > b.bits();
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return std::hash<std::uint64_t>{}(m.bits()); }
};

/// All monomials of one total degree in a fixed number of variables,
/// in descending graded-lex order, with a reverse index.
class MonomialBasis {
public:
  MonomialBasis(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(monos_.size()); }
  const Monomial& operator[](int i) const { return monos_[static_cast<std::size_t>(i)]; }
  const std::vector<Monomial>& monomials() const { return monos_; }

  /// -1 when the monomial is not in the basis.
  int index_of(const Monomial& m) const;

private:
  int nvars_;
  int degree_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, int, MonomialHash> index_;
};

/// Shared, thread-safe cache.  Negative degrees give an empty basis.
const MonomialBasis& monomial_basis(int nvars, int degree);

/// dim S_m for S a polynomial ring in nvars variables (0 for m < 0).
std::int64_t dim_polys(int nvars, int degree);

}  // namespace logarr
