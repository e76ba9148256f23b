#pragma once

#include <map>
#include <string>
#include <vector>

#include "logarr/core/rational.hpp"
#include "logarr/core/univariate.hpp"

namespace logarr {

/// Element of Q[t]/(t^m): exactly m coefficients, t^0 first.
class TruncPoly {
public:
  explicit TruncPoly(int modulus);
  TruncPoly(int modulus, const Rat& constant);
  TruncPoly(int modulus, const std::vector<Rat>& coeffs);
  static TruncPoly from_upoly(int modulus, const UPoly& p);
  static TruncPoly monomial(int modulus, int k, const Rat& c = 1);

  int modulus() const { return static_cast<int>(c_.size()); }
  const Rat& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  Rat& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;

  TruncPoly& operator+=(const TruncPoly& o);
  TruncPoly& operator-=(const TruncPoly& o);
  TruncPoly& operator*=(const Rat& s);
  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
  friend TruncPoly operator*(TruncPoly a, const Rat& s) { return a *= s; }
  friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

  TruncPoly pow(int e) const;
  /// Substitutes t -> -t.
  TruncPoly negate_t() const;
  UPoly to_upoly() const { return UPoly(c_); }
  std::vector<std::int64_t> integer_coeffs() const;
  std::string str(const std::string& var = "t") const { return to_upoly().str(var); }

private:
  void check_same(const TruncPoly& o) const;
  std::vector<Rat> c_;
};

/// Multiplicative inverse in the truncated ring.  Throws std::domain_error("not a unit")
/// when the constant term is zero.
TruncPoly trunc_invert(const TruncPoly& p);

/// Laurent series in u = X - 1 with coefficients in Q[t]/(t^m), known up to u^max_order.
class USeries {
public:
  USeries(int modulus, int max_order);

  int modulus() const { return modulus_; }
  int max_order() const { return max_order_; }
  /// Lowest order with a nonzero coefficient, or max_order + 1 if the series is zero.
  int min_order() const;
  TruncPoly coeff(int k) const;
  const std::map<int, TruncPoly>& terms() const { return c_; }

  void add(int k, const TruncPoly& c);
  USeries& operator+=(const USeries& o);
  /// Multiplies every coefficient by c.
  USeries scaled(const TruncPoly& c) const;
  /// Multiplies by u^k; terms beyond max_order are dropped.
  USeries shifted(int k) const;

  friend bool operator==(const USeries&, const USeries&) = default;

private:
  int modulus_;
  int max_order_;
  std::map<int, TruncPoly> c_;
};

}  // namespace logarr
