#pragma once

#include <map>
#include <string>
#include <vector>

#include "logarr/core/rational.hpp"

namespace logarr {

/// Dense univariate polynomial over Q, coefficients lowest degree first, no trailing zeros.
class UPoly {
public:
  UPoly() = default;
  UPoly(std::initializer_list<Rat> coeffs);
  explicit UPoly(std::vector<Rat> coeffs);
  static UPoly constant(const Rat& c) { return UPoly(std::vector<Rat>{c}); }
  static UPoly x() { return UPoly({0, 1}); }
  /// (1 + a x)
  static UPoly one_plus(const Rat& a) { return UPoly({1, a}); }

  /// -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat operator[](int k) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat operator()(const Rat& x) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rat& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rat& s) { return a *= s; }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  UPoly pow(int e) const;
  /// p(q(x))
  UPoly compose(const UPoly& q) const;
  /// Exact division; throws std::domain_error on a nonzero remainder.
  UPoly divide_exact(const UPoly& d) const;

  std::vector<std::int64_t> integer_coeffs() const;
  std::string str(const std::string& var = "t") const;

private:
  void trim();
  std::vector<Rat> c_;
};

/// binom(p(x), k) = p (p-1) ... (p-k+1) / k!  as a polynomial in x.
UPoly binomial_poly(const UPoly& p, int k);

/// Generalized binomial coefficient C(e, j) for any integer e and j >= 0.
Rat gen_binomial(long e, long j);

/// Finite Laurent polynomial in one variable X with rational coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const int, Rat>> terms);
  static LaurentPoly monomial(int e, const Rat& c = 1);
  /// Coefficients start at exponent min_exp.
  static LaurentPoly from_coeffs(int min_exp, const std::vector<Rat>& coeffs);

  bool is_zero() const { return t_.empty(); }
  const std::map<int, Rat>& terms() const { return t_; }
  Rat operator[](int e) const;
  int min_exponent() const;
  int max_exponent() const;

  void add_term(int e, const Rat& c);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rat& s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rat& s) { return a *= s; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly shifted(int k) const;
  Rat eval(const Rat& x) const;
  std::string str(const std::string& var = "X") const;

private:
  std::map<int, Rat> t_;
};

/// (1 - X)^k as a Laurent polynomial, k >= 0.
LaurentPoly one_minus_x_pow(int k);

}  // namespace logarr
