#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logarr/core/monomial.hpp"
#include "logarr/core/rational.hpp"

namespace logarr {

/// Sparse multivariate polynomial over Q with terms kept in graded-lex order.
/// Zero coefficients are never stored.
class MPoly {
public:
  using Terms = std::map<Monomial, Rat, GrlexGreater>;

  explicit MPoly(int nvars = 0);
  MPoly(int nvars, const Rat& constant);

  static MPoly variable(int nvars, int i);
  static MPoly monomial(int nvars, const Monomial& m, const Rat& c = 1);
  /// sum_i coeffs[i] * x_i
  static MPoly linear_form(std::span<const Rat> coeffs);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rat coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rat& c);

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Common degree of all terms; nullopt if inhomogeneous.  Zero counts as homogeneous of degree 0.
  std::optional<int> homogeneous_degree() const;

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rat& leading_coeff() const { return terms_.begin()->second; }

  MPoly derivative(int i) const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rat& c);
  MPoly operator-() const;

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  MPoly times_monomial(const Monomial& m) const;
  MPoly pow(int e) const;

  /// Substitutes x_i -> images[i] (all images share one nvars).
  MPoly substitute(std::span<const MPoly> images) const;

  std::string str() const;

private:
  int nvars_;
  Terms terms_;
};

/// Division by a linear form with respect to its pivot variable:
/// g = l * quotient + remainder with the remainder free of x_pivot.
struct LinearDivision {
  MPoly quotient;
  MPoly remainder;
};
LinearDivision divide_by_linear(const MPoly& g, std::span<const Rat> form, int pivot);

/// Exact division; throws std::domain_error when l does not divide g.
MPoly exact_divide_linear(const MPoly& g, std::span<const Rat> form);

/// Determinant of a square matrix of polynomials by cofactor expansion (small sizes only).
MPoly determinant(const std::vector<std::vector<MPoly>>& m, int nvars);

}  // namespace logarr
