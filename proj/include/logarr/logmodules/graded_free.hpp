#pragma once

#include <utility>
#include <vector>

#include "logarr/core/linalg.hpp"
#include "logarr/core/monomial.hpp"
#include "logarr/core/mpoly.hpp"

namespace logarr {

/// Graded free module sum_c S(-shift_c) over a polynomial ring in nvars variables.
/// In degree m, component c is spanned by the monomials of degree m - shift_c, in
/// graded-lex order; components are laid out one after another.
struct GradedFreeModule {
  int nvars = 0;
  std::vector<int> shifts;

  int components() const { return static_cast<int>(shifts.size()); }
  int dim(int m) const;
  int offset(int c, int m) const;
  /// Column index of monomial mono in component c (degree of mono must be m - shift_c).
  int column(int c, const Monomial& mono, int m) const;
  /// (component, monomial) of a column in degree m.
  std::pair<int, Monomial> locate(int col, int m) const;
  /// Lowest degree in which some component is nonzero.
  int min_degree() const;
};

/// Element of a graded free module: a sparse vector over the columns of one degree.
struct GradedVector {
  int degree = 0;
  RatRow vec;
};

/// mono * v, landing in degree v.degree + deg(mono).
GradedVector multiply(const GradedFreeModule& f, const GradedVector& v, const Monomial& mono);

/// Component polynomials of v.
std::vector<MPoly> component_polys(const GradedFreeModule& f, const GradedVector& v);

/// Reduces a rational row mod p; throws std::domain_error when p divides a denominator.
ModRow reduce_row(const ModField& field, const RatRow& r);

}  // namespace logarr
