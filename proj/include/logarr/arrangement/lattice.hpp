#pragma once

#include <cstdint>
#include <vector>

#include "logarr/arrangement/arrangement.hpp"
#include "logarr/core/univariate.hpp"

namespace logarr {

/// Flat of the arrangement, identified by the reduced echelon basis of the linear
/// forms vanishing on it.
struct LatticeElement {
  std::vector<std::vector<Rat>> basis;
  int rank = 0;
  std::vector<int> members;
};

class Lattice {
public:
  const std::vector<LatticeElement>& elements() const { return elements_; }
  const LatticeElement& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(elements_.size()); }
  std::int64_t mobius(int i) const { return mobius_[static_cast<std::size_t>(i)]; }
  int top_rank() const;
  /// Indices of all elements of rank r, in lattice order.
  std::vector<int> at_rank(int r) const;
  /// X <= Y, i.e. the forms of X lie in the span of Y.
  bool leq(int x, int y) const;
  /// Index of the element with this canonical basis, or -1.
  int find(const std::vector<std::vector<Rat>>& basis) const;

  friend Lattice intersection_lattice(const Arrangement& a);

private:
  std::vector<LatticeElement> elements_;
  std::vector<std::int64_t> mobius_;
  std::vector<std::uint64_t> member_bits_;
};

/// Elements sorted by (rank, member list); the bottom V comes first.
Lattice intersection_lattice(const Arrangement& a);

/// Reduced echelon basis of the span of the given rational vectors.
std::vector<std::vector<Rat>> canonical_basis(const std::vector<std::vector<Rat>>& vs);

/// pi(A,t) = sum_X mu(X) (-t)^rank X.
UPoly poincare_poly(const Lattice& l);
UPoly poincare_poly(const Arrangement& a);
/// chi(A,t) = sum_X mu(X) t^dim X.
UPoly characteristic_poly(const Lattice& l, int n_vars);
UPoly characteristic_poly(const Arrangement& a);
/// t^{n+1} pi(-1/t), the polynomial chi must equal.
UPoly chi_from_pi(const UPoly& pi, int n_vars);

struct Localization {
  Arrangement arrangement;
  /// Index in the parent of every hyperplane of the localization.
  std::vector<int> embedding;
};
/// Hyperplanes containing X.  Throws std::out_of_range("unknown element").
Localization localize(const Arrangement& a, const Lattice& l, int element);
Localization localize(const Arrangement& a, const Lattice& l, const LatticeElement& x);

struct Essentialization {
  Arrangement arrangement;
  int empty_factor_dim = 0;
};
/// Rewrites the forms in the coordinates of a basis of their span.
Essentialization essentialize(const Arrangement& a);

/// mu values of the rank-r elements, sorted descending.
std::vector<std::int64_t> mu_multiset(const Lattice& l, int r);

}  // namespace logarr
