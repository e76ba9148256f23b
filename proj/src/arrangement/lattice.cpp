#include "logarr/arrangement/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "logarr/core/linalg.hpp"

namespace logarr {

std::vector<std::vector<Rat>> canonical_basis(const std::vector<std::vector<Rat>>& vs) {
  if (vs.empty()) return {};
  const int cols = static_cast<int>(vs.front().size());
  std::vector<RatRow> rows;
  for (const auto& v : vs) {
    RatRow r;
    for (int j = 0; j < cols; ++j)
      if (v[static_cast<std::size_t>(j)] != 0) r.push(j, v[static_cast<std::size_t>(j)]);
    rows.push_back(std::move(r));
  }
  const auto ech = gauss_jordan(RatField{}, std::move(rows), cols, Exec::Serial);
  std::vector<std::vector<Rat>> out;
  for (const auto& r : ech.rows) {
    std::vector<Rat> dense(static_cast<std::size_t>(cols));
    for (std::size_t k = 0; k < r.size(); ++k) dense[static_cast<std::size_t>(r.idx[k])] = r.val[k];
    out.push_back(std::move(dense));
  }
  return out;
}

namespace {

/// Whether v lies in the span of a reduced echelon basis.
bool in_span(const std::vector<std::vector<Rat>>& basis, const std::vector<Rat>& v) {
  std::vector<Rat> w = v;
  for (const auto& b : basis) {
    const auto piv = std::find_if(b.begin(), b.end(), [](const Rat& x) { return x != 0; }) - b.begin();
    const Rat f = w[static_cast<std::size_t>(piv)];
    if (f == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= f * b[j];
  }
  return std::all_of(w.begin(), w.end(), [](const Rat& x) { return x == 0; });
}

std::uint64_t bits_of(const std::vector<int>& members) {
  std::uint64_t b = 0;
  for (int i : members) b |= std::uint64_t{1} << i;
  return b;
}

}  // namespace

int Lattice::top_rank() const { return elements_.empty() ? 0 : elements_.back().rank; }

std::vector<int> Lattice::at_rank(int r) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (elements_[static_cast<std::size_t>(i)].rank == r) out.push_back(i);
  return out;
}

bool Lattice::leq(int x, int y) const {
  const auto bx = member_bits_[static_cast<std::size_t>(x)], by = member_bits_[static_cast<std::size_t>(y)];
  return (bx & by) == bx;
}

int Lattice::find(const std::vector<std::vector<Rat>>& basis) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[static_cast<std::size_t>(i)].basis == basis) return i;
  return -1;
}

Lattice intersection_lattice(const Arrangement& a) {
  if (a.d() > 64) throw std::invalid_argument("lattice computation supports at most 64 hyperplanes");
  std::vector<std::vector<Rat>> forms;
  for (int i = 0; i < a.d(); ++i) forms.push_back(a.form_rat(i));

  Lattice l;
  std::vector<LatticeElement> level{LatticeElement{}};
  while (!level.empty()) {
    for (auto& e : level) l.elements_.push_back(e);
    std::map<std::vector<int>, LatticeElement> next;
    for (const auto& x : level) {
      const std::uint64_t xb = bits_of(x.members);
      for (int i = 0; i < a.d(); ++i) {
        if (xb >> i & 1) continue;
        auto span = x.basis;
        span.push_back(forms[static_cast<std::size_t>(i)]);
        LatticeElement y;
        y.basis = canonical_basis(span);
        y.rank = x.rank + 1;
        for (int j = 0; j < a.d(); ++j)
          if (in_span(y.basis, forms[static_cast<std::size_t>(j)])) y.members.push_back(j);
        next.try_emplace(y.members, std::move(y));
      }
    }
    level.clear();
    for (auto& [key, e] : next) level.push_back(std::move(e));
  }

  for (const auto& e : l.elements_) l.member_bits_.push_back(bits_of(e.members));
  l.mobius_.assign(l.elements_.size(), 0);
  for (int y = 0; y < l.size(); ++y) {
    if (y == 0) {
      l.mobius_[0] = 1;
      continue;
    }
    std::int64_t s = 0;
    for (int x = 0; x < y; ++x)
      if (l.elements_[static_cast<std::size_t>(x)].rank < l.elements_[static_cast<std::size_t>(y)].rank && l.leq(x, y))
        s += l.mobius_[static_cast<std::size_t>(x)];
    l.mobius_[static_cast<std::size_t>(y)] = -s;
  }
  return l;
}

UPoly poincare_poly(const Lattice& l) {
  std::vector<Rat> c(static_cast<std::size_t>(l.top_rank() + 1));
  for (int i = 0; i < l.size(); ++i) {
    const int r = l.element(i).rank;
    c[static_cast<std::size_t>(r)] += Rat(l.mobius(i)) * ((r % 2) ? -1 : 1);
  }
  return UPoly(c);
}

UPoly poincare_poly(const Arrangement& a) { return poincare_poly(intersection_lattice(a)); }

UPoly characteristic_poly(const Lattice& l, int n_vars) {
  std::vector<Rat> c(static_cast<std::size_t>(n_vars + 1));
  for (int i = 0; i < l.size(); ++i) c[static_cast<std::size_t>(n_vars - l.element(i).rank)] += Rat(l.mobius(i));
  return UPoly(c);
}

UPoly characteristic_poly(const Arrangement& a) { return characteristic_poly(intersection_lattice(a), a.n_vars()); }

UPoly chi_from_pi(const UPoly& pi, int n_vars) {
  if (pi.degree() > n_vars) throw std::invalid_argument("Poincare polynomial degree exceeds n_vars");
  std::vector<Rat> c(static_cast<std::size_t>(n_vars + 1));
  for (int k = 0; k <= pi.degree(); ++k) c[static_cast<std::size_t>(n_vars - k)] = pi[k] * ((k % 2) ? -1 : 1);
  return UPoly(c);
}

Localization localize(const Arrangement& a, const Lattice& l, int element) {
  if (element < 0 || element >= l.size()) throw std::out_of_range("unknown element");
  Localization out;
  std::vector<Form> fs;
  for (int i : l.element(element).members) {
    fs.push_back(a.form(i));
    out.embedding.push_back(i);
  }
  out.arrangement = make_arrangement(a.n_vars(), fs, a.name() + "@" + std::to_string(element));
  return out;
}

Localization localize(const Arrangement& a, const Lattice& l, const LatticeElement& x) {
  const int i = l.find(x.basis);
  if (i < 0) throw std::out_of_range("unknown element");
  return localize(a, l, i);
}

Essentialization essentialize(const Arrangement& a) {
  std::vector<std::vector<Rat>> forms;
  for (int i = 0; i < a.d(); ++i) forms.push_back(a.form_rat(i));
  const auto basis = canonical_basis(forms);
  std::vector<int> pivots;
  for (const auto& b : basis)
    pivots.push_back(static_cast<int>(std::find_if(b.begin(), b.end(), [](const Rat& x) { return x != 0; }) - b.begin()));
  std::vector<std::vector<Rat>> coords;
  for (const auto& f : forms) {
    std::vector<Rat> c;
    for (int p : pivots) c.push_back(f[static_cast<std::size_t>(p)]);
    coords.push_back(std::move(c));
  }
  Essentialization e;
  const int r = static_cast<int>(basis.size());
  e.arrangement = make_arrangement(r, coords, a.name());
  e.empty_factor_dim = a.n_vars() - r;
  return e;
}

std::vector<std::int64_t> mu_multiset(const Lattice& l, int r) {
  std::vector<std::int64_t> out;
  for (int i : l.at_rank(r)) out.push_back(l.mobius(i));
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace logarr
