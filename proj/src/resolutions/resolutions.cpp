#include "logarr/resolutions/resolutions.hpp"

#include <algorithm>
#include <functional>

#include "logarr/core/linalg.hpp"
#include "logarr/core/monomial.hpp"
#include "logarr/logmodules/problem.hpp"

namespace logarr {

namespace {

std::string witness_text(const std::vector<int>& w) {
  std::string s = "genericity violated: forms {";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s + "} are dependent";
}

std::optional<std::vector<int>> dependent_subset(const Arrangement& a) {
  for (int k = 2; k <= std::min(a.n_vars(), a.d()); ++k)
    for (const auto& s : subsets_of(a.d(), k)) {
      std::vector<std::vector<Rat>> vs;
      for (int i : s) vs.push_back(a.form_rat(i));
      if (vector_rank(vs) < k) return s;
    }
  return std::nullopt;
}

std::int64_t free_dim(int nvars, int m) { return m < 0 ? 0 : dim_polys(nvars, m); }

}  // namespace

GenericityViolated::GenericityViolated(std::vector<int> witness)
    : std::invalid_argument(witness_text(witness)), witness_(std::move(witness)) {}

ZieglerData ziegler_matrix(const Arrangement& a) {
  const int nv = a.n_vars();
  if (a.d() < nv) throw std::invalid_argument("genericity violated: fewer forms than variables");
  if (auto w = dependent_subset(a)) throw GenericityViolated(*w);

  ZieglerData z;
  z.n_vars = nv;
  z.d = a.d();
  // Solve B^T c = l_i, where the rows of B are the first nv forms.
  for (int i = 0; i < a.d(); ++i) {
    RatMatrix aug(nv, nv + 1);
    for (int r = 0; r < nv; ++r) {
      for (int c = 0; c < nv; ++c) aug(r, c) = a.form_rat(c)[static_cast<std::size_t>(r)];
      aug(r, nv) = a.form_rat(i)[static_cast<std::size_t>(r)];
    }
    const DenseRref red = rref_reference(aug);
    std::vector<Rat> coeff(static_cast<std::size_t>(nv));
    for (int r = 0; r < nv; ++r) coeff[static_cast<std::size_t>(r)] = red.reduced(r, nv);
    z.coefficients.push_back(std::move(coeff));
  }

  const int cols = z.columns();
  z.tau.assign(static_cast<std::size_t>(z.d), std::vector<MPoly>(static_cast<std::size_t>(cols), MPoly(nv)));
  for (int c = 0; c < cols; ++c) {
    const int i = nv + c;
    const auto& ai = z.coefficients[static_cast<std::size_t>(i)];
    for (int j = 0; j < nv; ++j) z.tau[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] = MPoly::variable(nv, j) * ai[static_cast<std::size_t>(j)];
    z.tau[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = -MPoly::linear_form(ai);
  }
  z.source_twists.assign(static_cast<std::size_t>(cols), 0);
  z.target_twists.assign(static_cast<std::size_t>(z.d), 1);
  return z;
}

bool ZieglerReport::ok() const {
  return complex_ok && std::all_of(degrees.begin(), degrees.end(), [](const ZieglerDegree& g) { return g.ok(); });
}

std::optional<int> ZieglerReport::first_failure() const {
  for (const auto& g : degrees)
    if (!g.ok()) return g.m;
  return std::nullopt;
}

namespace {

// sum_j tau_{j,c} (Q / l_j) dl_j, the image of column c after clearing denominators.
bool columns_are_relations(const ZieglerData& z) {
  const int nv = z.n_vars;
  std::vector<MPoly> forms;
  for (const auto& c : z.coefficients) forms.push_back(MPoly::linear_form(c));
  for (int c = 0; c < z.columns(); ++c) {
    std::vector<MPoly> total(static_cast<std::size_t>(nv), MPoly(nv));
    for (int j = 0; j < z.d; ++j) {
      const MPoly& entry = z.tau[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
      if (entry.is_zero()) continue;
      MPoly others(nv, Rat(1));
      for (int k = 0; k < z.d; ++k)
        if (k != j) others = others * forms[static_cast<std::size_t>(k)];
      const MPoly scaled = entry * others;
      for (int q = 0; q < nv; ++q) total[static_cast<std::size_t>(q)] += scaled * z.coefficients[static_cast<std::size_t>(j)][static_cast<std::size_t>(q)];
    }
    for (const auto& t : total)
      if (!t.is_zero()) return false;
  }
  return true;
}

bool tau_injective(const ZieglerData& z, int m) {
  const int cols = z.columns();
  if (cols == 0 || m < 0) return true;
  const auto& src = monomial_basis(z.n_vars, m);
  const auto& dst = monomial_basis(z.n_vars, m + 1);
  const int nsrc = static_cast<int>(src.monomials().size());
  const int ndst = static_cast<int>(dst.monomials().size());
  std::vector<RatRow> rows(static_cast<std::size_t>(z.d * ndst));
  for (int c = 0; c < cols; ++c)
    for (int s = 0; s < nsrc; ++s) {
      const int col = c * nsrc + s;
      for (int j = 0; j < z.d; ++j)
        for (const auto& [mono, coeff] : z.tau[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)].terms()) {
          const int r = j * ndst + dst.index_of(mono * src.monomials()[static_cast<std::size_t>(s)]);
          rows[static_cast<std::size_t>(r)].push(col, coeff);
        }
    }
  return echelon_rank(RatField{}, std::move(rows), cols * nsrc) == cols * nsrc;
}

}  // namespace

ZieglerReport ziegler_check(const Arrangement& a, int lo, int hi, Backend backend) {
  ZieglerReport rep;
  rep.data = ziegler_matrix(a);
  rep.complex_ok = columns_are_relations(rep.data);
  const GradedDimTable dims = graded_dims(a, ModuleSelector{Side::Form, 1, false}, lo, hi, backend);
  const int nv = a.n_vars();
  for (int m = lo; m <= hi; ++m) {
    ZieglerDegree g;
    g.m = m;
    g.module_dim = dims.dims.at(m);
    g.predicted = a.d() * free_dim(nv, m + 1) - rep.data.columns() * free_dim(nv, m);
    g.injective = tau_injective(rep.data, m);
    rep.degrees.push_back(g);
  }
  return rep;
}

std::int64_t LebeltTerms::euler_dim(int n_vars, int m) const {
  std::int64_t total = 0;
  for (const auto& t : terms) {
    std::int64_t dim = 0;
    for (int tw : t.twists) dim += free_dim(n_vars, m + tw);
    total += (t.i % 2 ? -1 : 1) * dim;
  }
  return total;
}

std::int64_t LebeltTerms::euler_rank() const {
  std::int64_t total = 0;
  for (const auto& t : terms) total += (t.i % 2 ? -1 : 1) * t.rank;
  return total;
}

LebeltTerms lebelt_terms(const std::vector<int>& f0_twists, const std::vector<int>& f1_twists, int p) {
  if (p < 1) throw std::invalid_argument("exterior degree must be positive");
  LebeltTerms out;
  out.p = p;
  const int s0 = static_cast<int>(f0_twists.size());
  const int s1 = static_cast<int>(f1_twists.size());
  for (int i = 0; i <= p; ++i) {
    // Divided-power basis: multisets of size i from F1.
    std::vector<int> div_sums;
    std::vector<int> pick;
    std::function<void(int, int, int)> rec = [&](int start, int left, int sum) {
      if (left == 0) {
        div_sums.push_back(sum);
        return;
      }
      for (int k = start; k < s1; ++k) rec(k, left - 1, sum + f1_twists[static_cast<std::size_t>(k)]);
    };
    rec(0, i, 0);
    LebeltTerm term;
    term.i = i;
    if (p - i <= s0)
      for (const auto& sub : subsets_of(s0, p - i)) {
        int wedge = 0;
        for (int k : sub) wedge += f0_twists[static_cast<std::size_t>(k)];
        for (int ds : div_sums) term.twists.push_back(ds + wedge);
      }
    std::sort(term.twists.rbegin(), term.twists.rend());
    term.rank = static_cast<std::int64_t>(term.twists.size());
    out.terms.push_back(std::move(term));
  }
  return out;
}

bool LebeltReport::euler_ok() const {
  return !euler.empty() && std::all_of(euler.begin(), euler.end(), [](const auto& kv) { return kv.second.first == kv.second.second; });
}

bool LebeltReport::wedge_ok() const {
  return !wedge.empty() && std::all_of(wedge.begin(), wedge.end(), [](const auto& kv) { return kv.second.equal(); });
}

LebeltReport lebelt_check(const Arrangement& a, int p, int lo, int hi, Side side, const LebeltOptions& opts) {
  LebeltReport rep;
  rep.side = side;
  rep.p = p;
  const int n = a.n();
  const std::string name = side == Side::Form ? "Omega^1" : "D^1";
  if (p < 1 || p > n - 1) {
    rep.hypothesis = "exterior degree " + std::to_string(p) + " outside 1.." + std::to_string(n - 1);
    return rep;
  }
  if (!local_freeness_test(a).locally_free) {
    rep.hypothesis = "not locally free";
    return rep;
  }
  rep.base = betti_probe(a, ModuleSelector{side, 1, false});
  if (!rep.base.complete || rep.base.pdim() != 1) {
    rep.hypothesis = "pdim " + name + " is not 1";
    return rep;
  }
  rep.hypothesis_ok = true;
  std::vector<int> f0, f1;
  for (int g : rep.base.row(0)) f0.push_back(-g);
  for (int g : rep.base.row(1)) f1.push_back(-g);
  rep.terms = lebelt_terms(f0, f1, p);

  const ModuleSelector sel{side, p, false};
  const GradedDimTable dims = graded_dims(a, sel, lo, hi, opts.backend);
  for (int m = lo; m <= hi; ++m) {
    rep.euler[m] = {rep.terms.euler_dim(a.n_vars(), m), dims.dims.at(m)};
    if (opts.compare_wedge) rep.wedge[m] = wedge_compare(a, side, p, m);
  }
  if (opts.probe_pdim) {
    rep.pdim = betti_probe(a, sel).pdim();
    rep.pdim_top = betti_probe(a, ModuleSelector{side, a.n_vars(), false}).pdim();
  }
  return rep;
}

}  // namespace logarr
