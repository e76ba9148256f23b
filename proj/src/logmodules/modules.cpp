#include "logarr/logmodules/modules.hpp"

#include <algorithm>
#include <numeric>

#include "logarr/arrangement/lattice.hpp"

namespace logarr {

namespace {

int start_degree(const LogModuleProblem& prob) { return prob.min_degree(); }

void run_engine_to(GeneratorEngine& eng, int hi) {
  while (eng.next_degree() <= hi) eng.step();
}

}  // namespace

std::int64_t graded_dim(const Arrangement& a, const ModuleSelector& sel, int m, Backend backend) {
  const LogModuleProblem prob(a, sel);
  const ModField field(default_prime());
  const std::int64_t upper = modular_kernel_dim(prob, m, field);
  if (backend == Backend::Modular || upper == 0) return upper;
  GeneratorEngine eng(prob, std::min(m, start_degree(prob)), default_prime());
  run_engine_to(eng, m);
  return eng.dims().at(m);
}

GradedDimTable graded_dims(const Arrangement& a, const ModuleSelector& sel, int lo, int hi, Backend backend) {
  const LogModuleProblem prob(a, sel);
  GradedDimTable t;
  t.selector = sel;
  if (backend == Backend::Modular) {
    t.probabilistic = true;
    const ModField field(default_prime());
    for (int m = lo; m <= hi; ++m) t.dims[m] = modular_kernel_dim(prob, m, field);
    return t;
  }
  GeneratorEngine eng(prob, std::min(lo, start_degree(prob)), default_prime());
  run_engine_to(eng, hi);
  for (int m = lo; m <= hi; ++m) t.dims[m] = eng.dims().at(m);
  return t;
}

std::vector<int> GeneratorSet::degrees() const {
  std::vector<int> out;
  for (const auto& g : generators) out.push_back(g.degree);
  return out;
}

GeneratorSet minimal_generators(const Arrangement& a, const ModuleSelector& sel, int cutoff) {
  const LogModuleProblem prob(a, sel);
  GeneratorEngine eng(prob, start_degree(prob), default_prime());
  run_engine_to(eng, cutoff);
  return GeneratorSet{sel, cutoff, prob.ambient(), eng.generators()};
}

FreenessReport freeness_test(const Arrangement& a) {
  const Arrangement ess = essentialize(a).arrangement;
  const int r = ess.n_vars();
  const int d = ess.d();
  FreenessReport rep;
  if (r == 0) {
    rep.free = true;
    rep.certificate = Rat(1);
    rep.reason = "empty arrangement";
    return rep;
  }
  // Exponents of a free essential arrangement are positive and sum to d.
  rep.search_bound = d - r + 1;
  const LogModuleProblem prob(ess, ModuleSelector{Side::Der, 1, false});
  GeneratorEngine eng(prob, 0, default_prime());
  while (eng.next_degree() <= rep.search_bound && static_cast<int>(eng.generators().size()) <= r) eng.step();
  const auto& gens = eng.generators();
  for (const auto& g : gens) rep.generator_degrees.push_back(g.degree);

  if (static_cast<int>(gens.size()) != r) {
    rep.reason = static_cast<int>(gens.size()) > r ? "more than rank-many minimal generators"
                                                    : "fewer than rank-many generators below the bound";
    return rep;
  }
  const int sum = std::accumulate(rep.generator_degrees.begin(), rep.generator_degrees.end(), 0);
  if (sum != d) {
    rep.reason = "generator degrees do not sum to the number of hyperplanes";
    return rep;
  }
  std::vector<std::vector<MPoly>> mat;
  for (const auto& g : gens) mat.push_back(component_polys(prob.ambient(), g));
  const MPoly det = determinant(mat, r);
  const MPoly q = ess.Q();
  if (det.is_zero()) {
    rep.reason = "Saito determinant vanishes";
    return rep;
  }
  const Rat c = det.leading_coeff() / q.leading_coeff();
  if (!(det == q * c)) {
    rep.reason = "Saito determinant is not a multiple of Q";
    return rep;
  }
  rep.free = true;
  rep.certificate = c;
  rep.exponents = rep.generator_degrees;
  std::sort(rep.exponents.begin(), rep.exponents.end());
  rep.reason = "Saito certificate";
  return rep;
}

LocalFreenessReport local_freeness_test(const Arrangement& input) {
  const Arrangement a = input.essential() ? input : essentialize(input).arrangement;
  const Lattice l = intersection_lattice(a);
  std::vector<int> todo;
  for (int x = 0; x < l.size(); ++x)
    if (l.element(x).rank >= 1 && l.element(x).rank < a.n_vars()) todo.push_back(x);

  LocalFreenessReport rep;
  rep.elements.resize(todo.size());
  const int nt = static_cast<int>(todo.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < nt; ++k) {
    const int x = todo[static_cast<std::size_t>(k)];
    ElementVerdict v;
    v.element = x;
    v.rank = l.element(x).rank;
    v.members = l.element(x).members;
    v.report = freeness_test(localize(a, l, x).arrangement);
    rep.elements[static_cast<std::size_t>(k)] = std::move(v);
  }
  for (const auto& v : rep.elements) {
    if (v.report.free) continue;
    rep.locally_free = false;
    if (!rep.witness) rep.witness = v;
  }
  return rep;
}

std::optional<HilbertSeries> series_from_dims(const std::map<int, std::int64_t>& dims, int n_vars, int window,
                                              std::optional<int> rank) {
  if (dims.empty() || static_cast<int>(dims.size()) < window) return std::nullopt;
  const int lo = dims.begin()->first;
  std::vector<std::int64_t> seq;
  for (const auto& [m, v] : dims) seq.push_back(v);
  const auto coeffs = numerator_from_dims(seq, n_vars);
  const std::size_t keep = coeffs.size() - static_cast<std::size_t>(window);
  for (std::size_t k = keep; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) return std::nullopt;
  HilbertSeries h;
  h.numerator = LaurentPoly::from_coeffs(lo, std::vector<Rat>(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(keep)));
  h.denom_power = n_vars;
  h.cutoff = dims.rbegin()->first;
  h.stable_window = window;
  if (rank && h.numerator.eval(1) != *rank) return std::nullopt;
  return h;
}

HilbertSeries hilbert_series(const Arrangement& a, const ModuleSelector& sel, int cutoff, Backend backend) {
  const LogModuleProblem prob(a, sel);
  const auto table = graded_dims(a, sel, prob.min_degree(), cutoff, backend);
  const auto h = series_from_dims(table.dims, a.n_vars(), a.n_vars() + 1, prob.expected_rank());
  if (!h) throw CutoffTooSmall("Hilbert numerator of " + sel.str() + " not stable at degree " + std::to_string(cutoff), table);
  return *h;
}

HilbertSeries hilbert_series_auto(const Arrangement& a, const ModuleSelector& sel, int max_cutoff, Backend backend) {
  const LogModuleProblem prob(a, sel);
  const int window = a.n_vars() + 1;
  GradedDimTable table;
  table.selector = sel;
  table.probabilistic = backend == Backend::Modular;
  const ModField field(default_prime());
  GeneratorEngine eng(prob, prob.min_degree(), default_prime());
  for (int m = prob.min_degree(); m <= max_cutoff; ++m) {
    if (backend == Backend::Modular) {
      table.dims[m] = modular_kernel_dim(prob, m, field);
    } else {
      eng.step();
      table.dims[m] = eng.dims().at(m);
    }
    if (auto h = series_from_dims(table.dims, a.n_vars(), window, prob.expected_rank())) return *h;
  }
  throw CutoffTooSmall("Hilbert numerator of " + sel.str() + " not stable up to degree " + std::to_string(max_cutoff),
                       table);
}

int BettiTable::pdim() const {
  int p = -1;
  for (const auto& [key, mult] : entries) p = std::max(p, key.first);
  return p;
}

std::vector<int> BettiTable::row(int i) const {
  std::vector<int> out;
  for (const auto& [key, mult] : entries)
    if (key.first == i)
      for (std::int64_t k = 0; k < mult; ++k) out.push_back(key.second);
  return out;
}

HilbertSeries BettiTable::series(int n_vars) const {
  HilbertSeries h;
  h.denom_power = n_vars;
  for (const auto& [key, mult] : entries) h.numerator.add_term(key.second, Rat(static_cast<long>(mult)) * ((key.first % 2) ? -1 : 1));
  return h;
}

BettiTable betti_probe(const Arrangement& a, const ModuleSelector& sel, const BettiOptions& opts) {
  const LogModuleProblem prob(a, sel);
  const int n = a.n();
  BettiTable t;
  t.window = opts.window > 0 ? opts.window : n + 2;
  const int max_index = opts.max_index >= 0 ? opts.max_index : a.n_vars() + 1;
  const bool adaptive = !opts.gen_cutoff || !opts.syz_cutoff;
  const int gen_cap = opts.gen_cutoff.value_or(a.d());
  const int syz_cap = opts.syz_cutoff.value_or(a.d() + n + 2);

  // Stage 0: the module itself.
  GeneratorEngine e0(prob, prob.min_degree(), default_prime());
  if (adaptive) {
    GradedDimTable partial;
    partial.selector = sel;
    bool stable = false;
    while (e0.next_degree() <= std::max(gen_cap, syz_cap)) {
      const int m = e0.step();
      const int last = e0.generators().empty() ? prob.min_degree() - 1 : e0.generators().back().degree;
      if (m - last >= t.window && series_from_dims(e0.dims(), a.n_vars(), t.window, prob.expected_rank())) {
        stable = true;
        break;
      }
    }
    partial.dims = e0.dims();
    if (!stable) throw CutoffTooSmall("generators of " + sel.str() + " did not stabilize", partial);
    t.gen_cutoff = e0.next_degree() - 1;
    for (const auto& g : e0.generators())
      if (g.degree > gen_cap) throw CutoffTooSmall("generator of " + sel.str() + " above the generator cap", partial);
  } else {
    t.gen_cutoff = *opts.gen_cutoff;
    run_engine_to(e0, *opts.syz_cutoff);
    GradedDimTable partial{sel, e0.dims(), false};
    for (const auto& g : e0.generators()) {
      if (g.degree > t.gen_cutoff)
        throw CutoffTooSmall("generator of " + sel.str() + " in degree " + std::to_string(g.degree) + " above gen_cutoff",
                             partial);
      if (g.degree > *opts.syz_cutoff - t.window)
        throw CutoffTooSmall("no stabilization window after generator degree " + std::to_string(g.degree), partial);
    }
  }
  for (const auto& g : e0.generators()) ++t.entries[{0, g.degree}];

  GradedFreeModule target = prob.ambient();
  std::vector<GradedVector> gens = e0.generators();
  int reached = e0.next_degree() - 1;
  for (int index = 1;; ++index) {
    if (gens.empty()) {
      t.complete = true;
      break;
    }
    if (index > max_index) break;
    const SyzygyProblem syz(target, gens);
    int prev_max = gens.front().degree, prev_min = gens.front().degree;
    for (const auto& g : gens) {
      prev_max = std::max(prev_max, g.degree);
      prev_min = std::min(prev_min, g.degree);
    }
    GeneratorEngine e(syz, prev_min, default_prime());
    if (adaptive) {
      bool stable = false;
      while (e.next_degree() <= syz_cap) {
        const int m = e.step();
        const int last = std::max(prev_max, e.generators().empty() ? prev_max : e.generators().back().degree);
        if (m - last >= t.window) {
          stable = true;
          break;
        }
      }
      if (!stable) throw CutoffTooSmall("syzygies at index " + std::to_string(index) + " did not stabilize by degree " +
                                        std::to_string(syz_cap));
      reached = std::max(reached, e.next_degree() - 1);
    } else {
      run_engine_to(e, *opts.syz_cutoff);
      for (const auto& g : e.generators())
        if (g.degree > *opts.syz_cutoff - t.window)
          throw CutoffTooSmall("no stabilization window after syzygy degree " + std::to_string(g.degree) + " at index " +
                               std::to_string(index));
      if (prev_max > *opts.syz_cutoff - t.window)
        throw CutoffTooSmall("no stabilization window above index " + std::to_string(index - 1));
    }
    for (const auto& g : e.generators()) ++t.entries[{index, g.degree}];
    target = syz.ambient();
    gens = e.generators();
  }
  t.syz_cutoff = adaptive ? reached : *opts.syz_cutoff;
  return t;
}

namespace {

/// Coefficients of the wedge of the given elements of the first module, one polynomial per
/// p-subset of variables.
std::vector<MPoly> wedge(const std::vector<std::vector<MPoly>>& factors, const std::vector<std::vector<int>>& subsets, int nvars) {
  const std::size_t p = factors.size();
  std::vector<MPoly> out;
  for (const auto& I : subsets) {
    std::vector<std::vector<MPoly>> minor(p, std::vector<MPoly>(p, MPoly(nvars)));
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b) minor[a][b] = factors[a][static_cast<std::size_t>(I[b])];
    out.push_back(determinant(minor, nvars));
  }
  return out;
}

GradedVector to_vector(const GradedFreeModule& f, const std::vector<MPoly>& comps, int degree) {
  std::vector<std::pair<int, Rat>> entries;
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (const auto& [mono, coef] : comps[c].terms()) entries.emplace_back(f.column(static_cast<int>(c), mono, degree), coef);
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  GradedVector v;
  v.degree = degree;
  for (auto& [c, val] : entries) v.vec.push(c, val);
  return v;
}

}  // namespace

WedgeComparison wedge_compare(const Arrangement& a, Side side, int p, int m) {
  const ModuleSelector target_sel{side, p, false};
  validate(target_sel, a.n_vars());
  const LogModuleProblem target(a, target_sel);
  const LogModuleProblem first(a, ModuleSelector{side, 1, false});
  WedgeComparison out;
  const ModField field(default_prime());
  if (p == 0) {
    out.module_dim = out.wedge_image = dim_polys(a.n_vars(), m);
    return out;
  }

  // Lowest nonzero degree of the first module bounds how high a factor can sit.
  int lowest = first.min_degree();
  while (modular_kernel_dim(first, lowest, field) == 0 && lowest < m + a.d()) ++lowest;
  const int cutoff = m - (p - 1) * lowest;
  GeneratorEngine eng(first, first.min_degree(), default_prime());
  run_engine_to(eng, cutoff);
  const auto& gens = eng.generators();

  std::vector<std::vector<MPoly>> polys;
  for (const auto& g : gens) polys.push_back(component_polys(first.ambient(), g));
  // Forms stand for eta / Q; the wedge of p of them is (eta_1 ^ ... ^ eta_p) / Q^p.
  std::vector<std::vector<Rat>> forms;
  for (int i = 0; i < a.d(); ++i) forms.push_back(a.form_rat(i));

  std::vector<GradedVector> span;
  const auto choice = subsets_of(static_cast<int>(gens.size()), p);
  for (const auto& c : choice) {
    int deg = 0;
    std::vector<std::vector<MPoly>> factors;
    for (int k : c) {
      deg += gens[static_cast<std::size_t>(k)].degree;
      factors.push_back(polys[static_cast<std::size_t>(k)]);
    }
    if (deg > m) continue;
    auto comps = wedge(factors, target.subsets(), a.n_vars());
    if (side == Side::Form)
      for (auto& poly : comps)
        for (int rep = 0; rep < p - 1; ++rep)
          for (const auto& f : forms) poly = exact_divide_linear(poly, f);
    const GradedVector w = to_vector(target.ambient(), comps, deg);
    for (const auto& mono : monomial_basis(a.n_vars(), m - deg).monomials()) span.push_back(multiply(target.ambient(), w, mono));
  }

  const int ncols = target.ambient().dim(m);
  std::vector<ModRow> mod_rows;
  bool reducible = true;
  try {
    for (const auto& v : span) mod_rows.push_back(reduce_row(field, v.vec));
  } catch (const std::domain_error&) {
    reducible = false;
  }
  const std::int64_t upper = modular_kernel_dim(target, m, field);
  if (reducible) {
    const std::int64_t lower = echelon_rank(field, std::move(mod_rows), ncols);
    if (lower == upper) {
      out.wedge_image = out.module_dim = upper;
      return out;
    }
  }
  std::vector<RatRow> rows;
  for (const auto& v : span) rows.push_back(v.vec);
  out.wedge_image = echelon_rank(RatField{}, std::move(rows), ncols);
  out.module_dim = exact_kernel_dim(target, m);
  return out;
}

bool duality_check_free(const Arrangement& a, int p) {
  if (!freeness_test(a).free) throw std::invalid_argument("duality check needs a free arrangement");
  auto der = minimal_generators(a, ModuleSelector{Side::Der, p, false}, a.d()).degrees();
  auto form = minimal_generators(a, ModuleSelector{Side::Form, p, false}, 0).degrees();
  for (auto& x : form) x = -x;
  std::sort(der.begin(), der.end());
  std::sort(form.begin(), form.end());
  return der == form;
}

}  // namespace logarr
