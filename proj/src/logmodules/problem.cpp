#include "logarr/logmodules/problem.hpp"

#include <algorithm>
#include <stdexcept>

namespace logarr {

std::string ModuleSelector::str() const {
  if (euler_complement) return "D^1_0";
  return std::string(side == Side::Der ? "D^" : "Omega^") + std::to_string(p);
}

void validate(const ModuleSelector& sel, int n_vars) {
  if (sel.p < 0 || sel.p > n_vars) throw std::invalid_argument("invalid exterior degree");
  if (sel.euler_complement && (sel.side != Side::Der || sel.p != 1))
    throw std::invalid_argument("the Euler complement is defined for D^1 only");
}

std::vector<std::vector<int>> subsets_of(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < k; ++q) cur[static_cast<std::size_t>(q)] = cur[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

namespace {

int subset_index(const std::vector<std::vector<int>>& all, const std::vector<int>& s) {
  const auto it = std::lower_bound(all.begin(), all.end(), s);
  return static_cast<int>(it - all.begin());
}

}  // namespace

LogModuleProblem::LogModuleProblem(const Arrangement& a, const ModuleSelector& sel) : arr_(a), sel_(sel) {
  validate(sel, a.n_vars());
  const int nv = a.n_vars();
  subsets_ = subsets_of(nv, sel.p);
  ambient_.nvars = nv;
  ambient_.shifts.assign(subsets_.size(), sel.side == Side::Der ? 0 : -a.d());
  for (int i = 0; i < a.d(); ++i) {
    forms_.push_back(a.form_rat(i));
    const auto& f = forms_.back();
    pivot_.push_back(static_cast<int>(std::find_if(f.begin(), f.end(), [](const Rat& x) { return x != 0; }) - f.begin()));
  }
  s_powers_.resize(static_cast<std::size_t>(a.d()));
}

int LogModuleProblem::min_degree() const { return sel_.side == Side::Der ? 0 : -arr_.d(); }

int LogModuleProblem::expected_rank() const {
  const auto r = binomial(arr_.n_vars(), sel_.p);
  return static_cast<int>(r.get_si()) - (sel_.euler_complement ? 1 : 0);
}

const MPoly& LogModuleProblem::s_power(int i, int e) const {
  auto& powers = s_powers_[static_cast<std::size_t>(i)];
  if (powers.empty()) {
    const int nv = arr_.n_vars();
    const auto& f = forms_[static_cast<std::size_t>(i)];
    const int piv = pivot_[static_cast<std::size_t>(i)];
    MPoly s(nv);
    for (int k = 0; k < nv; ++k)
      if (k != piv && f[static_cast<std::size_t>(k)] != 0)
        s.add_term(Monomial::var(k), -f[static_cast<std::size_t>(k)] / f[static_cast<std::size_t>(piv)]);
    powers.emplace_back(nv, 1);
    powers.push_back(s);
  }
  while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * powers[1]);
  return powers[static_cast<std::size_t>(e)];
}

std::vector<std::pair<int, Rat>> LogModuleProblem::restrict_monomial(int i, const Monomial& mu) const {
  const int piv = pivot_[static_cast<std::size_t>(i)];
  const int e = mu[piv];
  const Monomial rest = mu.with(piv, 0);
  const auto& basis = monomial_basis(arr_.n_vars(), mu.degree());
  std::vector<std::pair<int, Rat>> out;
  if (e == 0) {
    out.emplace_back(basis.index_of(mu), Rat(1));
    return out;
  }
  for (const auto& [m, c] : s_power(i, e).terms()) out.emplace_back(basis.index_of(m * rest), c);
  return out;
}

MPoly LogModuleProblem::quotient_monomial(int i, const Monomial& mu) const {
  const int piv = pivot_[static_cast<std::size_t>(i)];
  const int e = mu[piv];
  MPoly q(arr_.n_vars());
  if (e == 0) return q;
  const Monomial rest = mu.with(piv, 0);
  // x^e - s^e = (x - s) sum_k x^k s^(e-1-k) and x - s = l / a_pivot.
  for (int k = 0; k < e; ++k) q += s_power(i, e - 1 - k).times_monomial(rest * Monomial::var(piv, k));
  q *= 1 / forms_[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv)];
  return q;
}

std::vector<RatRow> LogModuleProblem::conditions(int m) const {
  const int nv = arr_.n_vars();
  const int d = arr_.d();
  const int p = sel_.p;
  const int coeff_deg = sel_.side == Side::Der ? m : m + d;
  if (coeff_deg < 0) return {};
  const auto& basis = monomial_basis(nv, coeff_deg);
  const int nb = basis.size();

  // Row blocks are indexed by (hyperplane, target subset); inside a block by monomial.
  const bool der = sel_.side == Side::Der;
  const auto targets = der ? subsets_of(nv, p - 1) : subsets_of(nv, p + 1);
  const int ntargets = static_cast<int>(targets.size());
  const bool has_restriction_rows = der ? p >= 1 : p <= nv - 1;
  std::vector<RatRow> rows;
  if (has_restriction_rows) rows.resize(static_cast<std::size_t>(d) * static_cast<std::size_t>(ntargets) * static_cast<std::size_t>(nb));

  // Restrictions depend only on (hyperplane, monomial); computed once per degree.
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> restricted;
  if (has_restriction_rows) {
    restricted.assign(static_cast<std::size_t>(d), std::vector<std::vector<std::pair<int, Rat>>>(static_cast<std::size_t>(nb)));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < nb; ++k) restricted[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = restrict_monomial(i, basis[k]);
  }

  const int euler_base = static_cast<int>(rows.size());
  const auto& low_basis = monomial_basis(nv, coeff_deg - 1);
  if (sel_.euler_complement) rows.resize(rows.size() + static_cast<std::size_t>(low_basis.size()));

  int col = 0;
  for (std::size_t ci = 0; ci < subsets_.size(); ++ci) {
    const auto& I = subsets_[ci];
    for (int k = 0; k < nb; ++k, ++col) {
      if (has_restriction_rows) {
        for (int q = 0; q < nv; ++q) {
          const auto pos = std::find(I.begin(), I.end(), q);
          const bool in_I = pos != I.end();
          if (in_I != der) continue;
          std::vector<int> T;
          int sign = 1;
          if (der) {
            T = I;
            T.erase(T.begin() + (pos - I.begin()));
            if ((pos - I.begin()) % 2) sign = -1;
          } else {
            T = I;
            const auto at = std::lower_bound(T.begin(), T.end(), q);
            if ((at - T.begin()) % 2) sign = -1;
            T.insert(at, q);
          }
          const int t = subset_index(targets, T);
          for (int i = 0; i < d; ++i) {
            const Rat& a = forms_[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)];
            if (a == 0) continue;
            const std::size_t block = (static_cast<std::size_t>(i) * static_cast<std::size_t>(ntargets) + static_cast<std::size_t>(t)) * static_cast<std::size_t>(nb);
            for (const auto& [nu, c] : restricted[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
              rows[block + static_cast<std::size_t>(nu)].push(col, c * a * sign);
          }
        }
      }
      if (sel_.euler_complement) {
        // theta(Q) = Q * sum_i quotient(theta(l_i)) on D^1, so D^1_0 adds sum_i quotient = 0.
        const int q = I[0];
        MPoly total(nv);
        for (int i = 0; i < d; ++i) {
          const Rat& a = forms_[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)];
          if (a != 0) total += quotient_monomial(i, basis[k]) * a;
        }
        for (const auto& [mono, c] : total.terms())
          rows[static_cast<std::size_t>(euler_base + low_basis.index_of(mono))].push(col, c);
      }
    }
  }
  std::erase_if(rows, [](const RatRow& r) { return r.empty(); });
  return rows;
}

SyzygyProblem::SyzygyProblem(GradedFreeModule target, std::vector<GradedVector> generators)
    : target_(std::move(target)), gens_(std::move(generators)) {
  source_.nvars = target_.nvars;
  for (const auto& g : gens_) source_.shifts.push_back(g.degree);
}

std::vector<RatRow> SyzygyProblem::conditions(int m) const {
  std::vector<RatRow> rows(static_cast<std::size_t>(target_.dim(m)));
  int col = 0;
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    const auto& basis = monomial_basis(source_.nvars, m - gens_[g].degree);
    for (int k = 0; k < basis.size(); ++k, ++col) {
      const GradedVector img = multiply(target_, gens_[g], basis[k]);
      for (std::size_t e = 0; e < img.vec.size(); ++e) rows[static_cast<std::size_t>(img.vec.idx[e])].push(col, img.vec.val[e]);
    }
  }
  std::erase_if(rows, [](const RatRow& r) { return r.empty(); });
  return rows;
}

}  // namespace logarr
