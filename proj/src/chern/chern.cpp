#include "logarr/chern/chern.hpp"

#include <algorithm>

#include "logarr/arrangement/lattice.hpp"
#include "logarr/logmodules/problem.hpp"

namespace logarr {

TruncChernPoly::TruncChernPoly(int n_, TruncPoly c_, Tag tag_) : n(n_), c(std::move(c_)), tag(tag_) {
  if (c.modulus() != n + 1) throw std::invalid_argument("Chern polynomial modulus must be n+1");
}

TruncChernPoly chern_split(const std::vector<int>& twists, int n) {
  TruncPoly c(n + 1, 1);
  for (int a : twists) c = c * TruncPoly(n + 1, {Rat(1), Rat(a)});
  return {n, c};
}

TruncChernPoly chern_from_betti(const BettiTable& b, int n) {
  if (!b.complete) throw std::invalid_argument("resolution incomplete");
  TruncPoly c(n + 1, 1);
  for (const auto& [key, mult] : b.entries) {
    const TruncPoly f(n + 1, {Rat(1), Rat(-key.second)});
    const int e = static_cast<int>(mult) * ((key.first % 2) ? -1 : 1);
    c = c * f.pow(e);
  }
  return {n, c};
}

TruncChernPoly dual_chern(const TruncChernPoly& c) { return {c.n, c.c.negate_t(), c.tag}; }

RInput split_r_input(const std::vector<int>& twists, int n) {
  RInput in;
  in.r = static_cast<int>(twists.size());
  in.n = n;
  for (int i = 0; i <= in.r; ++i) {
    std::vector<int> wedge_twists;
    for (const auto& K : subsets_of(in.r, i)) {
      int s = 0;
      for (int k : K) s += twists[static_cast<std::size_t>(k)];
      wedge_twists.push_back(s);
    }
    in.series.push_back(hilbert_series_free(wedge_twists, n));
  }
  return in;
}

USeries assemble_R(const RInput& input, int sign_of_t) {
  if (sign_of_t != 1 && sign_of_t != -1) throw std::invalid_argument("sign_of_t must be +1 or -1");
  if (static_cast<int>(input.series.size()) != input.r + 1) throw std::invalid_argument("need r+1 Hilbert series");
  const int r = input.r, n = input.n, mod = n + 1;
  USeries out(mod, 1);
  // R = (-1)^r sum_i N_i(X) (1-X)^{-r} sum_j C(i,j) (-1)^{i-j} u^j t^{r-j}.
  for (int i = 0; i <= r; ++i) {
    const auto& h = input.series[static_cast<std::size_t>(i)];
    if (h.denom_power != n + 1) throw std::invalid_argument("series denominator must be (1-X)^{n+1}");
    if (h.numerator.is_zero()) continue;
    const USeries base = expand_at_one(h.numerator, r, mod, 1);
    for (int j = 0; j <= i; ++j) {
      const int tp = r - j;
      if (tp > n) continue;
      Rat coef = Rat(binomial(i, j)) * (((r + i - j) % 2) ? -1 : 1);
      if (sign_of_t < 0 && tp % 2) coef = -coef;
      out += base.shifted(j).scaled(TruncPoly::monomial(mod, tp, coef));
    }
  }
  return out;
}

LimitDoesNotExist::LimitDoesNotExist(int order, int t_power, const Rat& value)
    : std::runtime_error("limit does not exist: coefficient of u^" + std::to_string(order) + " t^" +
                         std::to_string(t_power) + " is " + to_string(value)),
      order_(order),
      t_power_(t_power),
      value_(value) {}

TruncChernPoly limit_at_one(const USeries& rs) {
  for (const auto& [k, c] : rs.terms()) {
    if (k >= 0) break;
    for (int j = 0; j < c.modulus(); ++j)
      if (c[j] != 0) throw LimitDoesNotExist(k, j, c[j]);
  }
  return {rs.modulus() - 1, rs.coeff(0)};
}

UPoly solomon_terao_from_series(const std::vector<HilbertSeries>& der_series, int n_vars) {
  if (static_cast<int>(der_series.size()) != n_vars + 1) throw std::invalid_argument("need series of D^0..D^{n+1}");
  const int mod = n_vars + 1;
  USeries sum(mod, 0);
  // sum_p N_p(X) (1-X)^{-N} sum_j C(p,j) (-1)^{p-j} t^j u^j
  for (int p = 0; p <= n_vars; ++p) {
    const auto& h = der_series[static_cast<std::size_t>(p)];
    if (h.numerator.is_zero()) continue;
    const USeries base = expand_at_one(h.numerator, h.denom_power, mod, 0);
    for (int j = 0; j <= p; ++j) {
      const Rat coef = Rat(binomial(p, j)) * (((p - j) % 2) ? -1 : 1);
      sum += base.shifted(j).scaled(TruncPoly::monomial(mod, j, coef));
    }
  }
  const TruncChernPoly lim = limit_at_one(sum);
  UPoly chi = lim.c.to_upoly();
  if (n_vars % 2) chi *= -1;
  return chi;
}

namespace {

std::vector<HilbertSeries> der_series(const Arrangement& a, int max_cutoff, Backend backend) {
  std::vector<HilbertSeries> out{hilbert_series_free({0}, a.n())};
  for (int p = 1; p <= a.n_vars(); ++p)
    out.push_back(hilbert_series_auto(a, ModuleSelector{Side::Der, p, false}, max_cutoff, backend));
  return out;
}

int default_max_cutoff(const Arrangement& a) { return 2 * a.d() + a.n() + 2; }

TruncChernPoly limit_from_series(const std::vector<HilbertSeries>& series, int n, int sign) {
  RInput in{n + 1, n, series};
  return limit_at_one(assemble_R(in, sign));
}

}  // namespace

UPoly solomon_terao(const Arrangement& a, int max_cutoff, Backend backend) {
  const UPoly chi = solomon_terao_from_series(der_series(a, max_cutoff, backend), a.n_vars());
  // Recover pi(t) = (-t)^{N} chi(-1/t) and check the constraints every Poincare polynomial obeys.
  const int nv = a.n_vars();
  std::vector<Rat> pi(static_cast<std::size_t>(nv + 1));
  for (int k = 0; k <= chi.degree(); ++k) {
    if (k > nv) throw std::logic_error("Solomon-Terao output has degree above the number of variables");
    pi[static_cast<std::size_t>(nv - k)] = chi[k] * (((nv + k) % 2) ? -1 : 1);
  }
  const UPoly pi_poly(pi);
  if (pi_poly[0] != 1 || (a.d() > 0 && pi_poly(Rat(-1)) != 0))
    throw std::logic_error("Solomon-Terao output is not a characteristic polynomial");
  return chi;
}

MainTheoremReport verify_main_theorem(const Arrangement& input, const MainTheoremOptions& opts) {
  const Arrangement a = input.essential() ? input : essentialize(input).arrangement;
  const auto lf = local_freeness_test(a);
  if (!lf.locally_free) throw HypothesisFailed("not locally free", lf.witness);

  const int n = a.n();
  MainTheoremReport rep;
  rep.strategy = opts.strategy;
  rep.pi = poincare_poly(a);
  rep.pi_bar = TruncChernPoly(n, TruncPoly::from_upoly(n + 1, rep.pi), TruncChernPoly::Tag::PoincareClass);
  const TruncPoly one_plus_t(n + 1, {Rat(1), Rat(1)});

  if (opts.strategy == Strategy::Limit) {
    rep.der_series = der_series(a, opts.max_cutoff > 0 ? opts.max_cutoff : default_max_cutoff(a), Backend::Exact);
    rep.ct_der1 = limit_from_series(rep.der_series, n, 1);
    rep.ct_omega1 = limit_from_series(rep.der_series, n, -1);
    if (!(rep.ct_omega1 == dual_chern(rep.ct_der1))) throw std::logic_error("limits at t and -t are not dual");
    rep.ct_omega1_0 = TruncChernPoly(n, rep.ct_omega1.c * trunc_invert(one_plus_t));
  } else {
    rep.betti = betti_probe(a, ModuleSelector{Side::Der, 1, true}, opts.betti);
    const TruncChernPoly der10 = chern_from_betti(*rep.betti, n);
    rep.ct_der1 = TruncChernPoly(n, der10.c * TruncPoly(n + 1, {Rat(1), Rat(-1)}));
    rep.ct_omega1 = dual_chern(rep.ct_der1);
    rep.ct_omega1_0 = dual_chern(der10);
  }
  rep.equal = rep.pi_bar.c == rep.ct_omega1.c;
  rep.euler_factor = UPoly::one_plus(1) * rep.ct_omega1_0.c.to_upoly() == rep.pi;
  return rep;
}

HilbertPolynomial hilbert_poly_from_series(const HilbertSeries& h) {
  const int n = h.denom_power - 1;
  HilbertPolynomial out;
  if (h.numerator.is_zero()) return out;
  for (int l = 0; l <= n; ++l) {
    const int k = n - l;
    Rat e = 0;
    for (const auto& [x, c] : h.numerator.terms()) e += c * gen_binomial(x, k);
    if (e == 0) continue;
    if (k % 2) e = -e;
    out.poly += binomial_poly(UPoly({Rat(l), Rat(1)}), l) * e;
  }
  out.threshold = h.numerator.max_exponent() - n;
  return out;
}

UPoly chi_twist_poly_p3_rank3(const Rat& c1, const Rat& c2, const Rat& c3) {
  const Rat c0 = Rat(3) + Rat(11, 6) * c1 + c1 * c1 - 2 * c2 + c1 * c1 * c1 / 6 - c1 * c2 / 2 + c3 / 2;
  const Rat m1 = Rat(11, 2) + 2 * c1 + c1 * c1 / 2 - c2;
  const Rat m2 = Rat(3) + c1 / 2;
  return UPoly({c0, m1, m2, Rat(1, 2)});
}

namespace {

/// Twists of the summands of the i-th exterior power of a split bundle.
std::vector<int> wedge_twists(const std::vector<int>& twists, int i) {
  std::vector<int> out;
  for (const auto& K : subsets_of(static_cast<int>(twists.size()), i)) {
    int s = 0;
    for (int k : K) s += twists[static_cast<std::size_t>(k)];
    out.push_back(s);
  }
  return out;
}

/// Hilbert polynomial of O(a) on P^n, as a polynomial in m.
UPoly line_bundle_hilbert(int a, int n) { return binomial_poly(UPoly({Rat(a + n), Rat(1)}), n); }

}  // namespace

TopChernReport top_chern_checks(const std::vector<int>& twists, int n) {
  const int r = static_cast<int>(twists.size());
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (r < n) throw std::invalid_argument("top Chern identity needs rank >= n");
  TopChernReport rep;
  const TruncChernPoly c = chern_split(twists, n);

  rep.first_applicable = true;
  for (int i = r - n; i <= r; ++i) {
    Rat chi = 0;
    for (int a : wedge_twists(twists, i)) chi += line_bundle_hilbert(a, n)(Rat(0));
    rep.first_lhs += Rat(binomial(i, r - n)) * chi * ((i % 2) ? -1 : 1);
  }
  rep.first_rhs = c.c[n] * ((r % 2) ? -1 : 1);
  rep.first_ok = rep.first_lhs == rep.first_rhs;

  if (r == n) {
    rep.second_applicable = true;
    for (int i = 0; i <= n; ++i) {
      UPoly q;
      for (int a : wedge_twists(twists, i)) q += line_bundle_hilbert(a, n);
      rep.second_lhs += q.compose(UPoly({Rat(0), Rat(i)})) * Rat((i % 2) ? -1 : 1);
    }
    std::vector<Rat> rhs(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) rhs[static_cast<std::size_t>(n - i)] = c.c[i] * ((n % 2) ? -1 : 1);
    rep.second_rhs = UPoly(rhs);
    rep.second_ok = rep.second_lhs == rep.second_rhs;
  }
  return rep;
}

HilbertSeries truncate_series(const HilbertSeries& h, int m0) {
  HilbertSeries out = h;
  LaurentPoly low;
  const int lowest = h.numerator.is_zero() ? m0 : h.numerator.min_exponent();
  for (int m = lowest; m < m0; ++m) {
    const std::int64_t v = h.dim(m);
    if (v != 0) low.add_term(m, Rat(static_cast<long>(v)));
  }
  out.numerator -= low * one_minus_x_pow(h.denom_power);
  return out;
}

bool remark42_check(const Arrangement& input, int m0, int max_cutoff) {
  const Arrangement a = input.essential() ? input : essentialize(input).arrangement;
  const auto series = der_series(a, max_cutoff > 0 ? max_cutoff : default_max_cutoff(a), Backend::Exact);
  std::vector<HilbertSeries> truncated;
  for (const auto& h : series) truncated.push_back(truncate_series(h, m0));
  const int n = a.n();
  return limit_from_series(series, n, -1) == limit_from_series(truncated, n, -1);
}

}  // namespace logarr
