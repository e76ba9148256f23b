#include "logarr/report/report.hpp"

#include <algorithm>

#include "logarr/arrangement/io.hpp"

namespace logarr::report {

Json rat(const Rat& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(static_cast<std::int64_t>(q.get_num().get_si()));
  return Json(to_string(q));
}

Json rat_string(const Rat& q) { return Json(to_string(q)); }

Json poly(const UPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(rat(c));
  return out;
}

Json poly(const TruncPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(rat(c));
  return out;
}

Json laurent(const LaurentPoly& p) {
  Json out;
  if (p.is_zero()) {
    out["min_exponent"] = 0;
    out["coeffs"] = Json::array();
    return out;
  }
  out["min_exponent"] = p.min_exponent();
  Json cs = Json::array();
  for (int e = p.min_exponent(); e <= p.max_exponent(); ++e) cs.push_back(rat(p[e]));
  out["coeffs"] = cs;
  return out;
}

Json series(const HilbertSeries& h) {
  Json out;
  out["numerator"] = laurent(h.numerator);
  out["denominator_power"] = h.denom_power;
  out["cutoff"] = h.cutoff ? Json(*h.cutoff) : Json(nullptr);
  out["stable_window"] = h.stable_window;
  return out;
}

Json selector(const ModuleSelector& s) {
  Json out;
  out["module"] = s.str();
  out["side"] = s.side == Side::Der ? "der" : "form";
  out["p"] = s.p;
  out["euler_complement"] = s.euler_complement;
  return out;
}

Json arrangement(const Arrangement& a) {
  Json out;
  out["name"] = a.name();
  out["n_vars"] = a.n_vars();
  out["d"] = a.d();
  out["rank"] = a.rank();
  out["forms"] = Json(to_json(a)["forms"]);
  return out;
}

Json rank_census(const Lattice& l, int r) {
  std::map<std::pair<std::size_t, std::vector<std::int64_t>>, int> groups;
  for (int x : l.at_rank(r)) {
    std::vector<std::int64_t> mus;
    if (r > 0)
      for (int y : l.at_rank(r - 1))
        if (l.leq(y, x)) mus.push_back(l.mobius(y));
    std::sort(mus.rbegin(), mus.rend());
    ++groups[{l.element(x).members.size(), mus}];
  }
  Json out = Json::array();
  for (const auto& [key, count] : groups) {
    Json g;
    g["hyperplanes"] = key.first;
    g["count"] = count;
    g["mu_below"] = key.second;
    out.push_back(g);
  }
  return out;
}

Json lattice(const Arrangement& a, const Lattice& l) {
  Json out;
  out["arrangement"] = arrangement(a);
  out["elements"] = l.size();
  out["top_rank"] = l.top_rank();
  Json ranks = Json::array();
  for (int r = 0; r <= l.top_rank(); ++r) {
    Json level;
    level["rank"] = r;
    level["count"] = l.at_rank(r).size();
    level["mu_multiset"] = mu_multiset(l, r);
    level["census"] = rank_census(l, r);
    ranks.push_back(level);
  }
  out["ranks"] = ranks;
  return out;
}

Json charpoly(const Arrangement& a) {
  const UPoly pi = poincare_poly(a);
  const UPoly chi = characteristic_poly(a);
  Json out;
  out["arrangement"] = arrangement(a);
  out["pi"] = poly(pi);
  out["chi"] = poly(chi);
  out["pi_at_minus_one"] = rat(pi(Rat(-1)));
  out["chi_matches_pi"] = chi_from_pi(pi, a.n_vars()) == chi;
  return out;
}

Json freeness(const FreenessReport& r) {
  Json out;
  out["free"] = r.free;
  out["exponents"] = r.exponents;
  out["certificate"] = r.certificate ? rat_string(*r.certificate) : Json(nullptr);
  out["generator_degrees"] = r.generator_degrees;
  out["search_bound"] = r.search_bound;
  out["reason"] = r.reason;
  return out;
}

Json element_verdict(const ElementVerdict& v) {
  Json out;
  out["element"] = v.element;
  out["rank"] = v.rank;
  out["members"] = v.members;
  out["freeness"] = freeness(v.report);
  return out;
}

Json local_freeness(const LocalFreenessReport& r) {
  Json out;
  out["locally_free"] = r.locally_free;
  out["elements_checked"] = r.elements.size();
  std::map<int, std::pair<int, int>> by_rank;
  for (const auto& e : r.elements) {
    auto& [n_free, n_total] = by_rank[e.rank];
    ++n_total;
    if (e.report.free) ++n_free;
  }
  Json ranks = Json::array();
  for (const auto& [rank, counts] : by_rank) {
    Json x;
    x["rank"] = rank;
    x["free"] = counts.first;
    x["total"] = counts.second;
    ranks.push_back(x);
  }
  out["by_rank"] = ranks;
  out["witness"] = r.witness ? element_verdict(*r.witness) : Json(nullptr);
  return out;
}

Json graded_dims(const GradedDimTable& t) {
  Json out;
  out["selector"] = selector(t.selector);
  Json dims = Json::array();
  for (const auto& [m, d] : t.dims) dims.push_back(Json::array({m, d}));
  out["dims"] = dims;
  out["probabilistic"] = t.probabilistic;
  return out;
}

Json betti(const BettiTable& b) {
  Json out;
  Json entries = Json::array();
  for (const auto& [key, mult] : b.entries) {
    Json e;
    e["index"] = key.first;
    e["degree"] = key.second;
    e["multiplicity"] = mult;
    entries.push_back(e);
  }
  out["entries"] = entries;
  out["pdim"] = b.pdim();
  out["complete"] = b.complete;
  out["gen_cutoff"] = b.gen_cutoff;
  out["syz_cutoff"] = b.syz_cutoff;
  out["window"] = b.window;
  return out;
}

Json chern(const TruncChernPoly& c) {
  Json out;
  out["n"] = c.n;
  out["tag"] = c.tag == TruncChernPoly::Tag::Chern ? "chern" : "poincare-class";
  out["coeffs"] = poly(c.c);
  return out;
}

Json main_theorem(const MainTheoremReport& r) {
  Json out;
  out["strategy"] = r.strategy == Strategy::Limit ? "limit" : "betti";
  out["pi"] = poly(r.pi);
  out["pi_bar"] = poly(r.pi_bar.c);
  out["ct_der1"] = poly(r.ct_der1.c);
  out["ct_omega1"] = poly(r.ct_omega1.c);
  out["ct_omega1_0"] = poly(r.ct_omega1_0.c);
  out["equal"] = r.equal;
  out["euler_factor"] = r.euler_factor;
  out["betti_der1_0"] = r.betti ? betti(*r.betti) : Json(nullptr);
  Json ser = Json::array();
  for (const auto& h : r.der_series) ser.push_back(series(h));
  out["der_series"] = ser;
  return out;
}

Json hilbert_polynomial(const HilbertPolynomial& h) {
  Json out;
  out["coeffs"] = poly(h.poly);
  out["threshold"] = h.threshold;
  return out;
}

Json top_chern(const TopChernReport& r) {
  Json out;
  out["first_applicable"] = r.first_applicable;
  out["first_lhs"] = rat(r.first_lhs);
  out["first_rhs"] = rat(r.first_rhs);
  out["first_ok"] = r.first_ok;
  out["second_applicable"] = r.second_applicable;
  out["second_lhs"] = poly(r.second_lhs);
  out["second_rhs"] = poly(r.second_rhs);
  out["second_ok"] = r.second_ok;
  return out;
}

Json ziegler(const ZieglerReport& r) {
  Json out;
  const auto& z = r.data;
  out["n_vars"] = z.n_vars;
  out["d"] = z.d;
  Json coeffs = Json::array();
  for (const auto& row : z.coefficients) {
    Json c = Json::array();
    for (const auto& q : row) c.push_back(rat(q));
    coeffs.push_back(c);
  }
  out["coefficients"] = coeffs;
  Json tau = Json::array();
  for (const auto& row : z.tau) {
    Json t = Json::array();
    for (const auto& e : row) t.push_back(e.str());
    tau.push_back(t);
  }
  out["tau"] = tau;
  out["source_twists"] = z.source_twists;
  out["target_twists"] = z.target_twists;
  out["complex_ok"] = r.complex_ok;
  Json degrees = Json::array();
  for (const auto& g : r.degrees) {
    Json x;
    x["m"] = g.m;
    x["module_dim"] = g.module_dim;
    x["predicted"] = g.predicted;
    x["injective"] = g.injective;
    x["ok"] = g.ok();
    degrees.push_back(x);
  }
  out["degrees"] = degrees;
  out["ok"] = r.ok();
  return out;
}

Json lebelt_terms(const LebeltTerms& t) {
  Json out;
  out["p"] = t.p;
  Json terms = Json::array();
  for (const auto& term : t.terms) {
    Json x;
    x["i"] = term.i;
    x["rank"] = term.rank;
    x["twists"] = term.twists;
    terms.push_back(x);
  }
  out["terms"] = terms;
  return out;
}

Json lebelt(const LebeltReport& r) {
  Json out;
  out["side"] = r.side == Side::Der ? "der" : "form";
  out["p"] = r.p;
  out["hypothesis_ok"] = r.hypothesis_ok;
  out["hypothesis"] = r.hypothesis;
  if (!r.hypothesis_ok) return out;
  out["base"] = betti(r.base);
  out["terms"] = lebelt_terms(r.terms);
  Json euler = Json::array();
  for (const auto& [m, pr] : r.euler) {
    Json x;
    x["m"] = m;
    x["alternating"] = pr.first;
    x["module_dim"] = pr.second;
    euler.push_back(x);
  }
  out["euler"] = euler;
  Json wedge = Json::array();
  for (const auto& [m, w] : r.wedge) {
    Json x;
    x["m"] = m;
    x["wedge_image"] = w.wedge_image;
    x["module_dim"] = w.module_dim;
    wedge.push_back(x);
  }
  out["wedge"] = wedge;
  out["pdim"] = r.pdim ? Json(*r.pdim) : Json(nullptr);
  out["pdim_top"] = r.pdim_top ? Json(*r.pdim_top) : Json(nullptr);
  out["euler_ok"] = r.euler_ok();
  out["wedge_ok"] = r.wedge_ok();
  out["pdim_ok"] = r.pdim_ok();
  out["top_ok"] = r.top_ok();
  out["ok"] = r.ok();
  return out;
}

}  // namespace logarr::report
