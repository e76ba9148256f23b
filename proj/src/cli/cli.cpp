#include "logarr/cli/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "logarr/arrangement/io.hpp"
#include "logarr/logmodules/problem.hpp"

namespace logarr::cli {

using report::Json;

namespace {

const char* const kRiemannRochNote =
    "constant term of chi(E(m)) uses c1^3/6; the c1^3/3 variant disagrees with split bundles "
    "and with the -6 constant of the Edelman-Reiner Hilbert polynomial";

struct Options {
  std::string family;
  std::string file;
  int p = 1;
  std::string side = "der";
  std::optional<int> cutoff;
  std::optional<int> gen_cutoff;
  std::optional<int> lo;
  std::string backend = "exact";
  std::string strategy = "betti";
  std::optional<std::uint64_t> seed;
  bool json = false;
  bool euler = false;
  int m0 = 3;
  std::string twists;
  int n = -1;
  int count = 100;
  std::string golden;
};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A failed identity or negative verdict, already reported.
struct Outcome {
  Json json;
  std::string text;
  int code = kOk;
};

Backend backend_of(const Options& o) {
  if (o.backend == "exact") return Backend::Exact;
  if (o.backend == "modular") return Backend::Modular;
  throw UsageError("unknown backend '" + o.backend + "'");
}

Side side_of(const Options& o) {
  if (o.side == "der") return Side::Der;
  if (o.side == "form") return Side::Form;
  throw UsageError("unknown side '" + o.side + "'");
}

Strategy strategy_of(const Options& o) {
  if (o.strategy == "betti") return Strategy::Betti;
  if (o.strategy == "limit") return Strategy::Limit;
  throw UsageError("unknown strategy '" + o.strategy + "'");
}

Arrangement load(const Options& o) {
  if (o.family.empty() == o.file.empty()) throw UsageError("give exactly one of --family or --file");
  if (!o.file.empty()) return read_arrangement_file(o.file);
  std::string spec = o.family;
  const bool generic = spec.rfind("generic:", 0) == 0;
  if (generic && o.seed && std::count(spec.begin(), spec.end(), ',') == 1) spec += "," + std::to_string(*o.seed);
  try {
    return family(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> parse_twists(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) {
      try {
        out.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw UsageError("bad twist list '" + s + "'");
      }
    }
  return out;
}

std::string poly_text(const UPoly& p, const std::string& var = "t") { return p.str(var); }
std::string poly_text(const TruncPoly& p) { return p.str("t"); }

std::string bool_text(bool b) { return b ? "yes" : "no"; }

Outcome cmd_lattice(const Options& o) {
  const Arrangement a = load(o);
  const Lattice l = intersection_lattice(a);
  Outcome r;
  r.json = report::lattice(a, l);
  std::ostringstream t;
  t << a.name() << ": " << l.size() << " flats, rank " << l.top_rank() << "\n";
  for (const auto& level : r.json["ranks"]) {
    t << "rank " << level["rank"].get<int>() << ": " << level["count"].get<int>() << " elements\n";
    for (const auto& g : level["census"])
      t << "  " << g["count"].get<int>() << " on " << g["hyperplanes"].get<int>() << " hyperplanes, mu below "
        << g["mu_below"].dump() << "\n";
  }
  r.text = t.str();
  return r;
}

Outcome cmd_charpoly(const Options& o) {
  const Arrangement a = load(o);
  Outcome r;
  r.json = report::charpoly(a);
  const bool ok = r.json["pi_at_minus_one"] == Json(0) && r.json["chi_matches_pi"].get<bool>();
  r.code = ok ? kOk : kFailed;
  r.text = "pi(t)  = " + poly_text(poincare_poly(a)) + "\nchi(t) = " + poly_text(characteristic_poly(a)) +
           "\npi(-1) = 0: " + bool_text(r.json["pi_at_minus_one"] == Json(0)) + "\n";
  return r;
}

Outcome cmd_freeness(const Options& o) {
  const Arrangement a = load(o);
  const FreenessReport f = freeness_test(a);
  Outcome r;
  r.json = report::freeness(f);
  r.code = f.free ? kOk : kFailed;
  std::ostringstream t;
  t << a.name() << ": " << (f.free ? "free" : "not free") << "\n";
  if (f.free) {
    t << "exponents:";
    for (int e : f.exponents) t << " " << e;
    t << "\nSaito determinant = " << to_string(*f.certificate) << " * Q\n";
  } else {
    t << f.reason << "\n";
  }
  r.text = t.str();
  return r;
}

std::string members_text(const std::vector<int>& m) {
  std::string s = "{";
  for (std::size_t k = 0; k < m.size(); ++k) s += (k ? "," : "") + std::to_string(m[k]);
  return s + "}";
}

Outcome cmd_local_freeness(const Options& o) {
  const Arrangement a = load(o);
  const LocalFreenessReport lf = local_freeness_test(a);
  Outcome r;
  r.json = report::local_freeness(lf);
  r.code = lf.locally_free ? kOk : kFailed;
  std::ostringstream t;
  t << a.name() << ": " << (lf.locally_free ? "locally free" : "not locally free") << " (" << lf.elements.size()
    << " localizations checked)\n";
  if (lf.witness)
    t << "witness: element " << lf.witness->element << " of rank " << lf.witness->rank << " on hyperplanes "
      << members_text(lf.witness->members) << "\n";
  r.text = t.str();
  return r;
}

ModuleSelector selector_of(const Options& o) {
  ModuleSelector sel{side_of(o), o.p, o.euler};
  return sel;
}

Outcome cmd_module_dims(const Options& o) {
  const Arrangement a = load(o);
  const ModuleSelector sel = selector_of(o);
  const LogModuleProblem prob(a, sel);
  const int lo = o.lo.value_or(prob.min_degree());
  const int hi = o.cutoff.value_or(lo + a.d());
  const GradedDimTable t = graded_dims(a, sel, lo, hi, backend_of(o));
  Outcome r;
  r.json = report::graded_dims(t);
  std::ostringstream s;
  s << sel.str() << " of " << a.name() << (t.probabilistic ? " (modular, probabilistic)" : "") << "\n";
  for (const auto& [m, d] : t.dims) s << "  m=" << m << ": " << d << "\n";
  r.text = s.str();
  return r;
}

Outcome cmd_hilbert(const Options& o) {
  const Arrangement a = load(o);
  const ModuleSelector sel = selector_of(o);
  const HilbertSeries h = hilbert_series_auto(a, sel, o.cutoff.value_or(2 * a.d() + a.n() + 2), backend_of(o));
  const HilbertPolynomial hp = hilbert_poly_from_series(h);
  Outcome r;
  r.json["selector"] = report::selector(sel);
  r.json["series"] = report::series(h);
  r.json["hilbert_polynomial"] = report::hilbert_polynomial(hp);
  r.json["probabilistic"] = backend_of(o) == Backend::Modular;
  std::ostringstream s;
  s << "P(" << sel.str() << "; X) = (" << h.numerator.str() << ") / (1-X)^" << h.denom_power << "\n";
  s << "stable from cutoff " << *h.cutoff << "\nHilbert polynomial: " << poly_text(hp.poly, "m") << " (m >= "
    << hp.threshold << ")\n";
  r.text = s.str();
  return r;
}

Outcome cmd_betti(const Options& o) {
  const Arrangement a = load(o);
  const ModuleSelector sel = selector_of(o);
  BettiOptions bo;
  bo.syz_cutoff = o.cutoff;
  bo.gen_cutoff = o.gen_cutoff;
  const BettiTable b = betti_probe(a, sel, bo);
  Outcome r;
  r.json["selector"] = report::selector(sel);
  r.json["betti"] = report::betti(b);
  r.code = b.complete ? kOk : kIncomplete;
  std::ostringstream s;
  s << "Betti table of " << sel.str() << " (" << a.name() << ")" << (b.complete ? "" : " [incomplete]") << "\n";
  for (const auto& [key, mult] : b.entries) s << "  F_" << key.first << ": S(" << -key.second << ")^" << mult << "\n";
  s << "pdim = " << b.pdim() << "\n";
  r.text = s.str();
  return r;
}

MainTheoremOptions theorem_options(const Options& o) {
  MainTheoremOptions mo;
  mo.strategy = strategy_of(o);
  if (o.cutoff) {
    mo.max_cutoff = *o.cutoff;
    mo.betti.syz_cutoff = o.cutoff;
  }
  mo.betti.gen_cutoff = o.gen_cutoff;
  return mo;
}

Outcome cmd_chern(const Options& o) {
  const Arrangement a = load(o);
  const MainTheoremReport m = verify_main_theorem(a, theorem_options(o));
  Outcome r;
  r.json["strategy"] = o.strategy;
  r.json["ct_der1"] = report::poly(m.ct_der1.c);
  r.json["ct_omega1"] = report::poly(m.ct_omega1.c);
  r.json["ct_omega1_0"] = report::poly(m.ct_omega1_0.c);
  r.json["ct_der1_0"] = report::poly(dual_chern(m.ct_omega1_0).c);
  r.text = "c_t(D~1)      = " + poly_text(m.ct_der1.c) + "\nc_t(Omega~1)  = " + poly_text(m.ct_omega1.c) +
           "\nc_t(Omega~1_0) = " + poly_text(m.ct_omega1_0.c) + "\n";
  return r;
}

Outcome cmd_main_theorem(const Options& o) {
  const Arrangement a = load(o);
  const MainTheoremReport m = verify_main_theorem(a, theorem_options(o));
  Outcome r;
  r.json = report::main_theorem(m);
  r.code = m.equal && m.euler_factor ? kOk : kFailed;
  r.text = "pi_bar(t)       = " + poly_text(m.pi_bar.c) + "\nc_t(Omega~1)    = " + poly_text(m.ct_omega1.c) +
           "\nequal: " + bool_text(m.equal) + "\nc_t(Omega~1_0)  = " + poly_text(m.ct_omega1_0.c) +
           "\npi = (1+t) c_t(Omega~1_0): " + bool_text(m.euler_factor) + "\n";
  return r;
}

Outcome cmd_solomon_terao(const Options& o) {
  const Arrangement a = load(o);
  const UPoly chi = solomon_terao(a, o.cutoff.value_or(2 * a.d() + a.n() + 2), backend_of(o));
  const UPoly lattice_chi = characteristic_poly(a);
  Outcome r;
  r.json["limit_chi"] = report::poly(chi);
  r.json["lattice_chi"] = report::poly(lattice_chi);
  r.json["equal"] = chi == lattice_chi;
  r.json["probabilistic"] = backend_of(o) == Backend::Modular;
  r.code = chi == lattice_chi ? kOk : kFailed;
  r.text = "limit:   " + poly_text(chi) + "\nlattice: " + poly_text(lattice_chi) + "\nequal: " + bool_text(chi == lattice_chi) + "\n";
  return r;
}

struct SplitCase {
  std::vector<int> twists;
  int n = 0;
};

std::vector<SplitCase> split_cases(const Options& o, int min_rank_offset, int max_rank_offset) {
  if (!o.twists.empty()) {
    if (o.n < 1) throw UsageError("--twists needs --n");
    return {{parse_twists(o.twists), o.n}};
  }
  std::mt19937_64 gen(o.seed.value_or(0));
  std::vector<SplitCase> out;
  for (int k = 0; k < o.count; ++k) {
    SplitCase c;
    c.n = 1 + static_cast<int>(gen() % 4);
    int r = 1 + static_cast<int>(gen() % 6);
    if (min_rank_offset >= 0) r = std::min(6, c.n + min_rank_offset + static_cast<int>(gen() % (max_rank_offset - min_rank_offset + 1)));
    for (int i = 0; i < r; ++i) c.twists.push_back(static_cast<int>(gen() % 11) - 5);
    out.push_back(c);
  }
  return out;
}

std::string twists_text(const std::vector<int>& tw) {
  std::string s = "(";
  for (std::size_t k = 0; k < tw.size(); ++k) s += (k ? "," : "") + std::to_string(tw[k]);
  return s + ")";
}

Outcome cmd_chern_split(const Options& o) {
  Outcome r;
  Json cases = Json::array();
  int failures = 0;
  std::ostringstream t;
  for (const auto& c : split_cases(o, -1, -1)) {
    const TruncChernPoly lim = limit_at_one(assemble_R(split_r_input(c.twists, c.n), 1));
    const TruncChernPoly whitney = chern_split(c.twists, c.n);
    const bool ok = lim == whitney;
    if (!ok) {
      ++failures;
      t << "mismatch for twists " << twists_text(c.twists) << " on P^" << c.n << ": limit " << poly_text(lim.c)
        << ", product " << poly_text(whitney.c) << "\n";
    }
    Json x;
    x["twists"] = c.twists;
    x["n"] = c.n;
    x["limit"] = report::poly(lim.c);
    x["product"] = report::poly(whitney.c);
    x["equal"] = ok;
    cases.push_back(x);
  }
  r.json["cases"] = cases;
  r.json["failures"] = failures;
  r.code = failures ? kFailed : kOk;
  if (cases.size() == 1) t << "c_t = " << cases[0]["limit"].dump() << "\n";
  t << cases.size() << " split bundles, " << failures << " mismatches\n";
  r.text = t.str();
  return r;
}

Outcome cmd_top_chern(const Options& o) {
  Outcome r;
  Json cases = Json::array();
  int failures = 0;
  std::ostringstream t;
  for (const auto& c : split_cases(o, 0, 2)) {
    if (static_cast<int>(c.twists.size()) < c.n) throw UsageError("top-chern needs at least n twists");
    const TopChernReport rep = top_chern_checks(c.twists, c.n);
    const bool ok = rep.first_ok && (!rep.second_applicable || rep.second_ok);
    if (!ok) {
      ++failures;
      t << "failure for twists " << twists_text(c.twists) << " on P^" << c.n << "\n";
    }
    Json x = report::top_chern(rep);
    x["twists"] = c.twists;
    x["n"] = c.n;
    cases.push_back(x);
  }
  r.json["cases"] = cases;
  r.json["failures"] = failures;
  r.code = failures ? kFailed : kOk;
  t << cases.size() << " split bundles, " << failures << " failures\n";
  r.text = t.str();
  return r;
}

Outcome cmd_remark42(const Options& o) {
  const Arrangement a = load(o);
  const bool ok = remark42_check(a, o.m0, o.cutoff.value_or(-1));
  Outcome r;
  r.json["m0"] = o.m0;
  r.json["unchanged"] = ok;
  r.code = ok ? kOk : kFailed;
  r.text = std::string("limit after truncating at degree ") + std::to_string(o.m0) + ": " + (ok ? "unchanged" : "changed") + "\n";
  return r;
}

Outcome cmd_ziegler(const Options& o) {
  const Arrangement a = load(o);
  const int lo = o.lo.value_or(-1);
  const int hi = o.cutoff.value_or(lo + 5);
  const ZieglerReport z = ziegler_check(a, lo, hi, backend_of(o));
  Outcome r;
  r.json = report::ziegler(z);
  r.code = z.ok() ? kOk : kFailed;
  std::ostringstream t;
  t << "0 -> S^" << z.data.columns() << " -> S(1)^" << z.data.d << " -> Omega^1 -> 0\n";
  for (const auto& g : z.degrees)
    t << "  m=" << g.m << ": dim " << g.module_dim << ", predicted " << g.predicted << ", injective "
      << bool_text(g.injective) << "\n";
  t << "ok: " << bool_text(z.ok()) << "\n";
  r.text = t.str();
  return r;
}

Outcome cmd_lebelt(const Options& o) {
  const Arrangement a = load(o);
  const int lo = o.lo.value_or(-o.p);
  const int hi = o.cutoff.value_or(lo + 4);
  LebeltOptions lo_opts;
  lo_opts.backend = backend_of(o);
  const LebeltReport rep = lebelt_check(a, o.p, lo, hi, side_of(o), lo_opts);
  Outcome r;
  r.json = report::lebelt(rep);
  std::ostringstream t;
  if (!rep.hypothesis_ok) {
    r.code = kFailed;
    t << "hypothesis failed: " << rep.hypothesis << "\n";
    r.text = t.str();
    return r;
  }
  r.code = rep.ok() ? kOk : kFailed;
  for (const auto& term : rep.terms.terms) t << "  term " << term.i << ": rank " << term.rank << "\n";
  for (const auto& [m, pr] : rep.euler) t << "  m=" << m << ": alternating " << pr.first << ", direct " << pr.second << "\n";
  t << "wedge image equal: " << bool_text(rep.wedge_ok()) << "\npdim = " << (rep.pdim ? std::to_string(*rep.pdim) : "?")
    << ", pdim of top power = " << (rep.pdim_top ? std::to_string(*rep.pdim_top) : "?") << "\nok: " << bool_text(rep.ok()) << "\n";
  r.text = t.str();
  return r;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad JSON in ") + path + ": " + e.what());
  }
}

Outcome cmd_demo(const Options& o) {
  const Json golden = o.golden.empty() ? edelman_reiner_golden() : read_json_file(o.golden);
  const DemoResult d = demo_edelman_reiner(golden, backend_of(o));
  Outcome r;
  r.json["computed"] = d.computed;
  r.json["mismatches"] = d.mismatches;
  r.json["probabilistic"] = d.probabilistic;
  r.json["notes"] = Json::array({kRiemannRochNote});
  r.code = d.mismatches.empty() ? kOk : kFailed;
  std::ostringstream t;
  for (const auto& [key, val] : d.computed.items()) {
    const bool bad = std::any_of(d.mismatches.begin(), d.mismatches.end(), [&](const Json& m) { return m["field"] == key; });
    t << (bad ? "  FAIL " : "  ok   ") << key << " = " << val.dump() << "\n";
  }
  for (const auto& m : d.mismatches)
    t << "mismatch in " << m["field"].get<std::string>() << ": expected " << m["expected"].dump() << ", got "
      << m["actual"].dump() << "\n";
  if (d.probabilistic) t << "(modular backend: dimension counts are probabilistic)\n";
  t << "note: " << kRiemannRochNote << "\n";
  t << (d.mismatches.empty() ? "all values match\n" : "demo FAILED\n");
  r.text = t.str();
  return r;
}

Json error_json(const std::string& kind, const std::string& message) {
  Json e;
  e["error"] = kind;
  e["message"] = message;
  return e;
}

}  // namespace

Json edelman_reiner_golden() {
  return Json::parse(R"({
    "pi": [1, 15, 80, 170, 104],
    "rank3_count": 45,
    "rank3_census": [
      {"hyperplanes": 3, "count": 20, "mu_below": [1, 1, 1]},
      {"hyperplanes": 5, "count": 15, "mu_below": [2, 2, 1, 1, 1, 1]},
      {"hyperplanes": 7, "count": 10, "mu_below": [2, 2, 2, 2, 2, 2, 1, 1, 1]}
    ],
    "locally_free": true,
    "betti_der1_0": [[0, 5, 4], [1, 6, 1]],
    "pdim_der1_0": 1,
    "ct_omega1_0": [1, 14, 66, 104],
    "pi_bar": [1, 15, 80, 170],
    "ct_omega1": [1, 15, 80, 170],
    "main_theorem_equal": true,
    "euler_factor": true,
    "hilbert_poly_der1_0": [-6, "19/2", -4, "1/2"],
    "riemann_roch_poly": [-6, "19/2", -4, "1/2"]
  })");
}

DemoResult demo_edelman_reiner(const Json& golden, Backend backend) {
  const Arrangement a = edelman_reiner();
  const Lattice l = intersection_lattice(a);
  DemoResult d;
  d.probabilistic = backend == Backend::Modular;
  Json& c = d.computed;
  c["pi"] = report::poly(poincare_poly(a));
  c["rank3_count"] = l.at_rank(3).size();
  c["rank3_census"] = report::rank_census(l, 3);
  c["locally_free"] = local_freeness_test(a).locally_free;

  MainTheoremOptions mo;
  mo.strategy = Strategy::Betti;
  mo.betti.gen_cutoff = 6;
  mo.betti.syz_cutoff = 11;
  const MainTheoremReport m = verify_main_theorem(a, mo);
  Json betti = Json::array();
  for (const auto& [key, mult] : m.betti->entries) betti.push_back(Json::array({key.first, key.second, mult}));
  c["betti_der1_0"] = betti;
  c["pdim_der1_0"] = m.betti->pdim();
  c["ct_omega1_0"] = report::poly(m.ct_omega1_0.c);
  c["pi_bar"] = report::poly(m.pi_bar.c);
  c["ct_omega1"] = report::poly(m.ct_omega1.c);
  c["main_theorem_equal"] = m.equal;
  c["euler_factor"] = m.euler_factor;

  const HilbertSeries h = hilbert_series_auto(a, ModuleSelector{Side::Der, 1, true}, 16, backend);
  c["hilbert_poly_der1_0"] = report::poly(hilbert_poly_from_series(h).poly);
  const TruncChernPoly der10 = dual_chern(m.ct_omega1_0);
  c["riemann_roch_poly"] = report::poly(chi_twist_poly_p3_rank3(der10.c[1], der10.c[2], der10.c[3]));

  d.mismatches = Json::array();
  for (const auto& [key, expected] : golden.items()) {
    const Json actual = c.contains(key) ? c[key] : Json(nullptr);
    if (actual != expected) {
      Json mm;
      mm["field"] = key;
      mm["expected"] = expected;
      mm["actual"] = actual;
      d.mismatches.push_back(mm);
    }
  }
  return d;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of central hyperplane arrangements and their logarithmic modules", "logarr"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--family", o.family, "family spec: boolean:N, braid:N, generic:N,D[,SEED], edelman-reiner, nlf-demo");
  app.add_option("--file", o.file, "arrangement JSON file");
  app.add_option("--p", o.p, "exterior degree");
  app.add_option("--side", o.side, "der or form")->check(CLI::IsMember({"der", "form"}));
  app.add_option("--cutoff", o.cutoff, "top degree / cutoff");
  app.add_option("--gen-cutoff", o.gen_cutoff, "generator cutoff for Betti probes");
  app.add_option("--lo", o.lo, "lowest degree of a window");
  app.add_option("--backend", o.backend, "exact or modular")->check(CLI::IsMember({"exact", "modular"}));
  app.add_option("--strategy", o.strategy, "limit or betti")->check(CLI::IsMember({"limit", "betti"}));
  app.add_option("--seed", o.seed, "seed for generic arrangements and random batches");
  app.add_flag("--json", o.json, "emit JSON");
  app.add_flag("--euler-complement", o.euler, "use D^1_0 instead of D^1");
  app.add_option("--m0", o.m0, "truncation degree for remark42");
  app.add_option("--twists", o.twists, "comma separated twists of a split bundle");
  app.add_option("--n", o.n, "projective dimension for split bundle checks");
  app.add_option("--count", o.count, "number of random split bundles");
  app.add_option("--golden", o.golden, "golden JSON for the demo");

  std::function<Outcome()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Outcome (*fn)(const Options&)) {
    parent->add_subcommand(name, help)->callback([&action, &o, fn] { action = [&o, fn] { return fn(o); }; });
  };
  leaf(&app, "lattice", "intersection lattice and rank census", cmd_lattice);
  leaf(&app, "charpoly", "Poincare and characteristic polynomials", cmd_charpoly);
  leaf(&app, "freeness", "freeness test with Saito certificate", cmd_freeness);
  leaf(&app, "local-freeness", "freeness of every proper localization", cmd_local_freeness);
  leaf(&app, "module-dims", "graded dimensions of D^p or Omega^p", cmd_module_dims);
  leaf(&app, "hilbert", "Hilbert series and Hilbert polynomial", cmd_hilbert);
  leaf(&app, "betti", "degreewise Betti table", cmd_betti);
  leaf(&app, "chern", "Chern polynomials of the log sheaves", cmd_chern);
  CLI::App* verify = app.add_subcommand("verify", "identity checks");
  verify->require_subcommand(1);
  leaf(verify, "solomon-terao", "characteristic polynomial from Hilbert series", cmd_solomon_terao);
  leaf(verify, "main-theorem", "pi_bar = c_t(Omega~1)", cmd_main_theorem);
  leaf(verify, "chern-split", "limit formula on split bundles", cmd_chern_split);
  leaf(verify, "remark42", "limit invariance under truncation", cmd_remark42);
  leaf(verify, "top-chern", "top Chern class identities on split bundles", cmd_top_chern);
  CLI::App* resolution = app.add_subcommand("resolution", "explicit resolutions");
  resolution->require_subcommand(1);
  leaf(resolution, "ziegler", "Ziegler resolution of Omega^1", cmd_ziegler);
  leaf(resolution, "lebelt", "exterior power complexes", cmd_lebelt);
  CLI::App* demo = app.add_subcommand("demo", "worked examples");
  demo->require_subcommand(1);
  leaf(demo, "edelman-reiner", "the full Edelman-Reiner chain against golden values", cmd_demo);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  auto emit_error = [&](const std::string& kind, const std::string& message, int code, Json extra = Json()) {
    if (o.json) {
      Json e = error_json(kind, message);
      if (!extra.is_null()) e["witness"] = extra;
      out << e.dump(2) << "\n";
    }
    err << message << "\n";
    if (!o.json && !extra.is_null()) err << "witness: " << extra.dump() << "\n";
    return code;
  };

  try {
    const Outcome r = action();
    if (o.json)
      out << r.json.dump(2) << "\n";
    else
      out << r.text;
    return r.code;
  } catch (const UsageError& e) {
    return emit_error("usage", std::string("usage error: ") + e.what(), kUsage);
  } catch (const CutoffTooSmall& e) {
    return emit_error("cutoff", e.what(), kIncomplete);
  } catch (const HypothesisFailed& e) {
    return emit_error("hypothesis", e.what(), kFailed, e.witness() ? report::element_verdict(*e.witness()) : Json());
  } catch (const LimitDoesNotExist& e) {
    Json w;
    w["order"] = e.order();
    w["t_power"] = e.t_power();
    w["value"] = report::rat_string(e.value());
    return emit_error("limit", e.what(), kFailed, w);
  } catch (const GenericityViolated& e) {
    return emit_error("genericity", e.what(), kFailed, Json(e.witness()));
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    if (msg == "resolution incomplete") return emit_error("incomplete", msg, kIncomplete);
    return emit_error("usage", "usage error: " + msg, kUsage);
  } catch (const std::exception& e) {
    return emit_error("failure", e.what(), kFailed);
  }
}

}  // namespace logarr::cli
