#include <map>
#include <random>

#include "doctest.h"
#include "logarr/arrangement/io.hpp"
#include "logarr/arrangement/lattice.hpp"

using namespace logarr;

namespace {

UPoly up(std::initializer_list<long> cs) {
  std::vector<Rat> v;
  for (long c : cs) v.emplace_back(c);
  return UPoly(v);
}

std::vector<Arrangement> sample_arrangements() {
  return {boolean_arrangement(2),
          boolean_arrangement(3),
          braid_arrangement(3),
          braid_arrangement(4),
          generic_arrangement(2, 4, 1),
          generic_arrangement(2, 5, 2),
          make_arrangement(2, std::vector<Form>{{1, 0}, {0, 1}, {1, 1}}),
          nlf_demo(),
          edelman_reiner()};
}

/// Rewrites every form l as l * g for an invertible integer matrix g.
Arrangement transformed(const Arrangement& a, const std::vector<std::vector<long>>& g) {
  std::vector<std::vector<Rat>> out;
  for (const auto& f : a.forms()) {
    std::vector<Rat> v(static_cast<std::size_t>(a.n_vars()));
    for (int j = 0; j < a.n_vars(); ++j)
      for (int k = 0; k < a.n_vars(); ++k)
        v[static_cast<std::size_t>(j)] += Rat(static_cast<long>(f[static_cast<std::size_t>(k)])) * g[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    out.push_back(v);
  }
  return make_arrangement(a.n_vars(), out);
}

}  // namespace

TEST_SUITE("arrangement") {
  TEST_CASE("make_arrangement examples") {
    const auto b2 = make_arrangement(2, std::vector<Form>{{1, 0}, {0, 1}});
    CHECK(b2.d() == 2);
    CHECK(b2.essential());

    const auto three = make_arrangement(2, std::vector<Form>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(three.essential());
    const MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    CHECK(three.Q() == x * y * (x + y));

    CHECK_THROWS_WITH_AS(make_arrangement(4, std::vector<Form>{{1, 0, 0, 0}, {2, 0, 0, 0}}), "duplicate hyperplane",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(make_arrangement(2, std::vector<Form>{{0, 0}}), "degenerate form", std::invalid_argument);
  }

  TEST_CASE("forms are normalized primitive with positive leading entry") {
    const auto a = make_arrangement(3, std::vector<std::vector<Rat>>{{Rat(-2), Rat(4), Rat(6)}, {Rat(0), Rat(1, 2), Rat(-1, 3)}});
    CHECK(a.form(0) == Form{1, -2, -3});
    CHECK(a.form(1) == Form{0, 3, -2});
  }

  TEST_CASE("family examples") {
    const auto er = family("edelman_reiner");
    CHECK(er.d() == 15);
    CHECK(er.n_vars() == 4);
    CHECK(er.essential());
    const auto b3 = family("boolean:3");
    CHECK(b3.Q() == MPoly::variable(3, 0) * MPoly::variable(3, 1) * MPoly::variable(3, 2));
    const auto br = family("braid:3");
    CHECK(br.d() == 3);
    CHECK_FALSE(br.essential());
    CHECK(br.rank() == 2);
    CHECK(family("nlf-demo").essential());
    CHECK_THROWS_AS(family("generic:3,2,1"), std::invalid_argument);
    CHECK_THROWS_AS(family("nope"), std::invalid_argument);
    CHECK_THROWS_AS(family("boolean:x"), std::invalid_argument);
  }

  TEST_CASE("generic family is deterministic and generic") {
    const auto g1 = generic_arrangement(3, 6, 42), g2 = generic_arrangement(3, 6, 42);
    CHECK(g1.forms() == g2.forms());
    const auto l = intersection_lattice(g1);
    // Every k-subset with k <= n+1 is independent, so rank-k flats are exactly the k-subsets.
    CHECK(l.at_rank(1).size() == 6);
    CHECK(l.at_rank(2).size() == 15);
    CHECK(l.at_rank(3).size() == 20);
    CHECK(l.at_rank(4).size() == 1);
  }

  TEST_CASE("lattice examples") {
    const auto l = intersection_lattice(boolean_arrangement(2));
    REQUIRE(l.size() == 4);
    CHECK(l.mobius(0) == 1);
    CHECK(l.mobius(1) == -1);
    CHECK(l.mobius(2) == -1);
    CHECK(l.mobius(3) == 1);

    CHECK(intersection_lattice(edelman_reiner()).at_rank(3).size() == 45);

    const auto g = intersection_lattice(generic_arrangement(2, 4, 7));
    CHECK(g.size() == 12);
    CHECK(g.mobius(g.size() - 1) == -3);
  }

  TEST_CASE("Poincare and characteristic polynomial examples") {
    CHECK(poincare_poly(edelman_reiner()) == up({1, 15, 80, 170, 104}));
    for (int m = 1; m <= 4; ++m) CHECK(poincare_poly(boolean_arrangement(m)) == UPoly::one_plus(1).pow(m));
    const auto three = make_arrangement(2, std::vector<Form>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(poincare_poly(three) == up({1, 3, 2}));
    CHECK(characteristic_poly(three) == up({2, -3, 1}));
  }

  TEST_CASE("ER localizations at rank 3") {
    const auto er = edelman_reiner();
    const auto l = intersection_lattice(er);
    std::map<int, int> census;
    std::map<int, std::vector<std::int64_t>> mus;
    for (int x : l.at_rank(3)) {
      const auto loc = localize(er, l, x);
      const auto ess = essentialize(loc.arrangement);
      CHECK(ess.arrangement.n_vars() == 3);
      CHECK(ess.empty_factor_dim == 1);
      const int k = loc.arrangement.d();
      ++census[k];
      const auto mu = mu_multiset(intersection_lattice(ess.arrangement), 2);
      if (mus.count(k)) CHECK(mus[k] == mu);
      mus[k] = mu;
    }
    CHECK(census == std::map<int, int>{{3, 20}, {5, 15}, {7, 10}});
    CHECK(mus[3] == std::vector<std::int64_t>{1, 1, 1});
    CHECK(mus[5] == std::vector<std::int64_t>{2, 2, 1, 1, 1, 1});
    CHECK(mus[7] == std::vector<std::int64_t>{2, 2, 2, 2, 2, 2, 1, 1, 1});
  }

  TEST_CASE("localize and essentialize examples") {
    const auto e = essentialize(braid_arrangement(3));
    CHECK(e.arrangement.n_vars() == 2);
    CHECK(e.arrangement.d() == 3);
    CHECK(e.arrangement.essential());
    CHECK(e.empty_factor_dim == 1);

    const auto a = edelman_reiner();
    const auto l = intersection_lattice(a);
    const auto at_v = localize(a, l, 0);
    CHECK(at_v.arrangement.d() == 0);
    CHECK(poincare_poly(at_v.arrangement) == up({1}));
    CHECK_THROWS_WITH_AS(localize(a, l, l.size()), "unknown element", std::out_of_range);
    LatticeElement bogus;
    bogus.basis = {{Rat(1), Rat(2), Rat(3), Rat(5)}};
    CHECK_THROWS_AS(localize(a, l, bogus), std::out_of_range);
  }

  TEST_CASE("global polynomial identities on every sample arrangement") {
    for (const auto& a : sample_arrangements()) {
      CAPTURE(a.name());
      const auto l = intersection_lattice(a);
      const UPoly pi = poincare_poly(l);
      CHECK(pi(Rat(-1)) == 0);
      CHECK(characteristic_poly(l, a.n_vars()) == chi_from_pi(pi, a.n_vars()));
      CHECK(pi[0] == 1);
      CHECK(pi[1] == a.d());
      CHECK(poincare_poly(essentialize(a).arrangement) == pi);
    }
  }

  TEST_CASE("localization lattice is the lower interval") {
    for (const auto& a : {edelman_reiner(), braid_arrangement(4), nlf_demo()}) {
      const auto l = intersection_lattice(a);
      for (int x = 0; x < l.size(); ++x) {
        const auto sub = intersection_lattice(localize(a, l, x).arrangement);
        std::vector<std::int64_t> interval_mu, sub_mu;
        for (int y = 0; y < l.size(); ++y)
          if (l.leq(y, x)) interval_mu.push_back(l.mobius(y));
        for (int y = 0; y < sub.size(); ++y) sub_mu.push_back(sub.mobius(y));
        std::sort(interval_mu.begin(), interval_mu.end());
        std::sort(sub_mu.begin(), sub_mu.end());
        CHECK(interval_mu == sub_mu);
      }
    }
  }

  TEST_CASE("rank census and mu multisets survive a change of coordinates") {
    const std::vector<std::vector<long>> g{{1, 2, 0, -1}, {0, 1, 3, 0}, {1, 0, 1, 1}, {0, 0, 1, 2}};
    for (const auto& a : {edelman_reiner(), nlf_demo(), braid_arrangement(4)}) {
      const auto l1 = intersection_lattice(a), l2 = intersection_lattice(transformed(a, g));
      REQUIRE(l1.top_rank() == l2.top_rank());
      for (int r = 0; r <= l1.top_rank(); ++r) CHECK(mu_multiset(l1, r) == mu_multiset(l2, r));
    }
  }

  TEST_CASE("JSON ingestion round-trips") {
    const auto a = edelman_reiner();
    const auto b = arrangement_from_json(to_json(a));
    CHECK(a.forms() == b.forms());
    CHECK(b.name() == "edelman-reiner");
    CHECK_THROWS_AS(arrangement_from_json(nlohmann::json::parse(R"({"forms": []})")), std::invalid_argument);
    const auto c = arrangement_from_json(nlohmann::json::parse(R"({"n_vars": 2, "forms": [[-2, 4], [0, 3]]})"));
    CHECK(c.form(0) == Form{1, -2});
    CHECK(c.form(1) == Form{0, 1});
  }
}
