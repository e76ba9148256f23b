#include <algorithm>
#include <random>

#include "doctest.h"
#include "logarr/resolutions/resolutions.hpp"

using namespace logarr;

TEST_SUITE("resolutions") {
  TEST_CASE("ziegler_matrix shape for four generic planes") {
    const auto a = generic_arrangement(2, 4, 5);
    const auto z = ziegler_matrix(a);
    REQUIRE(z.tau.size() == 4);
    REQUIRE(z.tau[0].size() == 1);
    const auto& a3 = z.coefficients[3];
    for (int j = 0; j < 3; ++j) CHECK(z.tau[static_cast<std::size_t>(j)][0] == MPoly::variable(3, j) * a3[static_cast<std::size_t>(j)]);
    CHECK(z.tau[3][0] == -MPoly::linear_form(a3));
    CHECK(z.source_twists == std::vector<int>{0});
    CHECK(z.target_twists == std::vector<int>{1, 1, 1, 1});
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(z.coefficients[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == (i == j ? 1 : 0));
    // The coefficients express each form through the first three.
    for (int q = 0; q < 3; ++q) {
      Rat sum = 0;
      for (int j = 0; j < 3; ++j) sum += a3[static_cast<std::size_t>(j)] * a.form_rat(j)[static_cast<std::size_t>(q)];
      CHECK(sum == a.form_rat(3)[static_cast<std::size_t>(q)]);
    }
  }

  TEST_CASE("ziegler_matrix on a boolean arrangement has no columns") {
    const auto z = ziegler_matrix(boolean_arrangement(3));
    CHECK(z.columns() == 0);
    CHECK(z.source_twists.empty());
    const auto rep = ziegler_check(boolean_arrangement(3), -1, 4);
    CHECK(rep.ok());
    for (const auto& g : rep.degrees) CHECK(g.module_dim == 3 * (g.m + 1 < 0 ? 0 : dim_polys(3, g.m + 1)));
  }

  TEST_CASE("ziegler_matrix rejects non generic input") {
    try {
      (void)ziegler_matrix(nlf_demo());
      FAIL("expected GenericityViolated");
    } catch (const GenericityViolated& e) {
      CHECK(std::string(e.what()).rfind("genericity violated", 0) == 0);
      std::vector<std::vector<Rat>> vs;
      for (int i : e.witness()) vs.push_back(nlf_demo().form_rat(i));
      CHECK(vector_rank(vs) < static_cast<int>(vs.size()));
    }
    CHECK_THROWS_AS(ziegler_matrix(braid_arrangement(3)), GenericityViolated);
  }

  TEST_CASE("ziegler_check examples") {
    const auto rep = ziegler_check(generic_arrangement(2, 4, 0), -1, 4);
    CHECK(rep.ok());
    CHECK(rep.complex_ok);
    CHECK(rep.degrees[0].module_dim == 4);
    CHECK(rep.degrees[1].module_dim == 11);
    for (int seed : {0, 1}) {
      const auto r6 = ziegler_check(generic_arrangement(3, 6, seed), -1, 2);
      CHECK(r6.ok());
      CHECK(!r6.first_failure().has_value());
    }
  }

  TEST_CASE("ziegler_check over seeded generic arrangements") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {3, 5}})
      for (int seed = 0; seed < 3; ++seed) {
        const auto a = generic_arrangement(n, d, seed);
        CAPTURE(a.name());
        const auto rep = ziegler_check(a, -1, 4);
        CHECK(rep.ok());
      }
  }

  TEST_CASE("lebelt_terms examples") {
    const auto t = lebelt_terms({1, 1, 1, 1}, {0}, 2);
    REQUIRE(t.terms.size() == 3);
    CHECK(t.terms[2].rank == 1);
    CHECK(t.terms[2].twists == std::vector<int>{0});
    CHECK(t.terms[1].rank == 4);
    CHECK(t.terms[1].twists == std::vector<int>{1, 1, 1, 1});
    CHECK(t.terms[0].rank == 6);
    CHECK(t.terms[0].twists == std::vector<int>(6, 2));

    const auto d2 = lebelt_terms({}, {-6, -7}, 2);
    CHECK(d2.terms[2].rank == 3);
    CHECK(d2.terms[2].twists == std::vector<int>{-12, -13, -14});

    const auto p1 = lebelt_terms({1, 1, 1, 1}, {0}, 1);
    REQUIRE(p1.terms.size() == 2);
    CHECK(p1.terms[0].twists == std::vector<int>{1, 1, 1, 1});
    CHECK(p1.terms[1].twists == std::vector<int>{0});
  }

  TEST_CASE("lebelt rank bookkeeping and permutation invariance") {
    std::mt19937 gen(3);
    for (int trial = 0; trial < 40; ++trial) {
      const int rank = 2 + static_cast<int>(gen() % 3);
      const int s1 = static_cast<int>(gen() % 4);
      std::vector<int> f0, f1;
      for (int k = 0; k < rank + s1; ++k) f0.push_back(static_cast<int>(gen() % 7) - 3);
      for (int k = 0; k < s1; ++k) f1.push_back(static_cast<int>(gen() % 7) - 5);
      const int p = 1 + static_cast<int>(gen() % rank);
      const auto t = lebelt_terms(f0, f1, p);
      CHECK(t.euler_rank() == static_cast<std::int64_t>(binomial(rank, p).get_si()));
      for (const auto& term : t.terms) {
        const BigInt multisets = term.i == 0 ? BigInt(1) : BigInt(binomial(s1 + term.i - 1, term.i));
        const BigInt expect = multisets * binomial(rank + s1, p - term.i);
        CHECK(term.rank == expect.get_si());
      }
      std::shuffle(f0.begin(), f0.end(), gen);
      std::shuffle(f1.begin(), f1.end(), gen);
      const auto u = lebelt_terms(f0, f1, p);
      for (std::size_t i = 0; i < t.terms.size(); ++i) CHECK(u.terms[i].twists == t.terms[i].twists);
    }
  }

  TEST_CASE("lebelt_check on generic arrangements") {
    const auto g24 = lebelt_check(generic_arrangement(2, 4, 0), 1, -2, 3);
    CHECK(g24.ok());
    const auto g36 = lebelt_check(generic_arrangement(3, 6, 0), 2, -4, 0);
    CHECK(g36.hypothesis_ok);
    CHECK(g36.euler_ok());
    CHECK(g36.wedge_ok());
    CHECK(g36.pdim == 2);
    CHECK(g36.pdim_top == 0);
    CHECK(g36.ok());
  }

  TEST_CASE("lebelt_check reports hypothesis failures separately") {
    const auto top = lebelt_check(generic_arrangement(3, 6, 0), 3, -4, 0);
    CHECK_FALSE(top.hypothesis_ok);
    CHECK(top.euler.empty());
    const auto nlf = lebelt_check(nlf_demo(), 1, 0, 2);
    CHECK_FALSE(nlf.hypothesis_ok);
    CHECK(nlf.hypothesis == "not locally free");
    const auto free = lebelt_check(boolean_arrangement(4), 1, 0, 2);
    CHECK_FALSE(free.hypothesis_ok);
  }

  TEST_CASE("top exterior degree of a generic arrangement has pdim n-1") {
    CHECK(betti_probe(generic_arrangement(3, 6, 0), ModuleSelector{Side::Form, 3, false}).pdim() == 2);
  }

  TEST_CASE("derivation side mirror on Edelman-Reiner") {
    LebeltOptions opts;
    opts.backend = Backend::Modular;
    opts.compare_wedge = false;
    opts.probe_pdim = false;
    const auto rep = lebelt_check(edelman_reiner(), 2, 2, 9, Side::Der, opts);
    CHECK(rep.hypothesis_ok);
    CHECK(rep.euler_ok());
    CHECK(rep.base.row(0) == std::vector<int>{1, 5, 5, 5, 5});
    CHECK(rep.base.row(1) == std::vector<int>{6});
    CHECK_FALSE(rep.ok());
  }
}
