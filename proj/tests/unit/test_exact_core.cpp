#include <random>

#include "doctest.h"
#include "logarr/core/hilbert.hpp"
#include "logarr/core/linalg.hpp"
#include "logarr/core/monomial.hpp"
#include "logarr/core/mpoly.hpp"
#include "logarr/core/truncated.hpp"

using namespace logarr;

namespace {

RatMatrix random_matrix(std::mt19937_64& gen, int r, int c) {
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = static_cast<long>(gen() % 7) - 3;
  // Force some rank deficiency now and then.
  if (r > 2 && gen() % 2 == 0)
    for (int j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - m(1, j);
  return m;
}

TruncPoly tp(std::initializer_list<long> cs, int modulus) {
  std::vector<Rat> v;
  for (long c : cs) v.emplace_back(c);
  return TruncPoly(modulus, v);
}

}  // namespace

TEST_SUITE("exact_core") {
  TEST_CASE("kernel_basis of proportional rows") {
    const auto k = kernel_basis(RatMatrix{{1, 1}, {2, 2}});
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<Rat>{-1, 1});
  }

  TEST_CASE("kernel_basis of the identity is empty") {
    CHECK(kernel_basis(RatMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).empty());
  }

  TEST_CASE("kernel_basis of the zero map is everything") {
    const auto k = kernel_basis(RatMatrix(2, 3));
    REQUIRE(k.size() == 3);
    CHECK(k[0] == std::vector<Rat>{1, 0, 0});
    CHECK(k[2] == std::vector<Rat>{0, 0, 1});
  }

  TEST_CASE("rank plus nullity and exact annihilation on random matrices") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 60; ++trial) {
      const int r = 1 + static_cast<int>(gen() % 6), c = 1 + static_cast<int>(gen() % 7);
      const RatMatrix m = random_matrix(gen, r, c);
      const auto k = kernel_basis(m);
      CHECK(rank(m) + static_cast<int>(k.size()) == c);
      for (const auto& v : k)
        for (const auto& x : m.apply(v)) CHECK(x == 0);
    }
  }

  TEST_CASE("sparse elimination matches the dense reference, serial and parallel") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 40; ++trial) {
      const int r = 2 + static_cast<int>(gen() % 20), c = 2 + static_cast<int>(gen() % 20);
      const RatMatrix m = random_matrix(gen, r, c);
      const DenseRref ref = rref_reference(m);
      for (Exec ex : {Exec::Serial, Exec::Parallel}) {
        const auto ech = gauss_jordan(RatField{}, m.sparse_rows(), c, ex);
        REQUIRE(ech.pivots == ref.pivots);
        for (int k = 0; k < ech.rank(); ++k)
          for (int j = 0; j < c; ++j) {
            const int pos = ech.rows[static_cast<std::size_t>(k)].find(j);
            const Rat v = pos < 0 ? Rat(0) : ech.rows[static_cast<std::size_t>(k)].val[static_cast<std::size_t>(pos)];
            CHECK(v == ref.reduced(k, j));
          }
      }
    }
  }

  TEST_CASE("echelon_rank matches the dense reference, serial and parallel") {
    std::mt19937_64 gen(17);
    const ModField f(choose_prime(3));
    for (int trial = 0; trial < 40; ++trial) {
      const int r = 2 + static_cast<int>(gen() % 15), c = 2 + static_cast<int>(gen() % 15);
      const int k = 1 + static_cast<int>(gen() % 6);
      const RatMatrix a = random_matrix(gen, r, k), b = random_matrix(gen, k, c);
      RatMatrix m(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
          for (int t = 0; t < k; ++t) m(i, j) += a(i, t) * b(t, j);
      const int expected = static_cast<int>(rref_reference(m).pivots.size());
      std::vector<ModRow> mod;
      for (const auto& row : m.sparse_rows()) {
        ModRow mr;
        for (std::size_t j = 0; j < row.size(); ++j)
          if (const auto v = f.reduce(row.val[j]); v != 0) mr.push(row.idx[j], v);
        mod.push_back(mr);
      }
      for (Exec ex : {Exec::Serial, Exec::Parallel}) {
        CHECK(echelon_rank(RatField{}, m.sparse_rows(), c, ex) == expected);
        CHECK(echelon_rank(f, mod, c, ex) == expected);
      }
    }
    CHECK(echelon_rank(RatField{}, std::vector<RatRow>{}, 3) == 0);
  }

  TEST_CASE("modular elimination agrees in rank with exact elimination") {
    std::mt19937_64 gen(9);
    const ModField f(choose_prime(1));
    CHECK(is_prime_u32(f.p));
    for (int trial = 0; trial < 30; ++trial) {
      const RatMatrix m = random_matrix(gen, 8, 9);
      std::vector<ModRow> rows;
      for (const auto& r : m.sparse_rows()) {
        ModRow mr;
        for (std::size_t j = 0; j < r.size(); ++j) mr.push(r.idx[j], f.reduce(r.val[j]));
        rows.push_back(mr);
      }
      CHECK(gauss_jordan(f, rows, 9).rank() == rank(m));
    }
  }

  TEST_CASE("hilbert_series_free examples") {
    const auto h1 = hilbert_series_free({0}, 1);
    CHECK(h1.numerator == LaurentPoly{{0, 1}});
    CHECK(h1.denom_power == 2);
    const auto h2 = hilbert_series_free({1, 1, 1, 1}, 2);
    CHECK(h2.numerator == LaurentPoly{{-1, 4}});
    CHECK(h2.denom_power == 3);
    const auto h3 = hilbert_series_free({-5, -5, -5, -5}, 3);
    CHECK(h3.numerator == LaurentPoly{{5, 4}});
    CHECK(h3.denom_power == 4);
  }

  TEST_CASE("hilbert_series_free matches binomial dimension counts") {
    const std::vector<int> twists{2, 0, -1, -3};
    for (int n = 0; n <= 3; ++n) {
      const auto h = hilbert_series_free(twists, n);
      for (int m = -6; m <= 8; ++m) {
        std::int64_t want = 0;
        for (int a : twists) want += dim_polys(n + 1, m + a);
        CHECK(h.dim(m) == want);
      }
    }
  }

  TEST_CASE("expand_at_one examples") {
    const auto s1 = expand_at_one(LaurentPoly{{0, 1}}, 1, 1, 0);
    CHECK(s1.terms().size() == 1);
    CHECK(s1.coeff(-1)[0] == -1);

    const auto s2 = expand_at_one(LaurentPoly{{1, 1}}, 2, 1, -1);
    CHECK(s2.coeff(-2)[0] == 1);
    CHECK(s2.coeff(-1)[0] == 1);
    CHECK(s2.terms().size() == 2);

    const auto s3 = expand_at_one(LaurentPoly{{1, 1}, {5, 4}, {6, -1}}, 4, 1, 0);
    CHECK(s3.min_order() == -4);
    CHECK(s3.coeff(-4)[0] == 4);
  }

  TEST_CASE("expand_at_one round-trips to the numerator") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 20; ++trial) {
      LaurentPoly num;
      for (int k = 0; k < 4; ++k) num.add_term(static_cast<int>(gen() % 9) - 3, static_cast<long>(gen() % 11) - 5);
      const int k = static_cast<int>(gen() % 4);
      // Enough orders to reconstruct num(1+u) completely (degree in u <= span of exponents,
      // but negative exponents give infinite series; compare the truncation instead).
      const int cap = 6;
      const auto s = expand_at_one(num, k, 1, cap - k);
      // Multiply back by (-u)^k: coefficient of u^j in num(1+u) is sum_e c_e C(e, j).
      for (int j = 0; j <= cap; ++j) {
        Rat want = 0;
        for (const auto& [e, c] : num.terms()) want += c * gen_binomial(e, j);
        const Rat got = s.coeff(j - k)[0] * ((k % 2) ? -1 : 1);
        CHECK(got == want);
      }
    }
  }

  TEST_CASE("trunc_invert examples") {
    CHECK(trunc_invert(tp({1, 6}, 4)) == tp({1, -6, 36, -216}, 4));
    CHECK(trunc_invert(tp({1}, 3)) == tp({1}, 3));
    const TruncPoly pi = tp({1, 15, 80, 170, 104}, 5);
    CHECK(pi * trunc_invert(tp({1, 1}, 5)) == tp({1, 14, 66, 104, 0}, 5));
    CHECK_THROWS_WITH_AS(trunc_invert(tp({0, 1}, 3)), "not a unit", std::domain_error);
  }

  TEST_CASE("trunc_invert is a two-sided inverse on random units") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 50; ++trial) {
      const int m = 1 + static_cast<int>(gen() % 6);
      TruncPoly p(m);
      p[0] = Rat(static_cast<long>(gen() % 5) + 1) / Rat(static_cast<long>(gen() % 3) + 1);
      for (int k = 1; k < m; ++k) p[k] = static_cast<long>(gen() % 13) - 6;
      CHECK(p * trunc_invert(p) == TruncPoly(m, 1));
    }
  }

  TEST_CASE("exact division by a linear form") {
    const int nv = 3;
    const std::vector<Rat> l{1, 2, -1};
    const MPoly lin = MPoly::linear_form(l);
    const MPoly g = MPoly::variable(nv, 0) * MPoly::variable(nv, 2) + MPoly::variable(nv, 1).pow(2);
    CHECK(exact_divide_linear(lin * g, l) == g);
    CHECK_THROWS_AS(exact_divide_linear(g, l), std::domain_error);
  }

  TEST_CASE("monomial bases are graded-lex descending") {
    const auto& b = monomial_basis(3, 2);
    REQUIRE(b.size() == 6);
    CHECK(b[0] == Monomial::var(0, 2));
    CHECK(b[5] == Monomial::var(2, 2));
    for (int i = 0; i < b.size(); ++i) CHECK(b.index_of(b[i]) == i);
  }
}
