#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kw/errors.hpp"
#include "kw/partition.hpp"

#include <algorithm>
#include <set>

using namespace kw;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

LaurentPoly z(int nvars, int j, int pw = 1) {
  return LaurentPoly::variable(nvars, j, pw);
}

}  // namespace

TEST_CASE("dominance basics per flavor") {
  CHECK(dominance_leq(P({1, 1}), P({2, 0}), Flavor::BC));
  CHECK_FALSE(dominance_leq(P({2, 2}), P({3, 0}), Flavor::BC));
  CHECK_FALSE(dominance_leq(P({3, 0}), P({2, 2}), Flavor::BC));
  CHECK(dominance_leq(P({1, 0}), P({1, 1}), Flavor::BC));
  CHECK_FALSE(dominance_leq(P({1, 0}), P({1, 1}), Flavor::A));
  CHECK(dominance_leq(P({1, 1}), P({2, 0}), Flavor::A));
  CHECK_THROWS_AS(dominance_leq(P({1}), P({1, 0}), Flavor::BC),
                  std::invalid_argument);
}

TEST_CASE("dominance is a partial order, exhaustively for small ranges") {
  for (Flavor f : {Flavor::A, Flavor::BC}) {
    std::vector<Partition> all = weights_up_to(3, 4, f);
    for (const auto& a : all) {
      CHECK(dominance_leq(a, a, f));
      for (const auto& b : all) {
        if (dominance_leq(a, b, f) && dominance_leq(b, a, f)) CHECK(a == b);
        for (const auto& c : all)
          if (dominance_leq(a, b, f) && dominance_leq(b, c, f))
            CHECK(dominance_leq(a, c, f));
      }
    }
  }
}

TEST_CASE("BC dominance equals the decreasing test vector criterion") {
  // mu <= lam iff sum mu_j y_j <= sum lam_j y_j for every strictly
  // decreasing positive y. The prefix indicator vectors perturbed by a
  // small slope are extreme enough to decide both directions exactly.
  const int n = 3;
  const Rat eps(1, 1000);
  std::vector<std::vector<Rat>> suite;
  for (int k = 1; k <= n; ++k) {
    std::vector<Rat> y(n);
    for (int j = 0; j < n; ++j)
      y[j] = (j < k ? Rat(1) : Rat(0)) + eps * Rat(n - j);
    suite.push_back(std::move(y));
  }
  std::vector<Partition> all = weights_up_to(n, 4, Flavor::BC);
  for (const auto& mu : all)
    for (const auto& lam : all) {
      bool every = true;
      for (const auto& y : suite) {
        Rat dm(0), dl(0);
        for (int j = 0; j < n; ++j) {
          dm += y[j] * Rat(mu.parts[j]);
          dl += y[j] * Rat(lam.parts[j]);
        }
        if (dm > dl) every = false;
      }
      CHECK(dominance_leq(mu, lam, Flavor::BC) == every);
    }
}

TEST_CASE("order ideals, frozen") {
  auto ideal = order_ideal(P({1, 1}), Flavor::BC);
  REQUIRE(ideal.size() == 3);
  CHECK(ideal[0] == P({0, 0}));
  CHECK(ideal[1] == P({1, 0}));
  CHECK(ideal[2] == P({1, 1}));
  auto ideal2 = order_ideal(P({2, 0}), Flavor::BC);
  REQUIRE(ideal2.size() == 4);
  CHECK(ideal2[0] == P({0, 0}));
  CHECK(ideal2[1] == P({1, 0}));
  CHECK(ideal2[2] == P({1, 1}));
  CHECK(ideal2[3] == P({2, 0}));
  auto triv = order_ideal(P({0, 0, 0}), Flavor::BC);
  REQUIRE(triv.size() == 1);
  CHECK(triv[0] == P({0, 0, 0}));
  auto idealA = order_ideal(P({2, 0}), Flavor::A);
  REQUIRE(idealA.size() == 2);
  CHECK(idealA[0] == P({1, 1}));
  CHECK(idealA[1] == P({2, 0}));
  auto idealAneg = order_ideal(P({1, -1}), Flavor::A);
  REQUIRE(idealAneg.size() == 2);
  CHECK(idealAneg[0] == P({0, 0}));
  CHECK(idealAneg[1] == P({1, -1}));
}

TEST_CASE("ideals are downward closed and end at the top weight") {
  for (Flavor f : {Flavor::A, Flavor::BC}) {
    for (const auto& lam :
         {P({2, 1, 0}), P({3, 1, 1}), P({2, 2, 0}), P({4, 0, 0})}) {
      auto ideal = order_ideal(lam, f);
      CHECK(ideal.back() == lam);
      std::set<Partition> in(ideal.begin(), ideal.end());
      for (const auto& mu : ideal)
        for (const auto& nu : weights_up_to(3, lam.weight(), f))
          if (dominance_leq(nu, mu, f)) CHECK(in.count(nu) == 1);
      CHECK(std::is_sorted(ideal.begin(), ideal.end(), linext_less));
    }
  }
}

TEST_CASE("linear extension is a strict total order refining dominance") {
  for (Flavor f : {Flavor::A, Flavor::BC}) {
    std::vector<Partition> all = weights_up_to(3, 4, f);
    for (const auto& a : all)
      for (const auto& b : all) {
        if (a == b) {
          CHECK_FALSE(linext_less(a, b));
          continue;
        }
        CHECK(linext_less(a, b) != linext_less(b, a));
        if (dominance_leq(a, b, f)) CHECK(linext_less(a, b));
      }
  }
}

TEST_CASE("reverse-lex tiebreak at equal weight") {
  // (4,1,1) and (3,3,0) are dominance-incomparable; the larger entry at the
  // last differing index wins.
  CHECK(linext_less(P({4, 1, 1}), P({3, 3, 0})));
  CHECK_FALSE(linext_less(P({3, 3, 0}), P({4, 1, 1})));
  CHECK(linext_less(P({1, 1}), P({2, 0})));
  CHECK(linext_less(P({2, 2, 2}), P({3, 2, 1})));
}

TEST_CASE("dominant representatives") {
  Exp e = exp_zero();
  e[0] = -2;
  e[1] = 1;
  CHECK(dominant_rep(e, 2, Flavor::BC) == P({2, 1}));
  CHECK(dominant_rep(e, 2, Flavor::A) == P({1, -2}));
  Exp f = exp_zero();
  f[0] = 1;
  f[1] = 2;
  CHECK(dominant_rep(f, 2, Flavor::A) == P({2, 1}));
}

TEST_CASE("orbits, frozen") {
  auto o10 = w_orbit(P({1, 0}), Flavor::BC);
  CHECK(o10.size() == 4);
  auto o11 = w_orbit(P({1, 1}), Flavor::BC);
  CHECK(o11.size() == 4);
  auto oA = w_orbit(P({2, 1}), Flavor::A);
  CHECK(oA.size() == 2);
  CHECK(w_orbit(P({0, 0}), Flavor::BC).size() == 1);
  CHECK(w_orbit(P({1, 1, 0}), Flavor::BC).size() == 12);
}

TEST_CASE("symmetrized monomials, frozen") {
  CHECK(monomial(P({0, 0}), Flavor::BC) == LaurentPoly::constant(2, Rat(1)));
  LaurentPoly m10 = z(2, 0) + z(2, 0, -1) + z(2, 1) + z(2, 1, -1);
  CHECK(monomial(P({1, 0}), Flavor::BC) == m10);
  LaurentPoly m11 = z(2, 0) * z(2, 1) + z(2, 0) * z(2, 1, -1) +
                    z(2, 0, -1) * z(2, 1) + z(2, 0, -1) * z(2, 1, -1);
  CHECK(monomial(P({1, 1}), Flavor::BC) == m11);
  CHECK(monomial(P({2, 1}), Flavor::A) ==
        z(2, 0, 2) * z(2, 1) + z(2, 0) * z(2, 1, 2));
}

TEST_CASE("invariance recognition") {
  CHECK(is_w_invariant(monomial(P({2, 1}), Flavor::BC), Flavor::BC));
  CHECK_FALSE(is_w_invariant(z(2, 0), Flavor::BC));
  CHECK_FALSE(is_w_invariant(monomial(P({2, 1}), Flavor::A), Flavor::BC));
  CHECK(is_w_invariant(monomial(P({2, 1}), Flavor::A), Flavor::A));
  for (const auto& lam : weights_up_to(2, 3, Flavor::BC))
    CHECK(monomial(lam, Flavor::BC).inverted_vars() ==
          monomial(lam, Flavor::BC));
}

TEST_CASE("invariant expansion") {
  LaurentPoly f =
      monomial(P({1, 0}), Flavor::BC) +
      monomial(P({0, 0}), Flavor::BC).scaled(Rat(3));
  auto ex = expand_w_invariant(f, Flavor::BC);
  REQUIRE(ex.size() == 2);
  CHECK(ex.at(P({1, 0})) == Rat(1));
  CHECK(ex.at(P({0, 0})) == Rat(3));
  CHECK_THROWS_AS(expand_w_invariant(z(2, 0), Flavor::BC), NotWInvariant);
  for (Flavor fl : {Flavor::A, Flavor::BC})
    for (const auto& lam : weights_up_to(3, 3, fl)) {
      auto self = expand_w_invariant(monomial(lam, fl), fl);
      REQUIRE(self.size() == 1);
      CHECK(self.at(lam) == Rat(1));
    }
}

TEST_CASE("product of monomials re-expands by orbit counting") {
  LaurentPoly prod =
      monomial(P({1, 1}), Flavor::BC) * monomial(P({1, 0}), Flavor::BC);
  auto ex = expand_w_invariant(prod, Flavor::BC);
  REQUIRE(ex.size() == 2);
  CHECK(ex.at(P({2, 1})) == Rat(1));
  CHECK(ex.at(P({1, 0})) == Rat(2));
}

TEST_CASE("weight sweeps are sorted and complete") {
  auto w = weights_up_to(2, 2, Flavor::BC);
  REQUIRE(w.size() == 4);
  CHECK(w[0] == P({0, 0}));
  CHECK(w[1] == P({1, 0}));
  CHECK(w[2] == P({1, 1}));
  CHECK(w[3] == P({2, 0}));
  CHECK(weights_up_to(3, 3, Flavor::BC).size() == 7);
  for (const auto& lam : weights_up_to(3, 4, Flavor::BC))
    CHECK(lam.valid(Flavor::BC));
}
