#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kw/errors.hpp"
#include "kw/ratfunc.hpp"

#include <random>

using namespace kw;

namespace {

LaurentPoly one1() { return LaurentPoly::constant(1, Rat(1)); }

LaurentPoly z(int nvars, int j, int pw = 1) {
  return LaurentPoly::variable(nvars, j, pw);
}

LaurentPoly random_poly(std::mt19937& rng, int nvars, int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expo(-2, 2);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  LaurentPoly p(nvars);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Exp e = exp_zero();
    for (int v = 0; v < nvars; ++v) e[v] = static_cast<int16_t>(expo(rng));
    // The two-argument constructor does not canonicalize on its own.
    Rat c(num(rng), den(rng));
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

}  // namespace

TEST_CASE("common denominator sums collapse") {
  LaurentPoly den = one1() - z(1, 0);
  RatFunc a = RatFunc::fraction(one1(), den);
  RatFunc b = RatFunc::fraction(-z(1, 0), den);
  RatFunc sum = a + b;
  CHECK(sum.den_factors().empty());
  CHECK(sum.num() == one1());
}

TEST_CASE("multiplying by zero annihilates") {
  RatFunc a = RatFunc::fraction(one1() + z(1, 0), one1() - z(1, 0));
  RatFunc zero = RatFunc::from_scalar(1, Rat(0));
  CHECK((a * zero).is_zero());
  CHECK((zero * a).is_zero());
}

TEST_CASE("reciprocal product is one") {
  Rat t(1, 9);
  LaurentPoly tz = z(1, 0).scaled(t);
  RatFunc f = RatFunc::fraction(one1() - tz, one1() - z(1, 0));
  RatFunc g = RatFunc::fraction(one1() - z(1, 0), one1() - tz);
  RatFunc prod = f * g;
  CHECK(prod.equals(RatFunc::from_scalar(1, Rat(1))));
  CHECK(prod.to_laurent() == one1());
}

TEST_CASE("to_laurent divides exactly or throws") {
  RatFunc ok = RatFunc::fraction(one1() - z(1, 0, 2), one1() - z(1, 0));
  CHECK(ok.to_laurent() == one1() + z(1, 0));
  RatFunc bad = RatFunc::fraction(one1(), one1() - z(1, 0));
  CHECK_THROWS_AS(bad.to_laurent(), NonzeroRemainder);
  CHECK_FALSE(bad.try_to_laurent().has_value());
}

TEST_CASE("poly times its denominator recovers the poly") {
  std::mt19937 rng(23);
  int done = 0;
  while (done < 25) {
    LaurentPoly p = random_poly(rng, 2, 4);
    LaurentPoly d = random_poly(rng, 2, 3);
    if (d.is_zero()) continue;
    RatFunc f = RatFunc::fraction(p * d, d);
    CHECK(f.to_laurent() == p);
    ++done;
  }
}

TEST_CASE("equality matches cross multiplication") {
  std::mt19937 rng(29);
  int done = 0;
  while (done < 25) {
    LaurentPoly p1 = random_poly(rng, 2, 3);
    LaurentPoly p2 = random_poly(rng, 2, 3);
    LaurentPoly d1 = random_poly(rng, 2, 2);
    LaurentPoly d2 = random_poly(rng, 2, 2);
    if (d1.is_zero() || d2.is_zero()) continue;
    RatFunc f = RatFunc::fraction(p1, d1);
    RatFunc g = RatFunc::fraction(p2, d2);
    CHECK(f.equals(g) == (p1 * d2 == p2 * d1));
    ++done;
  }
}

TEST_CASE("same value through different denominators compares equal") {
  LaurentPoly d = one1() - z(1, 0);
  RatFunc f = RatFunc::fraction(one1() + z(1, 0), d * d);
  RatFunc g = RatFunc::fraction((one1() + z(1, 0)) * (one1() - z(1, 0, 2)),
                                d * d * (one1() - z(1, 0, 2)));
  CHECK(f.equals(g));
  CHECK_FALSE(f.equals(g + RatFunc::from_scalar(1, Rat(1, 7))));
}

TEST_CASE("arithmetic against scalar reference on random expressions") {
  // Evaluate both the RatFunc and its defining expression at a rational
  // point with nonvanishing denominators.
  std::mt19937 rng(31);
  std::vector<Rat> pt = {Rat(3, 7), Rat(5, 2)};
  int done = 0;
  while (done < 20) {
    LaurentPoly p1 = random_poly(rng, 2, 3);
    LaurentPoly d1 = random_poly(rng, 2, 2);
    LaurentPoly p2 = random_poly(rng, 2, 3);
    LaurentPoly d2 = random_poly(rng, 2, 2);
    if (d1.is_zero() || d2.is_zero()) continue;
    Rat e1 = d1.eval_rat(pt), e2 = d2.eval_rat(pt);
    if (rat_is_zero(e1) || rat_is_zero(e2)) continue;
    RatFunc f = RatFunc::fraction(p1, d1);
    RatFunc g = RatFunc::fraction(p2, d2);
    RatFunc s = f + g;
    RatFunc m = f * g;
    Rat fs = p1.eval_rat(pt) / e1, gs = p2.eval_rat(pt) / e2;
    Rat den_s = s.den_expanded().eval_rat(pt);
    Rat den_m = m.den_expanded().eval_rat(pt);
    REQUIRE_FALSE(rat_is_zero(den_s));
    REQUIRE_FALSE(rat_is_zero(den_m));
    CHECK(s.num().eval_rat(pt) / den_s == fs + gs);
    CHECK(m.num().eval_rat(pt) / den_m == fs * gs);
    ++done;
  }
}

TEST_CASE("variable maps commute with the quotient structure") {
  LaurentPoly num = one1() - z(1, 0).scaled(Rat(1, 9));
  LaurentPoly den = one1() - z(1, 0);
  RatFunc f = RatFunc::fraction(num, den);
  RatFunc finv = f.inverted_vars();
  CHECK(finv.equals(RatFunc::fraction(num.inverted_vars(), den.inverted_vars())));
  CHECK(finv.inverted_vars().equals(f));
  LaurentPoly num2 = LaurentPoly::constant(2, Rat(1));
  LaurentPoly den2 = num2 - z(2, 0) * z(2, 1, -1);
  RatFunc g = RatFunc::fraction(num2 + z(2, 0), den2);
  CHECK(g.swapped_vars(0, 1).swapped_vars(0, 1).equals(g));
  CHECK(g.flipped_var(0).flipped_var(0).equals(g));
}

TEST_CASE("denominator factors stay canonical") {
  // Scaled and shifted copies of the same factor must merge.
  LaurentPoly d1 = (one1() - z(1, 0)).scaled(Rat(-2, 3));
  LaurentPoly d2 = (one1() - z(1, 0)).shifted([] {
    Exp e = exp_zero();
    e[0] = -2;
    return e;
  }());
  RatFunc f = RatFunc::fraction(one1(), d1);
  RatFunc g = RatFunc::fraction(one1(), d2);
  RatFunc s = f + g;
  CHECK(s.den_factors().size() == 1);
  for (const auto& [fac, mult] : s.den_factors()) {
    CHECK(mult == 1);
    CHECK(fac.leading().second == Rat(1));
    CHECK(fac.min_exponents() == exp_zero());
  }
}
