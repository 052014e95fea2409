#pragma once

#include "kw/laurent.hpp"

#include <map>
#include <optional>

namespace kw {

// Rational function num / prod(factor^mult). Denominator factors are kept
// in canonical form (no monomial content, grlex-leading coefficient 1,
// non-constant); the unit stripped during canonicalization is folded into
// the numerator, so monomials and scalars never appear as factors.
//
// Factors need not be irreducible; correctness of addition, equality and
// polynomial extraction only needs them canonical. Keeping the denominator
// factored lets addition use the factorwise-max common denominator and lets
// cancellation proceed by trial division, which is what keeps repeated
// pairwise sums of operator terms from blowing up.
//
// Invariants: a zero numerator has an empty factor map; multiplicities are
// strictly positive.
class RatFunc {
 public:
  using FactorMap = std::map<LaurentPoly, int, LpLess>;

  explicit RatFunc(int nvars = 0);
  static RatFunc from_poly(LaurentPoly p);
  static RatFunc from_scalar(int nvars, const Rat& c);
  static RatFunc fraction(LaurentPoly num, const LaurentPoly& den);

  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  const LaurentPoly& num() const { return num_; }
  const FactorMap& den_factors() const { return den_; }
  LaurentPoly den_expanded() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { a += b; return a; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { a -= b; return a; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { a *= b; return a; }

  void negate();
  void mul_poly(const LaurentPoly& p);
  void mul_scalar(const Rat& c);
  // Multiply by 1/den (den nonzero).
  void div_poly(const LaurentPoly& den);

  RatFunc inverted_vars() const;
  RatFunc swapped_vars(int i, int j) const;
  RatFunc flipped_var(int j) const;

  // Exact equality as rational functions (clears the sum to zero).
  bool equals(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const { return equals(o); }

  // Cancel every denominator factor or throw NonzeroRemainder.
  LaurentPoly to_laurent() const;
  std::optional<LaurentPoly> try_to_laurent() const;

  // Cancel denominator factors that divide the numerator. Idempotent.
  void reduce();

  std::string str() const;

 private:
  void push_factor(const LaurentPoly& f, int mult);

  LaurentPoly num_;
  FactorMap den_;
};

}  // namespace kw
