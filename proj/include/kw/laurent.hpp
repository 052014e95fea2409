#pragma once

#include "kw/errors.hpp"
#include "kw/rational.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kw {

// Hard cap on the number of variables; exponent vectors are fixed-width so
// they can be compared and hashed cheaply. Lanes at index >= nvars stay 0.
inline constexpr int kMaxVars = 8;

using Exp = std::array<int16_t, kMaxVars>;

inline Exp exp_zero() { return Exp{}; }
int exp_total(const Exp& e);
Exp exp_add(const Exp& a, const Exp& b);
Exp exp_sub(const Exp& a, const Exp& b);
Exp exp_neg(const Exp& e);

// Graded lex: compare total degree first, then lanes left to right.
struct GrlexLess {
  bool operator()(const Exp& a, const Exp& b) const;
};

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Variables are multiplicative coordinates z_0..z_{nvars-1}; exponents may
// be negative. Terms are stored in graded-lex order with no explicit zeros,
// so iteration order, the leading term, and serialization are deterministic.
class LaurentPoly {
 public:
  using TermMap = std::map<Exp, Rat, GrlexLess>;

  explicit LaurentPoly(int nvars = 0);
  static LaurentPoly constant(int nvars, const Rat& c);
  static LaurentPoly term(int nvars, const Exp& e, const Rat& c);
  // z_j^power
  static LaurentPoly variable(int nvars, int j, int power = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Coefficient of z^e (zero if absent).
  Rat coeff(const Exp& e) const;
  // Grlex-maximal term; throws std::logic_error on the zero polynomial.
  const std::pair<const Exp, Rat>& leading() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

  LaurentPoly operator-() const;
  void negate();
  void scale(const Rat& c);
  LaurentPoly scaled(const Rat& c) const;
  // Multiply by the monomial z^off.
  LaurentPoly shifted(const Exp& off) const;

  // Substitute z_j -> s * z_j: each term picks up s^(exponent of z_j).
  LaurentPoly qshift(int j, int steps, const Rat& q) const;
  // Simultaneous z_j -> q^{steps[j]} z_j for all variables.
  LaurentPoly qshift_multi(std::span<const int> steps, const Rat& q) const;

  // z_j -> z_j^{-1} for every variable.
  LaurentPoly inverted_vars() const;
  // Exchange the exponents of variables i and j.
  LaurentPoly swapped_vars(int i, int j) const;
  // z_j -> z_j^{-1} for the single variable j.
  LaurentPoly flipped_var(int j) const;

  // Exact quotient q with q * divisor == *this, or nullopt.
  std::optional<LaurentPoly> divided_exact(const LaurentPoly& divisor) const;

  // Per-variable minimum exponent over all terms (0 lanes past nvars);
  // meaningful only for nonzero polynomials.
  Exp min_exponents() const;
  // Largest |exponent| appearing for variable j.
  int max_abs_exp(int j) const;

  std::complex<double> eval(std::span<const std::complex<double>> z) const;
  double eval_real(std::span<const double> z) const;
  Rat eval_rat(std::span<const Rat> z) const;

  bool operator==(const LaurentPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  // Deterministic total order (nvars, then term count, then termwise);
  // used to key maps of canonical denominator factors.
  static int compare(const LaurentPoly& a, const LaurentPoly& b);

  std::string str() const;  // debug rendering, grlex ascending

  // Adds c * z^e, dropping the term if the sum cancels.
  void add_term(const Exp& e, const Rat& c);

 private:
  void check_same_vars(const LaurentPoly& o) const;

  int nvars_;
  TermMap terms_;
};

struct LpLess {
  bool operator()(const LaurentPoly& a, const LaurentPoly& b) const {
    return LaurentPoly::compare(a, b) < 0;
  }
};

// p = coeff * z^shift * normal with normal having min exponent 0 in every
// variable and grlex-leading coefficient 1. For a monomial p, normal == 1.
struct UnitParts {
  Rat coeff;
  Exp shift;
  LaurentPoly normal;
};
UnitParts extract_unit(const LaurentPoly& p);

}  // namespace kw
