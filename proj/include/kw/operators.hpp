#pragma once

#include "kw/params.hpp"
#include "kw/ratfunc.hpp"

#include <cstddef>
#include <vector>

namespace kw {

// Multiplicative description of a potential argument: the point
// zeta = q^{q_offset} * prod_i z_{var_i}^{sign_i}, optionally carrying the
// extra half-step offset that appears inside the external-field potential.
struct ArgSpec {
  std::vector<std::pair<int, int>> vars;  // (0-based index, sign +-1), <= 2 entries
  int q_offset = 0;                       // whole steps: -1, 0, +1
  bool half_offset = false;               // only the field potential uses this

  // Monomial prod z_v^{sign} in nvars variables.
  LaurentPoly monomial(int nvars) const;
};

// Interaction potential th^{-1} (1 - t zeta) / (1 - zeta) at the ArgSpec
// point. Half offsets are not allowed here.
RatFunc potential_v(const ArgSpec& spec, const ModelParams& p);

// External-field potential at zeta = z_j^{sign}:
// kappa^{-1} (1-a zeta)(1-b zeta)(1-c zeta)(1-d zeta) / ((1-zeta^2)(1-q zeta^2)).
// The four numerator letters already absorb the two half-offset factors.
RatFunc potential_w(int sign, int j, const ModelParams& p);

// Shifted-set coefficient: product of field potentials over J, the intra-J
// interaction pairs at offsets 0 and +1, and the J x K pairs at offset 0.
// J and signs are parallel; J and K must be disjoint.
RatFunc build_V(const std::vector<int>& J, const std::vector<int>& signs,
                const std::vector<int>& K, const ModelParams& p);

enum class UVariant { Main, Alt };

// Identity-shift coefficient of order m on the index set K. Main is the
// direct signed sum over subsets L of size m with the offset -1 reversed
// pair factors; Alt is the nested-chain expansion whose agreement with Main
// is one of the verified functional identities.
RatFunc build_U(const std::vector<int>& K, int m, const ModelParams& p,
                UVariant variant = UVariant::Main);

struct OpTerm {
  std::vector<int> shift;  // entries in {-1, 0, +1}; support = the set J
  RatFunc coeff;
};

// A difference operator in multiplicative coordinates: sum of rational
// coefficients times q-shifts. Immutable once built.
class DiffOperator {
 public:
  static DiffOperator build(Flavor flavor, int r, const ModelParams& p);

  Flavor flavor() const { return flavor_; }
  int r() const { return r_; }
  int n() const { return n_; }
  const std::vector<OpTerm>& terms() const { return terms_; }

  // Exact application: sum coeff * (shifted f) as rational functions, then
  // extract the Laurent polynomial. A nonzero remainder (NonzeroRemainder)
  // would mean the poles failed to cancel, i.e. a transcription bug.
  LaurentPoly apply(const LaurentPoly& f) const;

 private:
  Flavor flavor_ = Flavor::BC;
  int r_ = 0;
  int n_ = 0;
  Rat q_;
  std::vector<OpTerm> terms_;
};

// Expected number of terms of the hyperoctahedral operator:
// sum_{s=0..r} 2^s C(n,s).
std::size_t bc_term_count(int n, int r);

}  // namespace kw
