#pragma once

#include "kw/laurent.hpp"

#include <compare>
#include <map>
#include <vector>

namespace kw {

// Which root system the weights, orbits and operators live on.
//  A:  symmetric-group symmetry, weights are weakly decreasing integer
//      vectors (negative entries allowed), dominance compares prefix sums
//      at equal total weight.
//  BC: hyperoctahedral symmetry (permutations and sign flips), weights are
//      partitions (nonnegative), dominance compares prefix sums only.
enum class Flavor { A, BC };

struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

  int n() const { return static_cast<int>(parts.size()); }
  int weight() const;
  bool valid(Flavor f) const;  // weakly decreasing; BC also nonnegative

  auto operator<=>(const Partition&) const = default;
  std::string str() const;
};

// True when mu <= lam in the dominance order of the given flavor. Vectors
// of different lengths are incomparable (throws std::invalid_argument).
bool dominance_leq(const Partition& mu, const Partition& lam, Flavor f);

// Strict total order extending dominance for both flavors: total weight
// ascending, then reverse-lexicographic (larger entry at the last differing
// index first). Used to sort ideals and to sequence the triangular solve.
bool linext_less(const Partition& a, const Partition& b);

// All valid weights mu with mu <= lam in dominance, sorted by linext_less
// (lam itself is last).
std::vector<Partition> order_ideal(const Partition& lam, Flavor f);

// Dominant representative of an exponent vector: sorted descending for A,
// absolute values sorted descending for BC.
Partition dominant_rep(const Exp& e, int n, Flavor f);

// Distinct images of lam under the flavor's group action.
std::vector<Exp> w_orbit(const Partition& lam, Flavor f);

// Symmetrized monomial m_lam = sum of z^v over the orbit of lam,
// coefficients 1.
LaurentPoly monomial(const Partition& lam, Flavor f);

bool is_w_invariant(const LaurentPoly& f, Flavor flavor);

// Expansion of an invariant polynomial in the m_lam basis, found by
// repeatedly peeling the grlex-leading term (whose exponent is always a
// dominant weight for an invariant polynomial). Throws NotWInvariant.
std::map<Partition, Rat> expand_w_invariant(const LaurentPoly& f, Flavor flavor);

// All valid weights of the flavor with total weight <= bound (A: total
// weight == bound is meaningless for negative entries, so A restricts to
// nonnegative weights here), sorted by linext_less. Convenience for CLI
// and acceptance sweeps.
std::vector<Partition> weights_up_to(int n, int bound, Flavor f);

}  // namespace kw
