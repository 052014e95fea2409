#pragma once

#include <stdexcept>
#include <string>

namespace kw {

// Requested polynomial quotient does not exist (division left a remainder).
struct NonzeroRemainder : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input polynomial is not invariant under the hyperoctahedral / symmetric
// group action, so it has no expansion in symmetrized monomials.
struct NotWInvariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two weights in the same order ideal share an eigenvalue of the operator
// chosen for the triangular solve; the solve is aborted rather than guessed.
struct EigenvalueCollision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operator image left the order ideal it was supposed to be confined to.
struct TriangularityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kw
