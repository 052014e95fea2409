#pragma once

#include "kw/operators.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kw {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckItem> items;
  bool pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

// Shared workspace for one (flavor, params): lazily built operators and
// cached monomial expansions of operator images. Everything computed here
// is exact; the cache only avoids recomputation across overlapping ideals.
class OperatorSession {
 public:
  OperatorSession(Flavor flavor, ModelParams params);

  Flavor flavor() const { return flavor_; }
  const ModelParams& params() const { return params_; }
  int n() const { return params_.n(); }

  const DiffOperator& op(int r);
  // Monomial expansion of op(r) applied to m_mu; throws
  // TriangularityViolation if the support leaves the ideal of mu.
  const std::map<Partition, Rat>& expansion(int r, const Partition& mu);
  // Closed-form spectrum of the flavor.
  Rat eigenvalue(int r, const Partition& lam) const;

 private:
  Flavor flavor_;
  ModelParams params_;
  std::map<int, DiffOperator> ops_;
  std::map<std::pair<int, Partition>, std::map<Partition, Rat>> expansions_;
};

// Matrix of an operator restricted to span{m_mu : mu <= lam}, basis sorted
// by the ideal's linear extension. entries[i][j] = coefficient of
// m_{basis[j]} in the image of m_{basis[i]}.
struct IdealMatrix {
  std::vector<Partition> basis;
  std::vector<std::vector<Rat>> entries;
};

IdealMatrix matrix_on_ideal(OperatorSession& session, int r, const Partition& lam);
IdealMatrix matrix_on_ideal(const DiffOperator& op, const Partition& lam,
                            const ModelParams& params);

// Monic joint eigenpolynomial, coefficients over the order ideal in
// linear-extension order (the weight lam itself is last, coefficient 1).
struct OrthoPolynomial {
  Flavor flavor = Flavor::BC;
  Partition lam;
  std::vector<std::pair<Partition, Rat>> coeffs;

  LaurentPoly to_laurent() const;
  std::optional<Rat> coeff(const Partition& mu) const;
};

// Triangular eigenvector solve against the operator of order solve_r:
// back-substitution in reverse linear-extension order, normalized monic.
// Throws EigenvalueCollision when two ideal weights share an eigenvalue.
OrthoPolynomial ortho_poly(OperatorSession& session, const Partition& lam,
                           int solve_r = 1);
OrthoPolynomial ortho_poly(Flavor flavor, const Partition& lam,
                           const ModelParams& params, int solve_r = 1);

// Residual check op(r) P == eigenvalue(r, lam) P for a given polynomial
// (e.g. one read back from a serialized document), exactly, r = 1..n.
CheckReport verify_eigen_poly(OperatorSession& session,
                              const OrthoPolynomial& poly);

// p_lam solved from the first operator, then every op(r) applied to it and
// compared with eigenvalue(r, lam) * p_lam, exactly.
CheckReport verify_joint_eigen(OperatorSession& session, const Partition& lam);

// [op(r), op(s)] m_lam == 0 exactly for each weight in the set.
CheckReport verify_commutators(OperatorSession& session, int r, int s,
                               std::span<const Partition> lams);

// Main vs. alt identity-coefficient construction, all K subsets of
// {0..n-1}, m <= min(max_m, |K|), exact rational-function equality.
CheckReport verify_u_identity(const ModelParams& params, int max_m);

// Exact conjugation symmetries on the torus (conjugation = variable
// inversion): V(J,-eps;K) = invert(V(J,eps;K)), invert(U) = U, and the
// potentials' own inversion relations.
CheckReport verify_conjugation(const ModelParams& params);

}  // namespace kw
