#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kw/diagonalize.hpp"
#include "kw/errors.hpp"
#include "kw/partition.hpp"

#include <vector>

using namespace kw;

namespace {

ModelParams s1(int n) {
  return ModelParams(n, Rat(1, 2), Rat(1, 3), Rat(2, 3), Rat(3, 5), Rat(5, 7),
                     Rat(1, 2));
}

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("ideal matrix of the zero weight is the scalar zero") {
  OperatorSession s(Flavor::BC, s1(2));
  IdealMatrix M = matrix_on_ideal(s, 1, P({0, 0}));
  REQUIRE(M.basis.size() == 1);
  CHECK(M.basis[0] == P({0, 0}));
  CHECK(M.entries[0][0] == Rat(0));
}

TEST_CASE("ideal matrix is lower triangular with spectral diagonal") {
  OperatorSession s(Flavor::BC, s1(2));
  Partition lam = P({1, 1});
  IdealMatrix M = matrix_on_ideal(s, 1, lam);
  REQUIRE(M.basis.size() == 3);
  CHECK(M.basis[0] == P({0, 0}));
  CHECK(M.basis[1] == P({1, 0}));
  CHECK(M.basis[2] == P({1, 1}));
  for (std::size_t i = 0; i < M.basis.size(); ++i) {
    CHECK(M.entries[i][i] == s.eigenvalue(1, M.basis[i]));
    for (std::size_t j = i + 1; j < M.basis.size(); ++j)
      CHECK(M.entries[i][j] == Rat(0));
  }
}

TEST_CASE("ideal matrix in the free case is diagonal") {
  OperatorSession s(Flavor::BC, ModelParams::trivial(2, Rat(1, 2)));
  IdealMatrix M = matrix_on_ideal(s, 2, P({2, 1}));
  for (std::size_t i = 0; i < M.basis.size(); ++i)
    for (std::size_t j = 0; j < M.basis.size(); ++j) {
      if (i == j)
        CHECK(M.entries[i][j] == s.eigenvalue(2, M.basis[i]));
      else
        CHECK(M.entries[i][j] == Rat(0));
    }
}

TEST_CASE("cached operator images stay inside the dominance ideal") {
  OperatorSession s(Flavor::BC, s1(2));
  for (int r = 1; r <= 2; ++r)
    for (const auto& mu : weights_up_to(2, 3, Flavor::BC))
      CHECK_NOTHROW(s.expansion(r, mu));
}

TEST_CASE("zero weight eigenpolynomial is the constant one") {
  OrthoPolynomial p = ortho_poly(Flavor::BC, P({0, 0}), s1(2));
  REQUIRE(p.coeffs.size() == 1);
  CHECK(p.coeffs[0].second == Rat(1));
  CHECK(p.to_laurent() == LaurentPoly::constant(2, Rat(1)));
}

TEST_CASE("free case eigenpolynomials are bare monomial symmetrizations") {
  OperatorSession s(Flavor::BC, ModelParams::trivial(2, Rat(1, 2)));
  for (const auto& lam : weights_up_to(2, 3, Flavor::BC)) {
    OrthoPolynomial p = ortho_poly(s, lam);
    REQUIRE(p.coeffs.size() >= 1);
    CHECK(p.coeffs.back().first == lam);
    CHECK(p.to_laurent() == monomial(lam, Flavor::BC));
  }
}

TEST_CASE("single variable first coefficient matches the direct quotient") {
  ModelParams p = s1(1);
  OperatorSession s(Flavor::BC, p);
  IdealMatrix M = matrix_on_ideal(s, 1, P({1}));
  OrthoPolynomial op = ortho_poly(s, P({1}));
  // Back-substitution in a 2x2 lower triangular system has the closed form
  // c_0 = H_{10} / (E(1) - E(0)).
  Rat want = M.entries[1][0] / (s.eigenvalue(1, P({1})) - s.eigenvalue(1, P({0})));
  REQUIRE(op.coeff(P({0})).has_value());
  CHECK(*op.coeff(P({0})) == want);
  CHECK(*op.coeff(P({1})) == Rat(1));
}

TEST_CASE("joint eigenfunction property holds beyond the solving operator") {
  OperatorSession s(Flavor::BC, s1(2));
  for (const auto& lam : weights_up_to(2, 3, Flavor::BC)) {
    CheckReport rep = verify_joint_eigen(s, lam);
    CHECK(rep.pass());
    CHECK(rep.items.size() == 2);
  }
}

TEST_CASE("three variable joint eigenfunction spot check") {
  OperatorSession s(Flavor::BC, s1(3));
  CheckReport rep = verify_joint_eigen(s, P({1, 1, 0}));
  CHECK(rep.pass());
  CHECK(rep.items.size() == 3);
}

TEST_CASE("symmetric flavor joint eigenfunctions") {
  OperatorSession s(Flavor::A, s1(2));
  for (const auto& lam : weights_up_to(2, 3, Flavor::A)) {
    CheckReport rep = verify_joint_eigen(s, lam);
    CHECK(rep.pass());
  }
}

TEST_CASE("solving against the second operator gives the same polynomial") {
  // Not every weight admits this: the solve needs E_2 to separate lam from
  // everything below it. Picks where it does must agree with the first
  // operator's solve exactly.
  OperatorSession s3(Flavor::A, s1(3));
  for (const auto& lam : {P({2, 1, 0}), P({2, 2, 0})}) {
    OrthoPolynomial via1 = ortho_poly(s3, lam, 1);
    OrthoPolynomial via2 = ortho_poly(s3, lam, 2);
    CHECK(via1.coeffs == via2.coeffs);
  }
  OperatorSession s2(Flavor::BC, s1(2));
  OrthoPolynomial via1 = ortho_poly(s2, P({1, 1}), 1);
  OrthoPolynomial via2 = ortho_poly(s2, P({1, 1}), 2);
  CHECK(via1.coeffs == via2.coeffs);
}

TEST_CASE("higher operators alone cannot always separate the spectrum") {
  // E_2 vanishes on every hyperoctahedral weight with fewer than two
  // nonzero parts, so (2,0) collides with the weights below it.
  OperatorSession s(Flavor::BC, s1(2));
  CHECK(s.eigenvalue(2, P({2, 0})) == Rat(0));
  CHECK(s.eigenvalue(2, P({0, 0})) == Rat(0));
  CHECK_THROWS_AS(ortho_poly(s, P({2, 0}), 2), EigenvalueCollision);
  // The symmetric top operator only sees the total weight, so same-weight
  // ideals collide as well.
  OperatorSession sa(Flavor::A, s1(2));
  CHECK(sa.eigenvalue(2, P({2, 0})) == sa.eigenvalue(2, P({1, 1})));
  CHECK_THROWS_AS(ortho_poly(sa, P({2, 0}), 2), EigenvalueCollision);
}

TEST_CASE("eigenvector is invariant under affine rescaling of the matrix") {
  OperatorSession s(Flavor::BC, s1(2));
  Partition lam = P({2, 1});
  IdealMatrix M = matrix_on_ideal(s, 1, lam);
  // Solve (scaled M) p = E p monically for H -> 3 H + 5; the triangular
  // back-substitution must produce the same vector.
  std::size_t N = M.basis.size();
  std::vector<std::vector<Rat>> A(N, std::vector<Rat>(N, Rat(0)));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      A[i][j] = Rat(3) * M.entries[i][j];
      if (i == j) A[i][j] += Rat(5);
    }
  std::vector<Rat> c(N, Rat(0));
  c[N - 1] = Rat(1);
  Rat E = A[N - 1][N - 1];
  for (std::size_t ii = N - 1; ii-- > 0;) {
    Rat acc(0);
    for (std::size_t k = ii + 1; k < N; ++k) acc += c[k] * A[k][ii];
    c[ii] = acc / (E - A[ii][ii]);
  }
  OrthoPolynomial p = ortho_poly(s, lam);
  REQUIRE(p.coeffs.size() == N);
  for (std::size_t i = 0; i < N; ++i) {
    CHECK(p.coeffs[i].first == M.basis[i]);
    CHECK(p.coeffs[i].second == c[i]);
  }
}

TEST_CASE("degenerate spectrum is reported as a collision") {
  // kappa = 2 makes abcd q^{-1} = 4, so E_1(1) = E_1(0) = 0.
  ModelParams p(1, Rat(1, 2), Rat(1), Rat(2), Rat(1), Rat(1), Rat(1));
  REQUIRE(p.eigenvalue_bc(1, P({1})) == p.eigenvalue_bc(1, P({0})));
  OperatorSession s(Flavor::BC, p);
  CHECK_THROWS_AS(ortho_poly(s, P({1})), EigenvalueCollision);
}

TEST_CASE("commutators vanish on expanded weights") {
  OperatorSession s(Flavor::BC, s1(2));
  auto lams = weights_up_to(2, 2, Flavor::BC);
  CheckReport rep = verify_commutators(s, 1, 2, lams);
  CHECK(rep.pass());
  CHECK(rep.items.size() == lams.size());
}

TEST_CASE("symmetric flavor commutators vanish") {
  OperatorSession s(Flavor::A, s1(3));
  auto lams = weights_up_to(3, 2, Flavor::A);
  CHECK(verify_commutators(s, 1, 2, lams).pass());
  CHECK(verify_commutators(s, 2, 3, lams).pass());
}

TEST_CASE("identity coefficient variants agree as rational functions") {
  CheckReport rep = verify_u_identity(s1(2), 2);
  CHECK(rep.pass());
  // K runs over all subsets of {0,1}, m over 0..min(2,|K|):
  // 1 + 2 + 2 + 3 items.
  CHECK(rep.items.size() == 8);
}

TEST_CASE("torus conjugation symmetries") {
  CHECK(verify_conjugation(s1(2)).pass());
  CHECK(verify_conjugation(s1(3)).pass());
}

TEST_CASE("round trip through the residual checker") {
  OperatorSession s(Flavor::BC, s1(2));
  OrthoPolynomial p = ortho_poly(s, P({2, 1}));
  CheckReport rep = verify_eigen_poly(s, p);
  CHECK(rep.pass());
  // Corrupting one coefficient must break at least one residual.
  p.coeffs[0].second += Rat(1, 7);
  CHECK_FALSE(verify_eigen_poly(s, p).pass());
}
