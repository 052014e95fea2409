#pragma once

#include "kw/diagonalize.hpp"
#include "kw/params.hpp"

#include <complex>
#include <map>
#include <vector>

namespace kw {

// Uniform product grid on the torus, angles 2*pi*m/M per dimension.
// Trigonometric quadrature on it integrates Laurent monomials exactly up
// to bandwidth M-1, so inner products of polynomials against the smooth
// weight converge spectrally.
struct QuadratureGrid {
  int n = 1;
  int M = 64;
};

// Truncated infinite product prod_{p>=0} (1 - x q^p); terms stop once
// |q|^p drops below the threshold.
std::complex<double> qpoch(std::complex<double> x, double q,
                           double threshold = 1e-17);

// Weight evaluator for either flavor at float parameters. Values on the
// real torus are real; a large imaginary residue throws (evaluation bug).
class WeightEvaluator {
 public:
  WeightEvaluator(Flavor flavor, const NumericParams& params,
                  double threshold = 1e-17);
  double operator()(std::span<const double> theta) const;

 private:
  Flavor flavor_;
  NumericParams p_;
  double threshold_;
};

// Weight values tabulated over the full grid in row-major index order.
struct WeightTable {
  QuadratureGrid grid;
  std::vector<double> values;
};
WeightTable tabulate_weight(const QuadratureGrid& grid, const WeightEvaluator& w);

// Torus average of f * conj(g) * weight. Requires the grid to resolve the
// combined bandwidth of f and g in every variable.
double inner_product(const LaurentPoly& f, const LaurentPoly& g,
                     const WeightTable& table);

// Monic Gram-Schmidt orthogonalization of m_lam against the lower part of
// its order ideal, entirely in floats: the independent oracle for the
// exact triangular solve.
struct GsOracle {
  Partition lam;
  std::map<Partition, double> coeffs;
  double condition = 0;  // max monomial norm / min orthogonalized norm
};
GsOracle gs_oracle(Flavor flavor, const Partition& lam, const ModelParams& params,
                   const QuadratureGrid& grid);

// Pairwise normalized inner products of the exact eigenpolynomials for a
// weight set; passes when every off-diagonal ratio is below tol.
struct GramEntry {
  Partition a, b;
  double value = 0;
  double ratio = 0;
};
struct GramReport {
  bool pass = false;
  double worst_ratio = 0;
  std::vector<GramEntry> offdiag;
};
GramReport gram_check(Flavor flavor, std::span<const Partition> lams,
                      const ModelParams& params, const QuadratureGrid& grid,
                      double tol);

}  // namespace kw
