#include "kw/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kw {

std::complex<double> qpoch(std::complex<double> x, double q, double threshold) {
  if (!(std::abs(q) < 1))
    throw std::invalid_argument("qpoch: need |q| < 1");
  std::complex<double> prod = 1.0;
  double qp = 1.0;
  while (qp >= threshold) {
    prod *= 1.0 - x * qp;
    qp *= q;
  }
  return prod;
}

WeightEvaluator::WeightEvaluator(Flavor flavor, const NumericParams& params,
                                 double threshold)
    : flavor_(flavor), p_(params), threshold_(threshold) {
  if (!(p_.q > 0 && p_.q < 1))
    throw std::invalid_argument("WeightEvaluator: need 0 < q < 1");
  if (!(std::abs(p_.t) <= 1))
    throw std::invalid_argument("WeightEvaluator: need |t| <= 1");
  if (flavor_ == Flavor::BC) {
    for (double letter : {p_.a, p_.b, p_.c, p_.d})
      if (!(std::abs(letter) < 1))
        throw std::invalid_argument(
            "WeightEvaluator: field letters must lie inside the unit disk");
  }
}

double WeightEvaluator::operator()(std::span<const double> theta) const {
  using cd = std::complex<double>;
  if (static_cast<int>(theta.size()) != p_.n)
    throw std::invalid_argument("WeightEvaluator: wrong point dimension");
  auto dv = [&](cd zeta) {
    // At t = 1 numerator and denominator coincide; the quotient is 1 with a
    // removable point at zeta = 1, which uniform grids do hit.
    if (p_.t == 1.0) return cd(1.0);
    return qpoch(zeta, p_.q, threshold_) / qpoch(p_.t * zeta, p_.q, threshold_);
  };
  cd total = 1.0;
  if (flavor_ == Flavor::A) {
    for (int j = 0; j < p_.n; ++j)
      for (int k = 0; k < p_.n; ++k) {
        if (j == k) continue;
        total *= dv(std::polar(1.0, theta[j] - theta[k]));
      }
  } else {
    auto dw = [&](cd zeta) {
      cd num = qpoch(zeta * zeta, p_.q, threshold_);
      cd den = qpoch(p_.a * zeta, p_.q, threshold_) *
               qpoch(p_.b * zeta, p_.q, threshold_) *
               qpoch(p_.c * zeta, p_.q, threshold_) *
               qpoch(p_.d * zeta, p_.q, threshold_);
      return num / den;
    };
    for (int j = 0; j < p_.n; ++j)
      for (int k = j + 1; k < p_.n; ++k)
        for (int ej : {1, -1})
          for (int ek : {1, -1})
            total *= dv(std::polar(1.0, ej * theta[j] + ek * theta[k]));
    for (int j = 0; j < p_.n; ++j)
      for (int ej : {1, -1}) total *= dw(std::polar(1.0, ej * theta[j]));
  }
  if (std::abs(total.imag()) > 1e-8 * (1.0 + std::abs(total.real())))
    throw std::runtime_error("WeightEvaluator: non-real weight value");
  return total.real();
}

WeightTable tabulate_weight(const QuadratureGrid& grid, const WeightEvaluator& w) {
  if (grid.n < 1 || grid.M < 2)
    throw std::invalid_argument("tabulate_weight: bad grid");
  WeightTable table;
  table.grid = grid;
  std::size_t total = 1;
  for (int j = 0; j < grid.n; ++j) total *= static_cast<std::size_t>(grid.M);
  table.values.resize(total);
  std::vector<double> theta(grid.n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int j = grid.n - 1; j >= 0; --j) {
      theta[j] = 2.0 * std::numbers::pi * static_cast<double>(rest % grid.M) /
                 grid.M;
      rest /= grid.M;
    }
    table.values[idx] = w(theta);
  }
  return table;
}

double inner_product(const LaurentPoly& f, const LaurentPoly& g,
                     const WeightTable& table) {
  const QuadratureGrid& grid = table.grid;
  if (f.nvars() != grid.n || g.nvars() != grid.n)
    throw std::invalid_argument("inner_product: dimension mismatch");
  for (int j = 0; j < grid.n; ++j)
    if (2 * (f.max_abs_exp(j) + g.max_abs_exp(j)) + 1 > grid.M)
      throw std::invalid_argument("inner_product: grid too coarse for bandwidth");
  using cd = std::complex<double>;
  cd acc = 0.0;
  std::vector<cd> z(grid.n);
  std::size_t total = table.values.size();
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int j = grid.n - 1; j >= 0; --j) {
      z[j] = std::polar(1.0, 2.0 * std::numbers::pi *
                                 static_cast<double>(rest % grid.M) / grid.M);
      rest /= grid.M;
    }
    acc += f.eval(z) * std::conj(g.eval(z)) * table.values[idx];
  }
  return acc.real() / static_cast<double>(total);
}

GsOracle gs_oracle(Flavor flavor, const Partition& lam, const ModelParams& params,
                   const QuadratureGrid& grid) {
  std::vector<Partition> ideal = order_ideal(lam, flavor);
  const std::size_t D = ideal.size();
  WeightEvaluator w(flavor, to_numeric(params));
  WeightTable table = tabulate_weight(grid, w);
  std::vector<LaurentPoly> basis;
  for (const Partition& mu : ideal) basis.push_back(monomial(mu, flavor));
  std::vector<std::vector<double>> G(D, std::vector<double>(D, 0.0));
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      G[i][j] = inner_product(basis[i], basis[j], table);
      G[j][i] = G[i][j];
    }
  // Monic Gram-Schmidt along the linear extension: C[k] holds the monomial
  // coefficients of the k-th orthogonalized polynomial.
  std::vector<std::vector<double>> C(D, std::vector<double>(D, 0.0));
  std::vector<double> norms(D, 0.0);
  double max_diag = 0.0, min_norm = 0.0;
  for (std::size_t i = 0; i < D; ++i) {
    C[i][i] = 1.0;
    for (std::size_t k = 0; k < i; ++k) {
      double dot = 0.0;  // <m_i, p_k>
      for (std::size_t j = 0; j <= k; ++j) dot += C[k][j] * G[i][j];
      double proj = dot / norms[k];
      for (std::size_t j = 0; j <= k; ++j) C[i][j] -= proj * C[k][j];
    }
    double nrm = 0.0;  // <p_i, p_i> = <p_i, m_i> by orthogonality
    for (std::size_t j = 0; j <= i; ++j) nrm += C[i][j] * G[i][j];
    norms[i] = nrm;
    max_diag = std::max(max_diag, G[i][i]);
    min_norm = i == 0 ? nrm : std::min(min_norm, nrm);
    if (!(nrm > 0))
      throw std::runtime_error("gs_oracle: nonpositive norm, Gram matrix "
                               "numerically singular");
  }
  GsOracle out;
  out.lam = lam;
  out.condition = max_diag / min_norm;
  if (!(out.condition < 1e12))
    throw std::runtime_error("gs_oracle: ill-conditioned Gram matrix");
  for (std::size_t j = 0; j < D; ++j)
    if (std::abs(C[D - 1][j]) > 0) out.coeffs[ideal[j]] = C[D - 1][j];
  return out;
}

GramReport gram_check(Flavor flavor, std::span<const Partition> lams,
                      const ModelParams& params, const QuadratureGrid& grid,
                      double tol) {
  OperatorSession session(flavor, params);
  std::vector<LaurentPoly> polys;
  for (const Partition& lam : lams)
    polys.push_back(ortho_poly(session, lam).to_laurent());
  WeightEvaluator w(flavor, to_numeric(params));
  WeightTable table = tabulate_weight(grid, w);
  std::vector<double> norms;
  for (const LaurentPoly& p : polys) norms.push_back(inner_product(p, p, table));
  GramReport rep;
  rep.pass = true;
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      GramEntry e;
      e.a = lams[i];
      e.b = lams[j];
      e.value = inner_product(polys[i], polys[j], table);
      e.ratio = std::abs(e.value) / std::sqrt(std::abs(norms[i] * norms[j]));
      rep.worst_ratio = std::max(rep.worst_ratio, e.ratio);
      if (!(e.ratio < tol)) rep.pass = false;
      rep.offdiag.push_back(std::move(e));
    }
  return rep;
}

}  // namespace kw
