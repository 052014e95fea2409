#pragma once

#include "kw/partition.hpp"

#include <span>
#include <vector>

namespace kw {

// Exact model parameters in multiplicative form. The six inputs are
// half powers: qh = q^{1/2}, th = t^{1/2} and the four external-field
// half powers k0, k1, k0p, k1p, all positive rationals with 0 < qh < 1.
// Supplying half powers keeps every derived quantity (the four field
// letters a, b, c, d, the spectral shifts, the w-potential offsets) in the
// rational field. Derived values are cached at construction; instances are
// immutable and all member operations are pure.
class ModelParams {
 public:
  ModelParams(int n, Rat qh, Rat th, Rat k0, Rat k1, Rat k0p, Rat k1p);
  // th = k's = 1: no couplings, free case.
  static ModelParams trivial(int n, const Rat& qh);

  int n() const { return n_; }
  const Rat& qh() const { return qh_; }
  const Rat& th() const { return th_; }
  const Rat& k0() const { return k0_; }
  const Rat& k1() const { return k1_; }
  const Rat& k0p() const { return k0p_; }
  const Rat& k1p() const { return k1p_; }
  const Rat& q() const { return q_; }
  const Rat& t() const { return t_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  const Rat& d() const { return d_; }
  const Rat& kappa() const { return kappa_; }

  // Q_j = q^{rho_j} = t^{n-j} * kappa, 1-based j.
  Rat rho_mult(int j) const;
  // ch of the additive spectral point: (q^{lj} Q_j + q^{-lj} Q_j^{-1}) / 2.
  Rat ch_value(int j, long lj) const;

  // Joint eigenvalue of the r-th hyperoctahedral operator at weight lam:
  // the 2^r-scaled alternating e/h combination of ch-values.
  Rat eigenvalue_bc(int r, const Partition& lam) const;
  // Joint eigenvalue of the r-th symmetric-group operator:
  // e_r(q^{lam_j} th^{n+1-2j}).
  Rat eigenvalue_a(int r, const Partition& lam) const;
  // The A-flavor spectral variables q^{lam_j} th^{n+1-2j}, j = 1..n.
  std::vector<Rat> spectral_vars_a(const Partition& lam) const;

 private:
  int n_;
  Rat qh_, th_, k0_, k1_, k0p_, k1p_;
  Rat q_, t_, a_, b_, c_, d_, kappa_;
};

// Additive (physical) parameters; only used on the numeric side.
struct AdditiveParams {
  double alpha = 1.0;
  double beta = 1.0;
  double g = 0.0, g0 = 0.0, g1 = 0.0, g0p = 0.0, g1p = 0.0;
  void validate() const;  // alpha, beta > 0; couplings >= 0
  double rho_bc(int n, int j) const;  // (n-j)g + (g0+g1+g0p+g1p)/2
  double rho_a(int n, int j) const;   // g(n+1-2j)/2
};

// Float-valued mirror of ModelParams for quadrature and limit checks.
struct NumericParams {
  int n = 0;
  double qh = 0, th = 0, k0 = 0, k1 = 0, k0p = 0, k1p = 0;
  double q = 0, t = 0, a = 0, b = 0, c = 0, d = 0, kappa = 0;
};

NumericParams from_additive(const AdditiveParams& p, int n);
NumericParams to_numeric(const ModelParams& p);

// Elementary symmetric polynomials e_0..e_k of xs and complete homogeneous
// h_0..h_maxdeg, generic over any commutative ring element type.
template <class T>
std::vector<T> elementary_all(std::span<const T> xs, const T& zero, const T& one) {
  std::vector<T> e(xs.size() + 1, zero);
  e[0] = one;
  std::size_t used = 0;
  for (const T& x : xs) {
    ++used;
    for (std::size_t s = used; s >= 1; --s) e[s] = e[s] + x * e[s - 1];
  }
  return e;
}

template <class T>
std::vector<T> homogeneous_all(std::span<const T> xs, int maxdeg, const T& zero,
                               const T& one) {
  std::vector<T> h(static_cast<std::size_t>(maxdeg) + 1, zero);
  h[0] = one;
  for (const T& x : xs)
    for (int m = 1; m <= maxdeg; ++m) h[m] = h[m] + x * h[m - 1];
  return h;
}

// sum_{s=0..r} (-1)^{r-s} e_s(tvals) h_{r-s}(pvals); the caller applies
// the 2^r scale. This is the collapsed form of the spectral double sum
// over index subsets and weakly increasing strings.
template <class T>
T spectral_combination(int r, std::span<const T> tvals, std::span<const T> pvals,
                       const T& zero, const T& one) {
  auto e = elementary_all(tvals, zero, one);
  auto h = homogeneous_all(pvals, r, zero, one);
  T sum = zero;
  for (int s = 0; s <= r && s <= static_cast<int>(tvals.size()); ++s) {
    T term = e[s] * h[r - s];
    if ((r - s) % 2)
      sum = sum - term;
    else
      sum = sum + term;
  }
  return sum;
}

// Exact check of the inclusion-exclusion transform between the plain and
// the shifted elementary symmetric spectra:
// beta^{-r} sum_p (-1)^p C(n-p, n-r) e_p(v) == beta^{-r} e_r(1-v_1,...,1-v_n)
// at v_j = q^{lam_j} th^{n+1-2j}.
bool transform_tilde_check(const ModelParams& params, int r, const Partition& lam,
                           const Rat& beta);

// One extrapolated eigenvalue limit. samples holds f(beta_i); limit is the
// Richardson extrapolation to 0 (in beta for A, beta^2 for BC), reference
// the closed-form degenerate eigenvalue, ratio = limit / reference.
struct LimitPoint {
  Partition lam;
  double limit = 0;
  double reference = 0;
  double ratio = 0;
  double extrap_error = 0;  // |last Neville correction|
  std::vector<double> samples;
};

LimitPoint limit_point(Flavor flavor, const AdditiveParams& add, int n, int r,
                       const Partition& lam, std::span<const double> betas);

// Fits the ratio at lams[0] and verifies the others match to rel_tol.
// For flavor A the ratio itself must equal 1 to rel_tol at every weight.
struct LimitReport {
  bool pass = false;
  double constant = 0;  // fitted ratio at lams[0]
  std::vector<LimitPoint> points;
};

LimitReport limit_check(Flavor flavor, const AdditiveParams& add, int n, int r,
                        std::span<const Partition> lams,
                        std::span<const double> betas, double rel_tol);

}  // namespace kw
