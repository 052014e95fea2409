#include "kw/params.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace kw {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

ModelParams::ModelParams(int n, Rat qh, Rat th, Rat k0, Rat k1, Rat k0p, Rat k1p)
    : n_(n),
      qh_(std::move(qh)),
      th_(std::move(th)),
      k0_(std::move(k0)),
      k1_(std::move(k1)),
      k0p_(std::move(k0p)),
      k1p_(std::move(k1p)) {
  require(n >= 1 && n <= kMaxVars, "ModelParams: n out of range");
  require(sgn(qh_) > 0 && qh_ < 1, "ModelParams: need 0 < qh < 1");
  require(sgn(th_) > 0, "ModelParams: th must be positive");
  require(sgn(k0_) > 0 && sgn(k1_) > 0 && sgn(k0p_) > 0 && sgn(k1p_) > 0,
          "ModelParams: field half-powers must be positive");
  q_ = qh_ * qh_;
  t_ = th_ * th_;
  a_ = k0_ * k0_;
  b_ = -(k1_ * k1_);
  c_ = qh_ * k0p_ * k0p_;
  d_ = -(qh_ * k1p_ * k1p_);
  kappa_ = k0_ * k1_ * k0p_ * k1p_;
}

ModelParams ModelParams::trivial(int n, const Rat& qh) {
  return ModelParams(n, qh, Rat(1), Rat(1), Rat(1), Rat(1), Rat(1));
}

Rat ModelParams::rho_mult(int j) const {
  require(j >= 1 && j <= n_, "rho_mult: index out of range");
  return rat_pow(t_, n_ - j) * kappa_;
}

Rat ModelParams::ch_value(int j, long lj) const {
  Rat Q = rho_mult(j);
  Rat fwd = rat_pow(q_, lj) * Q;
  Rat sum = fwd + Rat(1) / fwd;
  return sum / 2;
}

Rat ModelParams::eigenvalue_bc(int r, const Partition& lam) const {
  require(r >= 1 && r <= n_, "eigenvalue_bc: r out of range");
  require(lam.n() == n_ && lam.valid(Flavor::BC), "eigenvalue_bc: bad weight");
  std::vector<Rat> tv, pv;
  for (int j = 1; j <= n_; ++j) tv.push_back(ch_value(j, lam.parts[j - 1]));
  for (int l = r; l <= n_; ++l) pv.push_back(ch_value(l, 0));
  Rat s = spectral_combination<Rat>(r, tv, pv, Rat(0), Rat(1));
  return s * rat_pow(Rat(2), r);
}

std::vector<Rat> ModelParams::spectral_vars_a(const Partition& lam) const {
  require(lam.n() == n_ && lam.valid(Flavor::A), "spectral_vars_a: bad weight");
  std::vector<Rat> v;
  for (int j = 1; j <= n_; ++j)
    v.push_back(rat_pow(q_, lam.parts[j - 1]) * rat_pow(th_, n_ + 1 - 2 * j));
  return v;
}

Rat ModelParams::eigenvalue_a(int r, const Partition& lam) const {
  require(r >= 1 && r <= n_, "eigenvalue_a: r out of range");
  auto v = spectral_vars_a(lam);
  auto e = elementary_all<Rat>(v, Rat(0), Rat(1));
  return e[r];
}

void AdditiveParams::validate() const {
  auto ok = [](double x) { return std::isfinite(x); };
  require(ok(alpha) && alpha > 0, "AdditiveParams: alpha must be positive");
  require(ok(beta) && beta > 0, "AdditiveParams: beta must be positive");
  require(ok(g) && g >= 0 && ok(g0) && g0 >= 0 && ok(g1) && g1 >= 0 &&
              ok(g0p) && g0p >= 0 && ok(g1p) && g1p >= 0,
          "AdditiveParams: couplings must be nonnegative");
}

double AdditiveParams::rho_bc(int n, int j) const {
  return (n - j) * g + (g0 + g1 + g0p + g1p) / 2.0;
}

double AdditiveParams::rho_a(int n, int j) const {
  return g * (n + 1 - 2 * j) / 2.0;
}

NumericParams from_additive(const AdditiveParams& p, int n) {
  p.validate();
  NumericParams m;
  m.n = n;
  double ab = p.alpha * p.beta;
  m.qh = std::exp(-ab / 2);
  m.th = std::exp(-ab * p.g / 2);
  m.k0 = std::exp(-ab * p.g0 / 2);
  m.k1 = std::exp(-ab * p.g1 / 2);
  m.k0p = std::exp(-ab * p.g0p / 2);
  m.k1p = std::exp(-ab * p.g1p / 2);
  m.q = m.qh * m.qh;
  m.t = m.th * m.th;
  m.a = m.k0 * m.k0;
  m.b = -m.k1 * m.k1;
  m.c = m.qh * m.k0p * m.k0p;
  m.d = -m.qh * m.k1p * m.k1p;
  m.kappa = m.k0 * m.k1 * m.k0p * m.k1p;
  return m;
}

NumericParams to_numeric(const ModelParams& p) {
  NumericParams m;
  m.n = p.n();
  m.qh = rat_double(p.qh());
  m.th = rat_double(p.th());
  m.k0 = rat_double(p.k0());
  m.k1 = rat_double(p.k1());
  m.k0p = rat_double(p.k0p());
  m.k1p = rat_double(p.k1p());
  m.q = rat_double(p.q());
  m.t = rat_double(p.t());
  m.a = rat_double(p.a());
  m.b = rat_double(p.b());
  m.c = rat_double(p.c());
  m.d = rat_double(p.d());
  m.kappa = rat_double(p.kappa());
  return m;
}

bool transform_tilde_check(const ModelParams& params, int r, const Partition& lam,
                           const Rat& beta) {
  int n = params.n();
  require(r >= 1 && r <= n, "transform_tilde_check: r out of range");
  require(sgn(beta) > 0, "transform_tilde_check: beta must be positive");
  auto v = params.spectral_vars_a(lam);
  auto e = elementary_all<Rat>(v, Rat(0), Rat(1));
  Rat lhs(0);
  for (int p = 0; p <= r; ++p) {
    Rat term = rat_binom(n - p, n - r) * e[p];
    if (p % 2)
      lhs -= term;
    else
      lhs += term;
  }
  std::vector<Rat> shifted;
  for (const Rat& x : v) shifted.push_back(Rat(1) - x);
  auto es = elementary_all<Rat>(shifted, Rat(0), Rat(1));
  Rat scale = rat_pow(beta, -r);
  Rat l = lhs * scale;
  Rat rr = es[r] * scale;
  return l == rr;
}

namespace {

double neville_zero(std::span<const double> xs, std::span<const double> ys,
                    double* err_out) {
  std::size_t k = xs.size();
  if (k < 2 || ys.size() != k)
    throw std::invalid_argument("neville_zero: need at least two samples");
  std::vector<double> t(ys.begin(), ys.end());
  double prev_best = t[0];
  for (std::size_t s = 1; s < k; ++s) {
    for (std::size_t i = 0; i + s < k; ++i)
      t[i] = (xs[i] * t[i + 1] - xs[i + s] * t[i]) / (xs[i] - xs[i + s]);
    if (s + 1 < k) prev_best = t[0];
  }
  if (err_out) *err_out = std::abs(t[0] - prev_best);
  return t[0];
}

// Exact expansion of the 2^r-scaled spectral combination at t_j = 1 + u_j,
// p_l = 1 + w_l. Everything of total degree < r cancels identically; the
// survivor is homogeneous of degree r and can be evaluated in double
// without catastrophic cancellation.
const LaurentPoly& bc_limit_expansion(int n, int r) {
  static std::map<std::pair<int, int>, LaurentPoly> cache;
  auto it = cache.find({n, r});
  if (it != cache.end()) return it->second;
  int nv = n + (n - r + 1);
  if (nv > kMaxVars)
    throw std::invalid_argument("bc limit expansion: too many variables");
  LaurentPoly one = LaurentPoly::constant(nv, Rat(1));
  std::vector<LaurentPoly> tv, pv;
  for (int j = 0; j < n; ++j) tv.push_back(one + LaurentPoly::variable(nv, j));
  for (int l = r; l <= n; ++l)
    pv.push_back(one + LaurentPoly::variable(nv, n + l - r));
  LaurentPoly P = spectral_combination<LaurentPoly>(r, tv, pv, LaurentPoly(nv), one);
  P.scale(rat_pow(Rat(2), r));
  for (const auto& [e, c] : P.terms())
    if (exp_total(e) < r)
      throw std::runtime_error("bc limit expansion: low-order terms survived");
  return cache.emplace(std::make_pair(n, r), std::move(P)).first->second;
}

}  // namespace

LimitPoint limit_point(Flavor flavor, const AdditiveParams& add, int n, int r,
                       const Partition& lam, std::span<const double> betas) {
  add.validate();
  require(r >= 1 && r <= n, "limit_point: r out of range");
  require(lam.n() == n, "limit_point: weight length mismatch");
  require(betas.size() >= 2, "limit_point: need at least two betas");
  for (std::size_t i = 0; i + 1 < betas.size(); ++i)
    require(betas[i] > betas[i + 1] && betas[i + 1] > 0,
            "limit_point: betas must decrease toward 0");

  LimitPoint out;
  out.lam = lam;
  std::vector<double> xs, ys;
  if (flavor == Flavor::A) {
    for (double beta : betas) {
      std::vector<double> vals;
      for (int j = 1; j <= n; ++j)
        vals.push_back(1.0 -
                       std::exp(-add.alpha * beta * (lam.parts[j - 1] + add.rho_a(n, j))));
      auto e = elementary_all<double>(vals, 0.0, 1.0);
      xs.push_back(beta);
      ys.push_back(e[r] / std::pow(beta, r));
    }
    std::vector<double> pts;
    for (int j = 1; j <= n; ++j) pts.push_back(lam.parts[j - 1] + add.rho_a(n, j));
    auto e = elementary_all<double>(pts, 0.0, 1.0);
    out.reference = std::pow(add.alpha, r) * e[r];
  } else {
    const LaurentPoly& P = bc_limit_expansion(n, r);
    for (double beta : betas) {
      std::vector<double> point;
      for (int j = 1; j <= n; ++j) {
        double s = std::sinh(add.alpha * beta * (lam.parts[j - 1] + add.rho_bc(n, j)) / 2);
        point.push_back(2 * s * s);
      }
      for (int l = r; l <= n; ++l) {
        double s = std::sinh(add.alpha * beta * add.rho_bc(n, l) / 2);
        point.push_back(2 * s * s);
      }
      xs.push_back(beta * beta);
      ys.push_back(P.eval_real(point) / std::pow(beta, 2 * r));
    }
    std::vector<double> tv, pv;
    for (int j = 1; j <= n; ++j) {
      double tau = lam.parts[j - 1] + add.rho_bc(n, j);
      tv.push_back(tau * tau);
    }
    for (int l = r; l <= n; ++l) {
      double rho = add.rho_bc(n, l);
      pv.push_back(rho * rho);
    }
    double comb = spectral_combination<double>(r, tv, pv, 0.0, 1.0);
    out.reference = std::pow(add.alpha, 2 * r) * std::pow(2.0, r) * comb;
  }
  out.samples = ys;
  out.limit = neville_zero(xs, ys, &out.extrap_error);
  if (!std::isfinite(out.limit) ||
      (out.limit != 0 && out.extrap_error > 0.05 * std::abs(out.limit)))
    throw std::runtime_error("limit_point: no stable extrapolation");
  out.ratio = out.reference != 0 ? out.limit / out.reference :
              std::numeric_limits<double>::quiet_NaN();
  return out;
}

LimitReport limit_check(Flavor flavor, const AdditiveParams& add, int n, int r,
                        std::span<const Partition> lams,
                        std::span<const double> betas, double rel_tol) {
  require(!lams.empty(), "limit_check: empty weight set");
  LimitReport rep;
  for (const Partition& lam : lams)
    rep.points.push_back(limit_point(flavor, add, n, r, lam, betas));
  rep.constant = rep.points.front().ratio;
  bool ok = std::isfinite(rep.constant) && rep.constant != 0;
  for (const LimitPoint& p : rep.points) {
    if (!std::isfinite(p.ratio)) ok = false;
    if (!ok) break;
    double rel = flavor == Flavor::A ? std::abs(p.ratio - 1.0)
                                     : std::abs(p.ratio / rep.constant - 1.0);
    if (rel > rel_tol) ok = false;
  }
  rep.pass = ok;
  return rep;
}

}  // namespace kw
