#include "kw/diagonalize.hpp"

#include <algorithm>
#include <sstream>

namespace kw {

OperatorSession::OperatorSession(Flavor flavor, ModelParams params)
    : flavor_(flavor), params_(std::move(params)) {}

const DiffOperator& OperatorSession::op(int r) {
  auto it = ops_.find(r);
  if (it == ops_.end())
    it = ops_.emplace(r, DiffOperator::build(flavor_, r, params_)).first;
  return it->second;
}

const std::map<Partition, Rat>& OperatorSession::expansion(int r,
                                                           const Partition& mu) {
  auto key = std::make_pair(r, mu);
  auto it = expansions_.find(key);
  if (it != expansions_.end()) return it->second;
  LaurentPoly image = op(r).apply(monomial(mu, flavor_));
  std::map<Partition, Rat> row = expand_w_invariant(image, flavor_);
  for (const auto& [nu, c] : row) {
    if (!dominance_leq(nu, mu, flavor_))
      throw TriangularityViolation("expansion: image of m_" + mu.str() +
                                   " contains m_" + nu.str());
  }
  return expansions_.emplace(std::move(key), std::move(row)).first->second;
}

Rat OperatorSession::eigenvalue(int r, const Partition& lam) const {
  return flavor_ == Flavor::BC ? params_.eigenvalue_bc(r, lam)
                               : params_.eigenvalue_a(r, lam);
}

IdealMatrix matrix_on_ideal(OperatorSession& session, int r, const Partition& lam) {
  IdealMatrix m;
  m.basis = order_ideal(lam, session.flavor());
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < m.basis.size(); ++i) index[m.basis[i]] = i;
  m.entries.assign(m.basis.size(), std::vector<Rat>(m.basis.size(), Rat(0)));
  for (std::size_t i = 0; i < m.basis.size(); ++i) {
    for (const auto& [nu, c] : session.expansion(r, m.basis[i])) {
      auto it = index.find(nu);
      if (it == index.end())
        throw TriangularityViolation("matrix_on_ideal: " + nu.str() +
                                     " outside the ideal of " + lam.str());
      m.entries[i][it->second] = c;
    }
  }
  return m;
}

IdealMatrix matrix_on_ideal(const DiffOperator& op, const Partition& lam,
                            const ModelParams& params) {
  OperatorSession s(op.flavor(), params);
  return matrix_on_ideal(s, op.r(), lam);
}

LaurentPoly OrthoPolynomial::to_laurent() const {
  LaurentPoly out(lam.n());
  for (const auto& [mu, c] : coeffs) out += monomial(mu, flavor).scaled(c);
  return out;
}

std::optional<Rat> OrthoPolynomial::coeff(const Partition& mu) const {
  for (const auto& [m, c] : coeffs)
    if (m == mu) return c;
  return std::nullopt;
}

OrthoPolynomial ortho_poly(OperatorSession& session, const Partition& lam,
                           int solve_r) {
  const std::vector<Partition> ideal = order_ideal(lam, session.flavor());
  const std::size_t D = ideal.size();
  const Rat E = session.eigenvalue(solve_r, lam);
  for (std::size_t i = 0; i + 1 < D; ++i)
    if (session.eigenvalue(solve_r, ideal[i]) == E)
      throw EigenvalueCollision("ortho_poly: weights " + ideal[i].str() +
                                " and " + lam.str() +
                                " share an eigenvalue; perturb parameters");

  std::vector<Rat> x(D, Rat(0));
  x[D - 1] = 1;
  for (std::size_t step = 1; step < D; ++step) {
    std::size_t i = D - 1 - step;
    const Partition& nu = ideal[i];
    Rat s(0);
    for (std::size_t j = i + 1; j < D; ++j) {
      if (rat_is_zero(x[j])) continue;
      const auto& row = session.expansion(solve_r, ideal[j]);
      auto it = row.find(nu);
      if (it != row.end()) s += x[j] * it->second;
    }
    const auto& own = session.expansion(solve_r, nu);
    auto diag_it = own.find(nu);
    Rat diag = diag_it == own.end() ? Rat(0) : diag_it->second;
    // The computed diagonal must agree with the closed-form spectrum; a
    // mismatch means a transcription bug, not a solvable system.
    if (diag != session.eigenvalue(solve_r, nu))
      throw std::runtime_error("ortho_poly: diagonal entry at " + nu.str() +
                               " differs from the closed-form eigenvalue");
    x[i] = s / (E - diag);
  }

  OrthoPolynomial p;
  p.flavor = session.flavor();
  p.lam = lam;
  for (std::size_t i = 0; i < D; ++i)
    if (!rat_is_zero(x[i])) p.coeffs.emplace_back(ideal[i], x[i]);
  return p;
}

OrthoPolynomial ortho_poly(Flavor flavor, const Partition& lam,
                           const ModelParams& params, int solve_r) {
  OperatorSession s(flavor, params);
  return ortho_poly(s, lam, solve_r);
}

CheckReport verify_eigen_poly(OperatorSession& session,
                              const OrthoPolynomial& poly) {
  CheckReport rep;
  rep.suite = "eigen";
  LaurentPoly P = poly.to_laurent();
  for (int r = 1; r <= session.n(); ++r) {
    LaurentPoly image = session.op(r).apply(P);
    LaurentPoly residual = image - P.scaled(session.eigenvalue(r, poly.lam));
    CheckItem item;
    std::ostringstream name;
    name << "eigen r=" << r << " lambda=" << poly.lam.str();
    item.name = name.str();
    item.pass = residual.is_zero();
    if (!item.pass) item.detail = "residual " + residual.str();
    rep.items.push_back(std::move(item));
  }
  return rep;
}

CheckReport verify_joint_eigen(OperatorSession& session, const Partition& lam) {
  return verify_eigen_poly(session, ortho_poly(session, lam, 1));
}

CheckReport verify_commutators(OperatorSession& session, int r, int s,
                               std::span<const Partition> lams) {
  CheckReport rep;
  rep.suite = "commute";
  for (const Partition& lam : lams) {
    LaurentPoly f = monomial(lam, session.flavor());
    LaurentPoly rs = session.op(r).apply(session.op(s).apply(f));
    LaurentPoly sr = session.op(s).apply(session.op(r).apply(f));
    CheckItem item;
    std::ostringstream name;
    name << "commute [" << r << "," << s << "] lambda=" << lam.str();
    item.name = name.str();
    item.pass = rs == sr;
    if (!item.pass) item.detail = "difference " + (rs - sr).str();
    rep.items.push_back(std::move(item));
  }
  return rep;
}

namespace {

void all_subsets(int n, std::vector<std::vector<int>>& out) {
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(std::move(s));
  }
}

}  // namespace

CheckReport verify_u_identity(const ModelParams& params, int max_m) {
  CheckReport rep;
  rep.suite = "identity";
  std::vector<std::vector<int>> subsets;
  all_subsets(params.n(), subsets);
  for (const auto& K : subsets) {
    for (int m = 0; m <= std::min<int>(max_m, static_cast<int>(K.size())); ++m) {
      RatFunc main = build_U(K, m, params, UVariant::Main);
      RatFunc alt = build_U(K, m, params, UVariant::Alt);
      CheckItem item;
      std::ostringstream name;
      name << "U main=alt |K|=" << K.size() << " K={";
      for (std::size_t i = 0; i < K.size(); ++i)
        name << (i ? "," : "") << K[i];
      name << "} m=" << m;
      item.name = name.str();
      item.pass = main == alt;
      if (!item.pass) item.detail = "main " + main.str() + " alt " + alt.str();
      rep.items.push_back(std::move(item));
    }
  }
  return rep;
}

CheckReport verify_conjugation(const ModelParams& params) {
  CheckReport rep;
  rep.suite = "selfadjoint";
  int n = params.n();
  for (int j = 0; j < n; ++j) {
    CheckItem item;
    item.name = "w(-x_" + std::to_string(j) + ") = invert w(+x_" +
                std::to_string(j) + ")";
    item.pass = potential_w(-1, j, params) == potential_w(1, j, params).inverted_vars();
    rep.items.push_back(std::move(item));
  }
  std::vector<std::vector<int>> subsets;
  all_subsets(n, subsets);
  for (const auto& J : subsets) {
    if (J.empty()) continue;
    std::vector<int> K;
    for (int k = 0; k < n; ++k)
      if (std::find(J.begin(), J.end(), k) == J.end()) K.push_back(k);
    int s = static_cast<int>(J.size());
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
      std::vector<int> eps(s), neg(s);
      for (int i = 0; i < s; ++i) {
        eps[i] = (mask >> i & 1) ? -1 : 1;
        neg[i] = -eps[i];
      }
      CheckItem item;
      std::ostringstream name;
      name << "V(-eps) = invert V(eps), J={";
      for (int i = 0; i < s; ++i) name << (i ? "," : "") << J[i];
      name << "} eps={";
      for (int i = 0; i < s; ++i) name << (i ? "," : "") << eps[i];
      name << "}";
      item.name = name.str();
      item.pass =
          build_V(J, neg, K, params) == build_V(J, eps, K, params).inverted_vars();
      rep.items.push_back(std::move(item));
    }
  }
  for (const auto& K : subsets) {
    for (int m = 0; m <= static_cast<int>(K.size()); ++m) {
      RatFunc U = build_U(K, m, params);
      CheckItem item;
      std::ostringstream name;
      name << "invert U = U, |K|=" << K.size() << " m=" << m;
      item.name = name.str();
      item.pass = U.inverted_vars() == U;
      rep.items.push_back(std::move(item));
    }
  }
  return rep;
}

}  // namespace kw
