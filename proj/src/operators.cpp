#include "kw/operators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kw {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Size-k subsets of pool, elements kept in pool order.
void combinations(const std::vector<int>& pool, int k,
                  std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      if (pool.size() - i < k - cur.size()) break;
      cur.push_back(pool[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

// Sign patterns for k slots in Gray-code order, so consecutive patterns
// differ in one slot; pairwise sums then cancel poles as early as possible.
std::vector<std::vector<int>> gray_signs(int k) {
  std::vector<std::vector<int>> out;
  for (unsigned idx = 0; idx < (1u << k); ++idx) {
    unsigned gray = idx ^ (idx >> 1);
    std::vector<int> s(k);
    for (int b = 0; b < k; ++b) s[b] = (gray >> b & 1) ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

LaurentPoly ArgSpec::monomial(int nvars) const {
  Exp e = exp_zero();
  for (auto [v, s] : vars) {
    require(v >= 0 && v < nvars, "ArgSpec: variable out of range");
    e[v] = static_cast<int16_t>(e[v] + s);
  }
  return LaurentPoly::term(nvars, e, Rat(1));
}

RatFunc potential_v(const ArgSpec& spec, const ModelParams& p) {
  require(!spec.half_offset, "potential_v: half offsets not allowed");
  require(!spec.vars.empty() && spec.vars.size() <= 2,
          "potential_v: need one or two signed variables");
  require(spec.q_offset >= -1 && spec.q_offset <= 1,
          "potential_v: offset out of range");
  int nv = p.n();
  LaurentPoly zeta = spec.monomial(nv);
  Rat off = rat_pow(p.q(), spec.q_offset);
  LaurentPoly one = LaurentPoly::constant(nv, Rat(1));
  LaurentPoly num = one - zeta.scaled(p.t() * off);
  LaurentPoly den = one - zeta.scaled(off);
  RatFunc r = RatFunc::fraction(std::move(num), den);
  r.mul_scalar(Rat(1) / p.th());
  return r;
}

RatFunc potential_w(int sign, int j, const ModelParams& p) {
  require(sign == 1 || sign == -1, "potential_w: sign must be +-1");
  require(j >= 0 && j < p.n(), "potential_w: variable out of range");
  int nv = p.n();
  LaurentPoly zeta = LaurentPoly::variable(nv, j, sign);
  LaurentPoly zeta2 = LaurentPoly::variable(nv, j, 2 * sign);
  LaurentPoly one = LaurentPoly::constant(nv, Rat(1));
  LaurentPoly num = one - zeta.scaled(p.a());
  for (const Rat* letter : {&p.b(), &p.c(), &p.d()})
    num *= one - zeta.scaled(*letter);
  RatFunc r = RatFunc::from_poly(std::move(num));
  r.div_poly(one - zeta2);
  r.div_poly(one - zeta2.scaled(p.q()));
  r.mul_scalar(Rat(1) / p.kappa());
  return r;
}

RatFunc build_V(const std::vector<int>& J, const std::vector<int>& signs,
                const std::vector<int>& K, const ModelParams& p) {
  require(J.size() == signs.size(), "build_V: J and signs must be parallel");
  for (int j : J)
    for (int k : K) require(j != k, "build_V: overlapping index sets");
  int nv = p.n();
  RatFunc acc = RatFunc::from_scalar(nv, Rat(1));
  for (std::size_t i = 0; i < J.size(); ++i)
    acc *= potential_w(signs[i], J[i], p);
  for (std::size_t i = 0; i < J.size(); ++i) {
    for (std::size_t i2 = 0; i2 < J.size(); ++i2) {
      if (J[i] >= J[i2]) continue;  // pair each unordered {j < j'} once
      ArgSpec pair{{{J[i], signs[i]}, {J[i2], signs[i2]}}, 0, false};
      acc *= potential_v(pair, p);
      pair.q_offset = 1;
      acc *= potential_v(pair, p);
    }
  }
  for (std::size_t i = 0; i < J.size(); ++i) {
    for (int k : K) {
      acc *= potential_v(ArgSpec{{{J[i], signs[i]}, {k, 1}}, 0, false}, p);
      acc *= potential_v(ArgSpec{{{J[i], signs[i]}, {k, -1}}, 0, false}, p);
    }
  }
  return acc;
}

namespace {

RatFunc build_u_main(const std::vector<int>& K, int m, const ModelParams& p) {
  int nv = p.n();
  RatFunc sum(nv);
  std::vector<std::vector<int>> subsets;
  combinations(K, m, subsets);
  for (const auto& L : subsets) {
    std::vector<int> rest;
    for (int k : K)
      if (std::find(L.begin(), L.end(), k) == L.end()) rest.push_back(k);
    for (const auto& eps : gray_signs(m)) {
      RatFunc term = RatFunc::from_scalar(nv, Rat(1));
      for (int i = 0; i < m; ++i) term *= potential_w(eps[i], L[i], p);
      for (int i = 0; i < m; ++i) {
        for (int i2 = i + 1; i2 < m; ++i2) {
          ArgSpec fwd{{{L[i], eps[i]}, {L[i2], eps[i2]}}, 0, false};
          term *= potential_v(fwd, p);
          ArgSpec rev{{{L[i], -eps[i]}, {L[i2], -eps[i2]}}, -1, false};
          term *= potential_v(rev, p);
        }
      }
      for (int i = 0; i < m; ++i) {
        for (int k : rest) {
          term *= potential_v(ArgSpec{{{L[i], eps[i]}, {k, 1}}, 0, false}, p);
          term *= potential_v(ArgSpec{{{L[i], eps[i]}, {k, -1}}, 0, false}, p);
        }
      }
      sum += term;
    }
  }
  if (m % 2) sum.negate();
  return sum;
}

// Strictly increasing chains of nonempty subsets below top (exclusive),
// returned as [L_1, ..., L_{p-1}]; the empty chain is included.
void chains_below(const std::vector<int>& top,
                  std::vector<std::vector<std::vector<int>>>& out,
                  std::vector<std::vector<int>>& cur) {
  out.push_back({cur.rbegin(), cur.rend()});
  for (std::size_t sz = 1; sz < top.size(); ++sz) {
    std::vector<std::vector<int>> subs;
    combinations(top, static_cast<int>(sz), subs);
    for (const auto& s : subs) {
      cur.push_back(s);
      chains_below(s, out, cur);
      cur.pop_back();
    }
  }
}

RatFunc build_u_alt(const std::vector<int>& K, int m, const ModelParams& p) {
  int nv = p.n();
  RatFunc sum(nv);
  std::vector<std::vector<int>> tops;
  combinations(K, m, tops);
  for (const auto& Lp : tops) {
    std::vector<std::vector<std::vector<int>>> chains;
    std::vector<std::vector<int>> cur;
    chains_below(Lp, chains, cur);
    for (auto& lower : chains) {
      std::vector<std::vector<int>> chain = lower;
      chain.push_back(Lp);
      int plen = static_cast<int>(chain.size());
      for (const auto& eps : gray_signs(m)) {
        // Sign of each element of L_p, looked up per block.
        auto sign_of = [&](int v) {
          for (int i = 0; i < m; ++i)
            if (Lp[i] == v) return eps[i];
          throw std::logic_error("build_u_alt: sign lookup failed");
        };
        RatFunc term = RatFunc::from_scalar(nv, Rat(1));
        std::vector<int> prev;
        for (const auto& Li : chain) {
          std::vector<int> block, bsigns, rest;
          for (int v : Li)
            if (std::find(prev.begin(), prev.end(), v) == prev.end()) {
              block.push_back(v);
              bsigns.push_back(sign_of(v));
            }
          for (int k : K)
            if (std::find(Li.begin(), Li.end(), k) == Li.end()) rest.push_back(k);
          term *= build_V(block, bsigns, rest, p);
          prev = Li;
        }
        if (plen % 2) term.negate();
        sum += term;
      }
    }
  }
  return sum;
}

}  // namespace

RatFunc build_U(const std::vector<int>& K, int m, const ModelParams& p,
                UVariant variant) {
  require(m >= 0 && m <= static_cast<int>(K.size()), "build_U: m out of range");
  for (int k : K) require(k >= 0 && k < p.n(), "build_U: index out of range");
  if (m == 0) return RatFunc::from_scalar(p.n(), Rat(1));
  return variant == UVariant::Main ? build_u_main(K, m, p)
                                   : build_u_alt(K, m, p);
}

std::size_t bc_term_count(int n, int r) {
  std::size_t total = 0;
  for (int s = 0; s <= r; ++s) {
    std::size_t c = 1;
    for (int i = 0; i < s; ++i) c = c * (n - i) / (i + 1);
    total += (std::size_t{1} << s) * c;
  }
  return total;
}

DiffOperator DiffOperator::build(Flavor flavor, int r, const ModelParams& p) {
  require(r >= 1 && r <= p.n(), "DiffOperator::build: r out of range");
  DiffOperator op;
  op.flavor_ = flavor;
  op.r_ = r;
  op.n_ = p.n();
  op.q_ = p.q();
  std::vector<int> all(p.n());
  for (int i = 0; i < p.n(); ++i) all[i] = i;

  if (flavor == Flavor::A) {
    std::vector<std::vector<int>> Js;
    combinations(all, r, Js);
    for (const auto& J : Js) {
      RatFunc coeff = RatFunc::from_scalar(p.n(), Rat(1));
      for (int j : J)
        for (int k : all)
          if (std::find(J.begin(), J.end(), k) == J.end())
            coeff *= potential_v(ArgSpec{{{j, 1}, {k, -1}}, 0, false}, p);
      OpTerm term;
      term.shift.assign(p.n(), 0);
      for (int j : J) term.shift[j] = 1;
      term.coeff = std::move(coeff);
      op.terms_.push_back(std::move(term));
    }
    return op;
  }

  for (int s = 0; s <= r; ++s) {
    std::vector<std::vector<int>> Js;
    combinations(all, s, Js);
    for (const auto& J : Js) {
      std::vector<int> K;
      for (int k : all)
        if (std::find(J.begin(), J.end(), k) == J.end()) K.push_back(k);
      RatFunc U = build_U(K, r - s, p);
      for (const auto& eps : gray_signs(s)) {
        OpTerm term;
        term.shift.assign(p.n(), 0);
        for (int i = 0; i < s; ++i) term.shift[J[i]] = eps[i];
        term.coeff = U * build_V(J, eps, K, p);
        op.terms_.push_back(std::move(term));
      }
    }
  }
  if (op.terms_.size() != bc_term_count(p.n(), r))
    throw std::logic_error("DiffOperator::build: term count mismatch");
  return op;
}

LaurentPoly DiffOperator::apply(const LaurentPoly& f) const {
  if (f.nvars() != n_)
    throw std::invalid_argument("DiffOperator::apply: variable count mismatch");
  // Fold each fixed-support group of terms first (sign patterns come in
  // Gray order, so adjacent partial sums cancel the reflection poles), then
  // tree-merge the groups.
  std::vector<RatFunc> groups;
  std::size_t i = 0;
  while (i < terms_.size()) {
    std::size_t jEnd = i;
    while (jEnd < terms_.size()) {
      bool same = true;
      for (int v = 0; v < n_; ++v)
        if ((terms_[i].shift[v] == 0) != (terms_[jEnd].shift[v] == 0)) same = false;
      if (!same) break;
      ++jEnd;
    }
    RatFunc acc(n_);
    for (std::size_t t = i; t < jEnd; ++t) {
      LaurentPoly shifted = f.qshift_multi(terms_[t].shift, q_);
      RatFunc part = terms_[t].coeff;
      part.mul_poly(shifted);
      acc += part;
    }
    groups.push_back(std::move(acc));
    i = jEnd;
  }
  while (groups.size() > 1) {
    std::vector<RatFunc> next;
    for (std::size_t g = 0; g + 1 < groups.size(); g += 2)
      next.push_back(groups[g] + groups[g + 1]);
    if (groups.size() % 2) next.push_back(std::move(groups.back()));
    groups = std::move(next);
  }
  if (groups.empty()) return LaurentPoly(n_);
  return groups.front().to_laurent();
}

}  // namespace kw
