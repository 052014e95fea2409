#include "kw/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace kw {

RatFunc::RatFunc(int nvars) : num_(nvars) {}

RatFunc RatFunc::from_poly(LaurentPoly p) {
  RatFunc r(p.nvars());
  r.num_ = std::move(p);
  return r;
}

RatFunc RatFunc::from_scalar(int nvars, const Rat& c) {
  return from_poly(LaurentPoly::constant(nvars, c));
}

RatFunc RatFunc::fraction(LaurentPoly num, const LaurentPoly& den) {
  RatFunc r = from_poly(std::move(num));
  r.div_poly(den);
  return r;
}

void RatFunc::push_factor(const LaurentPoly& f, int mult) {
  if (mult == 0 || num_.is_zero()) return;
  UnitParts u = extract_unit(f);
  // 1/f = coeff^{-1} z^{-shift} / normal, applied mult times.
  num_.scale(rat_pow(u.coeff, -mult));
  Exp off = exp_zero();
  for (int i = 0; i < kMaxVars; ++i)
    off[i] = static_cast<int16_t>(-u.shift[i] * mult);
  num_ = num_.shifted(off);
  if (u.normal.term_count() > 1) den_[u.normal] += mult;
}

void RatFunc::div_poly(const LaurentPoly& den) {
  if (den.is_zero())
    throw std::invalid_argument("RatFunc: division by zero polynomial");
  if (den.nvars() != nvars())
    throw std::invalid_argument("RatFunc: mixed variable counts");
  push_factor(den, 1);
}

LaurentPoly RatFunc::den_expanded() const {
  LaurentPoly d = LaurentPoly::constant(nvars(), Rat(1));
  for (const auto& [f, m] : den_)
    for (int i = 0; i < m; ++i) d *= f;
  return d;
}

void RatFunc::negate() { num_.negate(); }

void RatFunc::mul_poly(const LaurentPoly& p) {
  num_ *= p;
  if (num_.is_zero()) den_.clear();
}

void RatFunc::mul_scalar(const Rat& c) {
  num_.scale(c);
  if (num_.is_zero()) den_.clear();
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (nvars() != o.nvars())
    throw std::invalid_argument("RatFunc: mixed variable counts");
  num_ *= o.num_;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (const auto& [f, m] : o.den_) den_[f] += m;
  return *this;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (nvars() != o.nvars())
    throw std::invalid_argument("RatFunc: mixed variable counts");
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  // Common denominator: factorwise max multiplicity.
  FactorMap uni = den_;
  for (const auto& [f, m] : o.den_) {
    auto it = uni.find(f);
    if (it == uni.end())
      uni.emplace(f, m);
    else if (it->second < m)
      it->second = m;
  }
  LaurentPoly left = num_;
  for (const auto& [f, m] : uni) {
    auto it = den_.find(f);
    int need = m - (it == den_.end() ? 0 : it->second);
    for (int i = 0; i < need; ++i) left *= f;
  }
  LaurentPoly right = o.num_;
  for (const auto& [f, m] : uni) {
    auto it = o.den_.find(f);
    int need = m - (it == o.den_.end() ? 0 : it->second);
    for (int i = 0; i < need; ++i) right *= f;
  }
  num_ = std::move(left);
  num_ += right;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  den_ = std::move(uni);
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  RatFunc neg = o;
  neg.negate();
  return *this += neg;
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  // One ordered pass suffices: cancelling f cannot make a later factor g
  // stop dividing what remains of a numerator divisible by f*g.
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = num_.divided_exact(it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

RatFunc RatFunc::inverted_vars() const {
  RatFunc r = from_poly(num_.inverted_vars());
  for (const auto& [f, m] : den_) r.push_factor(f.inverted_vars(), m);
  return r;
}

RatFunc RatFunc::swapped_vars(int i, int j) const {
  RatFunc r = from_poly(num_.swapped_vars(i, j));
  for (const auto& [f, m] : den_) r.push_factor(f.swapped_vars(i, j), m);
  return r;
}

RatFunc RatFunc::flipped_var(int j) const {
  RatFunc r = from_poly(num_.flipped_var(j));
  for (const auto& [f, m] : den_) r.push_factor(f.flipped_var(j), m);
  return r;
}

bool RatFunc::equals(const RatFunc& o) const {
  if (nvars() != o.nvars()) return false;
  RatFunc d = *this;
  d -= o;
  return d.is_zero();
}

LaurentPoly RatFunc::to_laurent() const {
  auto p = try_to_laurent();
  if (!p)
    throw NonzeroRemainder("RatFunc::to_laurent: denominator does not cancel");
  return std::move(*p);
}

std::optional<LaurentPoly> RatFunc::try_to_laurent() const {
  LaurentPoly p = num_;
  for (const auto& [f, m] : den_) {
    for (int i = 0; i < m; ++i) {
      auto q = p.divided_exact(f);
      if (!q) return std::nullopt;
      p = std::move(*q);
    }
  }
  return p;
}

std::string RatFunc::str() const {
  std::ostringstream os;
  os << "(" << num_.str() << ")";
  for (const auto& [f, m] : den_)
    os << " / (" << f.str() << ")^" << m;
  return os.str();
}

}  // namespace kw
