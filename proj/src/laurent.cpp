#include "kw/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace kw {

int exp_total(const Exp& e) {
  int t = 0;
  for (int v : e) t += v;
  return t;
}

Exp exp_add(const Exp& a, const Exp& b) {
  Exp r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<int16_t>(a[i] + b[i]);
  return r;
}

Exp exp_sub(const Exp& a, const Exp& b) {
  Exp r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<int16_t>(a[i] - b[i]);
  return r;
}

Exp exp_neg(const Exp& e) {
  Exp r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<int16_t>(-e[i]);
  return r;
}

bool GrlexLess::operator()(const Exp& a, const Exp& b) const {
  int ta = exp_total(a), tb = exp_total(b);
  if (ta != tb) return ta < tb;
  return a < b;  // lexicographic on the array
}

namespace {

struct ExpHash {
  std::size_t operator()(const Exp& e) const {
    // FNV-1a over the raw lanes.
    std::size_t h = 1469598103934665603ull;
    for (int16_t v : e) {
      h ^= static_cast<std::size_t>(static_cast<uint16_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

void check_var_count(int nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw std::invalid_argument("LaurentPoly: nvars out of range");
}

void check_lane(const Exp& e, int nvars) {
  for (int i = nvars; i < kMaxVars; ++i)
    if (e[i] != 0)
      throw std::invalid_argument("LaurentPoly: exponent beyond nvars");
}

}  // namespace

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) { check_var_count(nvars); }

LaurentPoly LaurentPoly::constant(int nvars, const Rat& c) {
  LaurentPoly p(nvars);
  p.add_term(exp_zero(), c);
  return p;
}

LaurentPoly LaurentPoly::term(int nvars, const Exp& e, const Rat& c) {
  check_var_count(nvars);
  check_lane(e, nvars);
  LaurentPoly p(nvars);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int j, int power) {
  check_var_count(nvars);
  if (j < 0 || j >= nvars)
    throw std::invalid_argument("LaurentPoly::variable: index out of range");
  Exp e = exp_zero();
  e[j] = static_cast<int16_t>(power);
  return term(nvars, e, Rat(1));
}

Rat LaurentPoly::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

const std::pair<const Exp, Rat>& LaurentPoly::leading() const {
  if (terms_.empty())
    throw std::logic_error("LaurentPoly::leading on zero polynomial");
  return *terms_.rbegin();
}

void LaurentPoly::add_term(const Exp& e, const Rat& c) {
  if (rat_is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (rat_is_zero(it->second)) terms_.erase(it);
  }
}

void LaurentPoly::check_same_vars(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("LaurentPoly: mixed variable counts");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) {
    Rat nc = -c;
    add_term(e, nc);
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_vars(b);
  LaurentPoly out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  // Accumulate in a hash map (arithmetic order per key is still the
  // deterministic loop order), then sort once into the term map.
  std::unordered_map<Exp, Rat, ExpHash> acc;
  acc.reserve(a.terms_.size() * 2 + b.terms_.size());
  const LaurentPoly& outer = a.terms_.size() <= b.terms_.size() ? a : b;
  const LaurentPoly& inner = a.terms_.size() <= b.terms_.size() ? b : a;
  for (const auto& [ea, ca] : outer.terms_) {
    for (const auto& [eb, cb] : inner.terms_) {
      Rat& slot = acc[exp_add(ea, eb)];
      slot += ca * cb;
    }
  }
  for (auto& [e, c] : acc)
    if (!rat_is_zero(c)) out.terms_.emplace(e, std::move(c));
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  r.negate();
  return r;
}

void LaurentPoly::negate() {
  for (auto& [e, c] : terms_) c = -c;
}

void LaurentPoly::scale(const Rat& c) {
  if (rat_is_zero(c)) {
    terms_.clear();
    return;
  }
  for (auto& [e, v] : terms_) v *= c;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
  LaurentPoly r = *this;
  r.scale(c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exp& off) const {
  check_lane(off, nvars_);
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(exp_add(e, off), c);
  return r;
}

LaurentPoly LaurentPoly::qshift(int j, int steps, const Rat& q) const {
  if (j < 0 || j >= nvars_)
    throw std::invalid_argument("LaurentPoly::qshift: index out of range");
  if (steps == 0) return *this;
  LaurentPoly r(nvars_);
  std::map<int, Rat> pow_cache;
  for (const auto& [e, c] : terms_) {
    int k = e[j] * steps;
    auto it = pow_cache.find(k);
    if (it == pow_cache.end()) it = pow_cache.emplace(k, rat_pow(q, k)).first;
    r.terms_.emplace(e, c * it->second);
  }
  return r;
}

LaurentPoly LaurentPoly::qshift_multi(std::span<const int> steps, const Rat& q) const {
  if (static_cast<int>(steps.size()) != nvars_)
    throw std::invalid_argument("LaurentPoly::qshift_multi: wrong step count");
  LaurentPoly r(nvars_);
  std::map<int, Rat> pow_cache;
  for (const auto& [e, c] : terms_) {
    int k = 0;
    for (int j = 0; j < nvars_; ++j) k += e[j] * steps[j];
    auto it = pow_cache.find(k);
    if (it == pow_cache.end()) it = pow_cache.emplace(k, rat_pow(q, k)).first;
    r.terms_.emplace(e, c * it->second);
  }
  return r;
}

LaurentPoly LaurentPoly::inverted_vars() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(exp_neg(e), c);
  return r;
}

LaurentPoly LaurentPoly::swapped_vars(int i, int j) const {
  if (i < 0 || i >= nvars_ || j < 0 || j >= nvars_)
    throw std::invalid_argument("LaurentPoly::swapped_vars: index out of range");
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exp f = e;
    std::swap(f[i], f[j]);
    r.terms_.emplace(f, c);
  }
  return r;
}

LaurentPoly LaurentPoly::flipped_var(int j) const {
  if (j < 0 || j >= nvars_)
    throw std::invalid_argument("LaurentPoly::flipped_var: index out of range");
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exp f = e;
    f[j] = static_cast<int16_t>(-f[j]);
    r.terms_.emplace(f, c);
  }
  return r;
}

Exp LaurentPoly::min_exponents() const {
  Exp m = exp_zero();
  if (terms_.empty()) return m;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  for (int i = nvars_; i < kMaxVars; ++i) m[i] = 0;
  return m;
}

int LaurentPoly::max_abs_exp(int j) const {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(static_cast<int>(e[j])));
  return m;
}

std::optional<LaurentPoly> LaurentPoly::divided_exact(const LaurentPoly& divisor) const {
  check_same_vars(divisor);
  if (divisor.is_zero())
    throw std::invalid_argument("LaurentPoly::divided_exact: zero divisor");
  LaurentPoly quotient(nvars_);
  if (is_zero()) return quotient;
  // Shift both operands to nonnegative exponents; on the nonnegative
  // lattice grlex is a well order, so peeling leading terms terminates.
  Exp mf = min_exponents();
  Exp mg = divisor.min_exponents();
  LaurentPoly work = shifted(exp_neg(mf));
  LaurentPoly g = divisor.shifted(exp_neg(mg));
  const auto& [eg, cg] = g.leading();
  while (!work.is_zero()) {
    const auto& [ef, cf] = work.leading();
    Exp m = exp_sub(ef, eg);
    for (int i = 0; i < nvars_; ++i)
      if (m[i] < 0) return std::nullopt;
    Rat cq = cf / cg;
    quotient.terms_.emplace(m, cq);
    Rat ncq = -cq;
    for (const auto& [e, c] : g.terms()) work.add_term(exp_add(m, e), ncq * c);
  }
  return quotient.shifted(exp_sub(mf, mg));
}

std::complex<double> LaurentPoly::eval(std::span<const std::complex<double>> z) const {
  if (static_cast<int>(z.size()) != nvars_)
    throw std::invalid_argument("LaurentPoly::eval: wrong point dimension");
  std::complex<double> s = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> m = rat_double(c);
    for (int j = 0; j < nvars_; ++j)
      if (e[j] != 0) m *= std::pow(z[j], static_cast<double>(e[j]));
    s += m;
  }
  return s;
}

double LaurentPoly::eval_real(std::span<const double> z) const {
  if (static_cast<int>(z.size()) != nvars_)
    throw std::invalid_argument("LaurentPoly::eval_real: wrong point dimension");
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = rat_double(c);
    for (int j = 0; j < nvars_; ++j)
      if (e[j] != 0) m *= std::pow(z[j], static_cast<double>(e[j]));
    s += m;
  }
  return s;
}

Rat LaurentPoly::eval_rat(std::span<const Rat> z) const {
  if (static_cast<int>(z.size()) != nvars_)
    throw std::invalid_argument("LaurentPoly::eval_rat: wrong point dimension");
  Rat s(0);
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (int j = 0; j < nvars_; ++j)
      if (e[j] != 0) m *= rat_pow(z[j], e[j]);
    s += m;
  }
  return s;
}

int LaurentPoly::compare(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_ ? -1 : 1;
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() < b.terms_.size() ? -1 : 1;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  GrlexLess less;
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return -1;
    if (less(ib->first, ia->first)) return 1;
    int c = cmp(ia->second, ib->second);
    if (c != 0) return c;
  }
  return 0;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << rat_str(c) << ")";
    for (int j = 0; j < nvars_; ++j)
      if (e[j] != 0) os << "*z" << j << "^" << e[j];
  }
  return os.str();
}

UnitParts extract_unit(const LaurentPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument("extract_unit: zero polynomial");
  UnitParts u;
  u.shift = p.min_exponents();
  LaurentPoly n = p.shifted(exp_neg(u.shift));
  u.coeff = n.leading().second;
  n.scale(Rat(1) / u.coeff);
  u.normal = std::move(n);
  return u;
}

}  // namespace kw
