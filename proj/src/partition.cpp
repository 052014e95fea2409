#include "kw/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kw {

int Partition::weight() const {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

bool Partition::valid(Flavor f) const {
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i - 1] < parts[i]) return false;
  if (f == Flavor::BC && !parts.empty() && parts.back() < 0) return false;
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

bool dominance_leq(const Partition& mu, const Partition& lam, Flavor f) {
  if (mu.n() != lam.n())
    throw std::invalid_argument("dominance_leq: length mismatch");
  if (f == Flavor::A && mu.weight() != lam.weight()) return false;
  int sm = 0, sl = 0;
  for (int i = 0; i < mu.n(); ++i) {
    sm += mu.parts[i];
    sl += lam.parts[i];
    if (sm > sl) return false;
  }
  return true;
}

bool linext_less(const Partition& a, const Partition& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("linext_less: length mismatch");
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  // Reverse-lex tiebreak: at the last differing index the larger entry goes
  // first. At equal weight the dominance-smaller weight always has the larger
  // entry there, so this refines dominance for both flavors.
  for (int i = a.n() - 1; i >= 0; --i)
    if (a.parts[i] != b.parts[i]) return a.parts[i] > b.parts[i];
  return false;
}

namespace {

void gen_weakly_decreasing(int n, int pos, int hi, int lo, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (pos == n) {
    out.emplace_back(cur);
    return;
  }
  for (int v = hi; v >= lo; --v) {
    cur[pos] = v;
    gen_weakly_decreasing(n, pos + 1, v, lo, cur, out);
  }
}

}  // namespace

std::vector<Partition> order_ideal(const Partition& lam, Flavor f) {
  if (!lam.valid(f))
    throw std::invalid_argument("order_ideal: invalid weight " + lam.str());
  int n = lam.n();
  int hi = n ? lam.parts.front() : 0;
  int lo = f == Flavor::BC ? 0 : lam.parts.back();
  std::vector<Partition> all;
  std::vector<int> cur(n);
  gen_weakly_decreasing(n, 0, hi, lo, cur, all);
  std::vector<Partition> ideal;
  for (auto& mu : all)
    if (dominance_leq(mu, lam, f)) ideal.push_back(std::move(mu));
  std::sort(ideal.begin(), ideal.end(), linext_less);
  return ideal;
}

Partition dominant_rep(const Exp& e, int n, Flavor f) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = f == Flavor::BC ? std::abs(static_cast<int>(e[i]))
                           : static_cast<int>(e[i]);
  std::sort(v.begin(), v.end(), std::greater<int>());
  return Partition(std::move(v));
}

std::vector<Exp> w_orbit(const Partition& lam, Flavor f) {
  if (!lam.valid(f))
    throw std::invalid_argument("w_orbit: invalid weight " + lam.str());
  int n = lam.n();
  if (n > kMaxVars) throw std::invalid_argument("w_orbit: too many parts");
  std::vector<int> sorted = lam.parts;
  std::sort(sorted.begin(), sorted.end());
  std::set<Exp> orbit;
  do {
    if (f == Flavor::A) {
      Exp e = exp_zero();
      for (int i = 0; i < n; ++i) e[i] = static_cast<int16_t>(sorted[i]);
      orbit.insert(e);
    } else {
      // All sign patterns; flipping a zero entry is the identity, so skip it.
      std::vector<int> nz;
      for (int i = 0; i < n; ++i)
        if (sorted[i] != 0) nz.push_back(i);
      for (std::size_t mask = 0; mask < (std::size_t{1} << nz.size()); ++mask) {
        Exp e = exp_zero();
        for (int i = 0; i < n; ++i) e[i] = static_cast<int16_t>(sorted[i]);
        for (std::size_t b = 0; b < nz.size(); ++b)
          if (mask >> b & 1) e[nz[b]] = static_cast<int16_t>(-e[nz[b]]);
        orbit.insert(e);
      }
    }
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return {orbit.begin(), orbit.end()};
}

LaurentPoly monomial(const Partition& lam, Flavor f) {
  LaurentPoly m(lam.n());
  for (const Exp& e : w_orbit(lam, f)) m.add_term(e, Rat(1));
  return m;
}

bool is_w_invariant(const LaurentPoly& f, Flavor flavor) {
  int n = f.nvars();
  for (int i = 0; i + 1 < n; ++i)
    if (!(f.swapped_vars(i, i + 1) == f)) return false;
  if (flavor == Flavor::BC && n > 0)
    if (!(f.flipped_var(0) == f)) return false;
  return true;
}

std::map<Partition, Rat> expand_w_invariant(const LaurentPoly& f, Flavor flavor) {
  if (!is_w_invariant(f, flavor))
    throw NotWInvariant("expand_w_invariant: polynomial is not invariant");
  std::map<Partition, Rat> out;
  LaurentPoly work = f;
  int n = f.nvars();
  while (!work.is_zero()) {
    const Exp e = work.leading().first;
    const Rat coef = work.leading().second;
    // For an invariant polynomial the grlex-leading exponent is dominant:
    // sign flips lower the total degree and permutations are settled by lex.
    Partition lam = dominant_rep(e, n, flavor);
    LaurentPoly m = monomial(lam, flavor);
    work -= m.scaled(coef);
    // If f was invariant this strictly lowers the leading term; a repeat
    // leading exponent means the invariance check above was fooled.
    if (!work.is_zero()) {
      GrlexLess less;
      if (!less(work.leading().first, e))
        throw NotWInvariant("expand_w_invariant: leading term did not reduce");
    }
    out[lam] += coef;
  }
  return out;
}

std::vector<Partition> weights_up_to(int n, int bound, Flavor) {
  std::vector<Partition> all;
  std::vector<int> cur(n);
  gen_weakly_decreasing(n, 0, bound, 0, cur, all);
  std::vector<Partition> out;
  for (auto& p : all)
    if (p.weight() <= bound) out.push_back(std::move(p));
  std::sort(out.begin(), out.end(), linext_less);
  return out;
}

}  // namespace kw
