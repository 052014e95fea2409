#include "kw/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace kw {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_int(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = (s[0] == '-');
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw std::invalid_argument("rat_parse: bad rational literal '" +
                                std::string(whole) + "'");
  BigInt v(std::string(s), 10);
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rat rat_parse(std::string_view text) {
  auto slash = text.find('/');
  BigInt num, den;
  if (slash == std::string_view::npos) {
    num = parse_int(text, text);
    den = 1;
  } else {
    num = parse_int(text.substr(0, slash), text);
    std::string_view d = text.substr(slash + 1);
    if (!all_digits(d))
      throw std::invalid_argument("rat_parse: bad denominator in '" +
                                  std::string(text) + "'");
    den = BigInt(std::string(d), 10);
    if (sgn(den) == 0)
      throw std::invalid_argument("rat_parse: zero denominator in '" +
                                  std::string(text) + "'");
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_pow(const Rat& base, long expo) {
  if (expo == 0) return Rat(1);
  if (rat_is_zero(base)) {
    if (expo < 0) throw std::domain_error("rat_pow: 0 to a negative power");
    return Rat(0);
  }
  unsigned long mag =
      expo < 0 ? -static_cast<unsigned long>(expo) : static_cast<unsigned long>(expo);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), mag);
  mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), mag);
  Rat r = expo < 0 ? Rat(d, n) : Rat(n, d);
  r.canonicalize();
  return r;
}

double rat_double(const Rat& r) { return r.get_d(); }

Rat rat_binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rat(0);
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rat(b);
}

}  // namespace kw
