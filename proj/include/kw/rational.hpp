#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kw {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator (zero is 0/1); the parser below canonicalizes, so
// every Rat built through this header satisfies that invariant.
using Rat = mpq_class;
using BigInt = mpz_class;

// Accepts "p", "-p", "p/q", "-p/q" with decimal digits; rejects anything
// else (including "p/0") with std::invalid_argument.
Rat rat_parse(std::string_view text);

// Always lowest-terms "p/q" with a unit denominator spelled out ("3"
// prints as "3/1"), regardless of how the value was constructed.
std::string rat_str(const Rat& r);

// Integer powers; negative exponents invert. 0^negative throws
// std::domain_error.
Rat rat_pow(const Rat& base, long expo);

double rat_double(const Rat& r);

inline bool rat_is_zero(const Rat& r) { return sgn(r) == 0; }

// binomial(n, k), zero outside 0 <= k <= n.
Rat rat_binom(long n, long k);

}  // namespace kw
