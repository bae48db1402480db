#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace polyharm {

// Exact scalars. mpq_class canonical form is the contract we need:
// lowest terms, positive denominator, no rounding anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// num/den reduced to canonical form; den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);  // 0 when k > n

// (-1)^k as an exact integer, defined for any (possibly negative) k.
inline int alt_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

// base^e with e >= 0
Int ipow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, unsigned long e);

bool is_integer(const Rat& q);

// "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& q);

// Inverse of rat_str; accepts optional sign and surrounding-free "p" or "p/q".
// Throws std::invalid_argument on malformed input.
Rat rat_parse(const std::string& text);

}  // namespace polyharm
