#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ramsey {

// Exact rational scalar. GMP keeps the invariants we need (gcd(|num|,den)=1,
// den>0) as long as values are built through the helpers below.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_of(const Int& num, const Int& den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q" with optional whitespace padding.
Rat rat_parse(std::string_view text);

// Prints "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& q);

double rat_double(const Rat& q);

// Decimal expansion with the given number of significant digits, round half
// away from zero. Used only at serialization boundaries (SDP export, --float).
std::string rat_decimal(const Rat& q, int significant_digits);

// x^k for k >= 0.
Rat rat_pow(const Rat& x, unsigned long k);

Int factorial(unsigned n);

} // namespace ramsey
