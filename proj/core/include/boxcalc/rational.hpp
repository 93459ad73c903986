#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace boxcalc {

/// Arbitrary-precision integers and rationals. Every scalar in this library
/// is exact; there is no floating-point evaluation path anywhere in core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

/// Exact floor of a rational.
inline Int rat_floor(const Rat& q) {
    Int n = num(q), d = den(q);  // d > 0 by cpp_rational invariant
    Int f = n / d;
    if (n < 0 && f * d != n) --f;
    return f;
}

inline bool is_integer(const Rat& q) { return den(q) == 1; }

/// Fractional part q - floor(q), in [0, 1).
inline Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

Int int_gcd(Int a, Int b);
Int vec_gcd(const IntVec& v);

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws on garbage.
Rat parse_rat(const std::string& s);

/// Canonical form "p" or "p/q" with q > 1.
std::string rat_to_string(const Rat& q);

/// Decimal string with `sig` significant digits, round half to even,
/// trailing zeros stripped. Used by the CSV grid writer; idempotent under
/// re-parse + re-format.
std::string rat_to_decimal(const Rat& q, int sig = 12);

std::string vec_to_string(const RatVec& v);
std::string vec_to_string(const IntVec& v);

RatVec to_rat_vec(const IntVec& v);

}  // namespace boxcalc
