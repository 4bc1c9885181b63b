#ifndef QFV_NUMERIC_HPP
#define QFV_NUMERIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qfv {

// All counting is exact. Int is an arbitrary-precision integer, Rat an exact
// rational; no floating point is used anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

// Parses a decimal integer string. Throws Error(InvalidInput) on garbage.
Int parse_int(const std::string& text);

// Parses "p" or "p/q" with optional sign, q > 0 after canonicalization.
// Throws Error(InvalidInput) on garbage or zero denominator.
Rat parse_rat(const std::string& text);

// Binomial coefficient C(n, k) with C(n, k) = 0 for k < 0 or k > n.
Int binomial(long n, long k);

// Floor of an exact rational (round toward minus infinity).
long floor_long(const Rat& q);

}  // namespace qfv

#endif  // QFV_NUMERIC_HPP
