#pragma once

#include <gmpxx.h>

#include <string>

namespace equiknot {

// Exact arithmetic is delegated to GMP: mpq_class keeps fractions reduced with
// positive denominator, which is precisely the canonical form we need.
using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

Rat rat_of(long num, long den = 1);

// Parses "p" or "p/q" (optional leading '-'). Throws InvalidInput on garbage
// or zero denominator.
Rat rat_parse(const std::string& s);

// Canonical printing: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& q);
std::string int_str(const Int& z);

bool is_integer(const Rat& q);
Int to_int(const Rat& q); // requires is_integer

// |z| < 2^53, i.e. exactly representable range for JSON numbers.
bool fits_json_number(const Int& z);

// q is the square of a rational.
bool is_rational_square(const Rat& q);

// Exact nonnegative square root; requires is_rational_square(q).
Rat sqrt_rational(const Rat& q);

// Square-free integer representative of the square class of q != 0.
// Factors by trial division (plus a perfect-square check on the cofactor),
// which is exact for every value this library produces in practice; a huge
// square factor hiding behind a >10^6 prime is left in place.
Int squarefree_class(const Rat& q);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

} // namespace equiknot
