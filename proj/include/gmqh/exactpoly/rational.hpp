#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gmqh {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator). mpq_class canonicalizes after every arithmetic operation.
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "a", "-a", "a/b". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// True iff r has denominator 1.
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace gmqh
