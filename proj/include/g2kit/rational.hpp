#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace g2kit {

/// Exact rational scalar. GMP keeps it canonical (reduced, denominator > 0).
using Rational = mpq_class;

/// Parses "p", "-p", "+p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms text: "7", "-7/2".
std::string to_string(const Rational& q);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Exact square root when q is the square of a rational; false otherwise.
bool exact_sqrt(const Rational& q, Rational& root);

}  // namespace g2kit
