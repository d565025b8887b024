#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tropcheck {

/// Exact rational scalar. Every value stays canonical (lowest terms, positive
/// denominator) as long as it is produced by ordinary arithmetic.
using Rational = mpq_class;

/// Dense rational vector; used for points, offsets and coefficient rows.
using Vector = std::vector<Rational>;

/// "p/q" string, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::vector<std::string> to_strings(std::span<const Rational> v);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Parses a comma separated list of rationals, optionally wrapped in parentheses.
Vector parse_point(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Random rational with numerator in [-range, range] and denominator in [1, max_den].
Rational random_rational(std::mt19937_64& rng, std::int64_t range, std::int64_t max_den);

/// Random integer in [lo, hi]; uses the raw engine output so sequences are
/// identical across standard library implementations.
std::int64_t random_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

}  // namespace tropcheck
