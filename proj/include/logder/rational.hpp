#ifndef LOGDER_RATIONAL_HPP
#define LOGDER_RATIONAL_HPP

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace logder {

/// Arbitrary precision rational, always kept canonical (lowest terms,
/// positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses an optionally signed integer or "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Parses a comma or whitespace separated list of rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

std::string to_string(std::span<const Rational> values);

}  // namespace logder

#endif  // LOGDER_RATIONAL_HPP
