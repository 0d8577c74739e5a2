#include "logder/rational.hpp"

#include <cctype>

#include "logder/error.hpp"

namespace logder {

DuplicateHyperplane::DuplicateHyperplane(std::size_t first, std::size_t second)
    : InputError("DuplicateHyperplane",
                 "hyperplanes " + std::to_string(first + 1) + " and " + std::to_string(second + 1) +
                     " coincide (forms are scalar multiples)"),
      first_(first),
      second_(second) {}

NonEssential::NonEssential(std::size_t rank, std::size_t ell)
    : InputError("NonEssential", "arrangement is not essential: coefficient rank " +
                                     std::to_string(rank) + " < " + std::to_string(ell) +
                                     " (rank deficit " + std::to_string(ell - rank) + ")"),
      rank_(rank),
      ell_(ell) {}

NotLogarithmic::NotLogarithmic(std::size_t index)
    : Error("NotLogarithmic", "NotLogarithmic(" + std::to_string(index + 1) +
                                  "): alpha_" + std::to_string(index + 1) +
                                  " does not divide theta(alpha_" + std::to_string(index + 1) + ")"),
      index_(index) {}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational value(n, d);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos])))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ',' && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) out.push_back(parse_rational(text.substr(pos, end - pos)));
    pos = end;
  }
  return out;
}

std::string to_string(std::span<const Rational> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].get_str();
  }
  return out + ")";
}

}  // namespace logder
