#ifndef LOGDER_DOCTEST_PRINTERS_HPP
#define LOGDER_DOCTEST_PRINTERS_HPP

#include <doctest.h>

#include "logder/polynomial.hpp"
#include "logder/rational.hpp"

namespace doctest {
template <>
struct StringMaker<logder::Polynomial> {
  static String convert(const logder::Polynomial& p) { return logder::to_string(p).c_str(); }
};
template <>
struct StringMaker<logder::Rational> {
  static String convert(const logder::Rational& r) { return logder::to_string(r).c_str(); }
};
}  // namespace doctest

#endif  // LOGDER_DOCTEST_PRINTERS_HPP
