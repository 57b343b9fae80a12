#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

namespace gg2x {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact square root of a non-negative rational, when one exists.
std::optional<Rational> rational_sqrt(const Rational& r);

/// Canonical text form ("3", "-5/2"); parse() is its exact inverse.
std::string rational_str(const Rational& r);
std::optional<Rational> rational_parse(std::string_view text);

/// Scalar conversion.  Rational stays exact; floating targets go via separate
/// numerator/denominator casts, exact while each part fits the double
/// significand, which covers every value this engine produces.
template <class S>
S rational_to(const Rational& r) {
  if constexpr (std::is_same_v<S, Rational>) {
    return r;
  } else {
    return static_cast<S>(numerator(r).template convert_to<double>()) /
           static_cast<S>(denominator(r).template convert_to<double>());
  }
}

}  // namespace gg2x
