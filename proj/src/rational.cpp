#include "gg2x/rational.hpp"

#include <sstream>

namespace gg2x {

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  const Integer num_root = boost::multiprecision::sqrt(num);
  const Integer den_root = boost::multiprecision::sqrt(den);
  if (num_root * num_root != num || den_root * den_root != den) {
    return std::nullopt;
  }
  return Rational(num_root, den_root);
}

std::string rational_str(const Rational& r) {
  std::ostringstream out;
  out << r;  // "n" or "n/d" with d > 1
  return out.str();
}

std::optional<Rational> rational_parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    const Integer num(std::string(text.substr(0, slash)));
    if (slash == std::string_view::npos) return Rational(num);
    const Integer den(std::string(text.substr(slash + 1)));
    if (den <= 0) return std::nullopt;  // canonical form keeps sign on top
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
}

}  // namespace gg2x
