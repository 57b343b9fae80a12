#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "gg2x/rational.hpp"
#include "gg2x/symbols.hpp"

namespace gg2x {

/// Exponent vector of one monomial over the fixed symbol set.  Negative
/// entries are allowed (Laurent monomials), which is what lets beta appear
/// in denominators without leaving the ring.
using Exponents = std::array<std::int16_t, kSymbolCount>;

inline constexpr Exponents kUnitExponents{};  // all zero

/// Multivariate Laurent polynomial with exact rational coefficients over the
/// ten model symbols.  Terms are kept in a canonical sorted map keyed by
/// exponent vector; zero coefficients are never stored.
class ParamPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  ParamPoly() = default;  // zero polynomial
  static ParamPoly constant(Rational value);
  static ParamPoly variable(Sym s, int exponent = 1);
  static ParamPoly monomial(Rational coefficient, const Exponents& exponents);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Constant term (zero if absent); precondition for as_constant: is_constant().
  Rational constant_term() const;
  Rational as_constant() const;

  ParamPoly& operator+=(const ParamPoly& rhs);
  ParamPoly& operator-=(const ParamPoly& rhs);
  ParamPoly& operator*=(const ParamPoly& rhs);
  ParamPoly operator-() const;

  friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ParamPoly operator*(ParamPoly lhs, const ParamPoly& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

  ParamPoly scaled(const Rational& factor) const;
  ParamPoly pow(int exponent) const;  // exponent >= 0

  bool depends_on(Sym s) const;
  int max_exponent_in(Sym s) const;  // 0 for a polynomial free of s
  int min_exponent_in(Sym s) const;

  /// Rewrites the polynomial as sum_d coeff_d * s^d; the returned
  /// coefficients are free of s.
  std::map<int, ParamPoly> collect(Sym s) const;
  ParamPoly coefficient_of(Sym s, int exponent) const;

  /// Replaces s by an arbitrary polynomial.  Requires every exponent of s to
  /// be non-negative (a Laurent power of s has no polynomial image).
  ParamPoly substitute(Sym s, const ParamPoly& replacement) const;

  /// Replaces s^2 by `replacement` wherever s appears; every exponent of s
  /// must be even and non-negative.  This is how kappa^2 roots are installed
  /// without introducing square roots of polynomials.
  ParamPoly substitute_squares(Sym s, const ParamPoly& replacement) const;

  /// Exact division by a single-term divisor (total in the Laurent ring).
  ParamPoly divided_by_monomial(const ParamPoly& divisor) const;

  /// Exact square root of a single-term perfect square, normalised to a
  /// positive rational coefficient; nullopt when no such root exists.
  std::optional<ParamPoly> monomial_sqrt() const;

  template <class S>
  S eval(const std::array<S, kSymbolCount>& values) const;

  /// Canonical text form, highest exponent vector first; parse() inverts it
  /// bit-for-bit.
  std::string str() const;
  static ParamPoly parse(std::string_view text);

 private:
  void add_term(const Exponents& exponents, const Rational& coefficient);

  TermMap terms_;
};

/// Scalar power with integer (possibly negative) exponent.
template <class S>
S scalar_pow(S base, int exponent) {
  if (exponent < 0) {
    return S(1) / scalar_pow(base, -exponent);
  }
  S acc(1);
  while (exponent > 0) {
    if (exponent & 1) acc *= base;
    base *= base;
    exponent >>= 1;
  }
  return acc;
}

template <class S>
S ParamPoly::eval(const std::array<S, kSymbolCount>& values) const {
  S total(0);
  for (const auto& [exps, coeff] : terms_) {
    S term = rational_to<S>(coeff);
    for (int i = 0; i < kSymbolCount; ++i) {
      if (exps[i] != 0) term *= scalar_pow(values[i], exps[i]);
    }
    total += term;
  }
  return total;
}

}  // namespace gg2x
