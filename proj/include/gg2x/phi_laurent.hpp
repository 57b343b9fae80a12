#pragma once

#include <map>
#include <string>

#include "gg2x/param_poly.hpp"

namespace gg2x {

/// Finite Laurent series in phi = G'/G^2 with ParamPoly coefficients.
/// Differentiation is purely algebraic: the auxiliary relation
/// phi' = mu + lambda*phi^2 closes the ring, so
/// d(phi^n)/dxi = n*mu*phi^{n-1} + n*lambda*phi^{n+1}.
class PhiLaurent {
 public:
  using CoeffMap = std::map<int, ParamPoly>;

  PhiLaurent() = default;  // zero series
  static PhiLaurent term(int power, ParamPoly coefficient);
  static PhiLaurent constant(ParamPoly coefficient);

  bool is_zero() const { return coeffs_.empty(); }
  const CoeffMap& coeffs() const { return coeffs_; }
  ParamPoly coefficient(int power) const;
  int min_power() const;  // 0 for the zero series
  int max_power() const;

  PhiLaurent& operator+=(const PhiLaurent& rhs);
  PhiLaurent& operator-=(const PhiLaurent& rhs);
  PhiLaurent& operator*=(const PhiLaurent& rhs);
  friend PhiLaurent operator+(PhiLaurent lhs, const PhiLaurent& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend PhiLaurent operator-(PhiLaurent lhs, const PhiLaurent& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend PhiLaurent operator*(PhiLaurent lhs, const PhiLaurent& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend bool operator==(const PhiLaurent&, const PhiLaurent&) = default;

  PhiLaurent scaled(const ParamPoly& factor) const;
  PhiLaurent pow(int exponent) const;  // exponent >= 0

  /// xi-derivative under the auxiliary relation.
  PhiLaurent derivative() const;
  PhiLaurent derivative(int order) const;

  /// Applies a ParamPoly substitution to every coefficient.
  PhiLaurent substituted(Sym s, const ParamPoly& replacement) const;

  std::string str() const;

 private:
  void add_term(int power, const ParamPoly& coefficient);

  CoeffMap coeffs_;
};

/// Free-function spelling of the xi-derivative.
inline PhiLaurent phi_derivative(const PhiLaurent& p) { return p.derivative(); }

}  // namespace gg2x
