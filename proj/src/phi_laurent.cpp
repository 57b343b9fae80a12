#include "gg2x/phi_laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "gg2x/errors.hpp"

namespace gg2x {

PhiLaurent PhiLaurent::term(int power, ParamPoly coefficient) {
  PhiLaurent series;
  series.add_term(power, coefficient);
  return series;
}

PhiLaurent PhiLaurent::constant(ParamPoly coefficient) {
  return term(0, std::move(coefficient));
}

ParamPoly PhiLaurent::coefficient(int power) const {
  const auto it = coeffs_.find(power);
  return it == coeffs_.end() ? ParamPoly() : it->second;
}

int PhiLaurent::min_power() const {
  return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

int PhiLaurent::max_power() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

void PhiLaurent::add_term(int power, const ParamPoly& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(power, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

PhiLaurent& PhiLaurent::operator+=(const PhiLaurent& rhs) {
  for (const auto& [power, coeff] : rhs.coeffs_) add_term(power, coeff);
  return *this;
}

PhiLaurent& PhiLaurent::operator-=(const PhiLaurent& rhs) {
  for (const auto& [power, coeff] : rhs.coeffs_) add_term(power, -coeff);
  return *this;
}

PhiLaurent& PhiLaurent::operator*=(const PhiLaurent& rhs) {
  PhiLaurent product;
  for (const auto& [lp, lc] : coeffs_) {
    for (const auto& [rp, rc] : rhs.coeffs_) {
      product.add_term(lp + rp, lc * rc);
    }
  }
  coeffs_ = std::move(product.coeffs_);
  return *this;
}

PhiLaurent PhiLaurent::scaled(const ParamPoly& factor) const {
  PhiLaurent out;
  for (const auto& [power, coeff] : coeffs_) out.add_term(power, coeff * factor);
  return out;
}

PhiLaurent PhiLaurent::pow(int exponent) const {
  if (exponent < 0) {
    throw UnsupportedForm("negative power of a phi series");
  }
  PhiLaurent acc = constant(ParamPoly::constant(Rational(1)));
  for (int i = 0; i < exponent; ++i) acc *= *this;
  return acc;
}

PhiLaurent PhiLaurent::derivative() const {
  const ParamPoly mu = ParamPoly::variable(Sym::mu);
  const ParamPoly lambda = ParamPoly::variable(Sym::lambda);
  PhiLaurent out;
  for (const auto& [power, coeff] : coeffs_) {
    if (power == 0) continue;  // coefficients carry no xi dependence
    const ParamPoly scale = coeff.scaled(Rational(power));
    out.add_term(power - 1, scale * mu);
    out.add_term(power + 1, scale * lambda);
  }
  return out;
}

PhiLaurent PhiLaurent::derivative(int order) const {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  PhiLaurent out = *this;
  for (int i = 0; i < order; ++i) out = out.derivative();
  return out;
}

PhiLaurent PhiLaurent::substituted(Sym s, const ParamPoly& replacement) const {
  PhiLaurent out;
  for (const auto& [power, coeff] : coeffs_) {
    out.add_term(power, coeff.substitute(s, replacement));
  }
  return out;
}

std::string PhiLaurent::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << '(' << it->second.str() << ')';
    if (it->first != 0) out << "*phi^" << it->first;
  }
  return out.str();
}

}  // namespace gg2x
