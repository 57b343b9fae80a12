#include "gg2x/reduction.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gg2x/errors.hpp"

namespace gg2x {

WaveTransform::WaveTransform(double kappa_in, FractionalOrder order_in)
    : kappa(kappa_in), order(order_in) {}

double WaveTransform::xi(double x, double t) const {
  if (!(t > 0)) {
    throw std::domain_error("wave variable requires t > 0");
  }
  return x + kappa * std::pow(t, order.alpha) / order.alpha;
}

ReducedODE::ReducedODE(ParamPoly c2_in, ParamPoly c1_in, ParamPoly c0_in,
                       IntegrationProvenance provenance_in)
    : c2(std::move(c2_in)),
      c1(std::move(c1_in)),
      c0(std::move(c0_in)),
      provenance(provenance_in) {
  if (c2.is_zero() || c0.is_zero()) {
    throw std::invalid_argument(
        "reduced ODE needs nonzero U'' and U^2 coefficients");
  }
}

std::string ReducedODE::str() const {
  std::ostringstream out;
  out << '(' << c2.str() << ")*U'' + (" << c1.str() << ")*U + (" << c0.str()
      << ")*U^2 = 0";
  return out.str();
}

ReducedODE reduce_boussinesq() {
  // u(x,t) = U(xi): D_t^{2alpha} u -> k^2 U'', u_xx -> U'', (u^2)_xx -> (U^2)'',
  // u_xxxx -> U''''.  Two xi-integrations with zero constants leave
  // U'' + (k^2 - 1) U - U^2 = 0.
  const ParamPoly one = ParamPoly::constant(Rational(1));
  const ParamPoly k_sq = ParamPoly::variable(Sym::k, 2);
  return ReducedODE(one, k_sq - one, -one, IntegrationProvenance{2, true});
}

CoupledReduction reduce_coupled() {
  // Equation one reduces to k U' + V' = 0, so V = -k U after one integration
  // with zero constant.  Substituted into equation two and integrated once:
  // -k^2 U + beta U^2 - gamma U'' = 0.
  const ParamPoly k = ParamPoly::variable(Sym::k);
  const ParamPoly gamma = ParamPoly::variable(Sym::gamma);
  const ParamPoly beta = ParamPoly::variable(Sym::beta);
  ReducedODE ode(-gamma, -(k * k), beta, IntegrationProvenance{1, true});
  return CoupledReduction{std::move(ode), -k};
}

int balancing_number(int derivative_order, int power, int derivative_power,
                     int inner_order) {
  // M + q = M*r + s*(q' + M)  =>  M * (r + s - 1) = q - s*q'.
  const int denom = power + derivative_power - 1;
  const int numer = derivative_order - derivative_power * inner_order;
  if (denom <= 0) {
    throw NoIntegerBalance("balance equation is degenerate for power " +
                           std::to_string(power));
  }
  if (numer % denom != 0 || numer / denom <= 0) {
    throw NoIntegerBalance("no positive integer balance for orders " +
                           std::to_string(derivative_order) + " vs power " +
                           std::to_string(power));
  }
  return numer / denom;
}

}  // namespace gg2x
