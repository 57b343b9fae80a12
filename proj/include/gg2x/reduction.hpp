#pragma once

#include <string>

#include "gg2x/conformable.hpp"
#include "gg2x/param_poly.hpp"

namespace gg2x {

/// Traveling-wave variable xi = x + kappa * t^alpha / alpha.
struct WaveTransform {
  WaveTransform(double kappa, FractionalOrder order);
  double xi(double x, double t) const;  // t > 0

  double kappa;
  FractionalOrder order;
};

/// How many times the reduced equation was integrated in xi; all integration
/// constants are set to zero (solitary profiles decay with their derivatives).
struct IntegrationProvenance {
  int integrations = 0;
  bool constants_zero = true;
};

/// Reduced traveling-wave ODE in the canonical quadratic shape
///   c2 * U'' + c1 * U + c0 * U^2 = 0,
/// with coefficients in the parameter ring.
struct ReducedODE {
  ReducedODE(ParamPoly c2_in, ParamPoly c1_in, ParamPoly c0_in,
             IntegrationProvenance provenance_in);

  std::string str() const;

  ParamPoly c2;
  ParamPoly c1;
  ParamPoly c0;
  IntegrationProvenance provenance;
};

/// Conformable Boussinesq equation
///   D_t^{2alpha} u - u_xx - (u^2)_xx + u_xxxx = 0
/// reduced along xi (twice integrated, constants zero):
///   U'' + (k^2 - 1) U - U^2 = 0.
ReducedODE reduce_boussinesq();

/// Coupled conformable Boussinesq system
///   D_t^alpha u + v_x = 0,
///   D_t^alpha v + beta (u^2)_x - gamma u_xxx = 0,
/// reduced along xi.  The first equation integrates to V = -k U (constant
/// zero), and eliminating V from the second gives
///   -k^2 U + beta U^2 - gamma U'' = 0.
struct CoupledReduction {
  ReducedODE ode;
  ParamPoly v_over_u;  // V = v_over_u * U
};
CoupledReduction reduce_coupled();

/// Homogeneous balance between the highest derivative (order
/// `derivative_order` of U) and a nonlinear term U^r * (d^{inner} U)^s:
///   M + derivative_order = M*r + s*(inner_order + M).
/// Throws NoIntegerBalance unless the solution is a positive integer.
int balancing_number(int derivative_order, int power, int derivative_power = 0,
                     int inner_order = 0);

}  // namespace gg2x
