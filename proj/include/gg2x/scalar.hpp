#pragma once

#include <quadmath.h>

#include <cmath>

namespace gg2x {

/// Wide scalar used by the finite-difference verifier.  Fourth-derivative
/// stencils at step 1e-4 lose ~16 digits to cancellation, so double cannot
/// resolve the truncation-dominated regime; __float128 can.
using quad = __float128;

inline double real_sqrt(double x) { return std::sqrt(x); }
inline quad real_sqrt(quad x) { return sqrtq(x); }

inline double real_sin(double x) { return std::sin(x); }
inline quad real_sin(quad x) { return sinq(x); }

inline double real_cos(double x) { return std::cos(x); }
inline quad real_cos(quad x) { return cosq(x); }

inline double real_exp(double x) { return std::exp(x); }
inline quad real_exp(quad x) { return expq(x); }

inline double real_fabs(double x) { return std::fabs(x); }
inline quad real_fabs(quad x) { return fabsq(x); }

inline double real_pow(double base, double exponent) {
  return std::pow(base, exponent);
}
inline quad real_pow(quad base, quad exponent) { return powq(base, exponent); }

inline bool real_finite(double x) { return std::isfinite(x); }
inline bool real_finite(quad x) { return !isinfq(x) && !isnanq(x); }

inline double to_double(double x) { return x; }
inline double to_double(quad x) { return static_cast<double>(x); }

}  // namespace gg2x
