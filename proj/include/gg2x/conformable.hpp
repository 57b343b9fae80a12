#pragma once

#include <functional>

namespace gg2x {

/// Fractional order alpha restricted to (0, 1].
struct FractionalOrder {
  explicit FractionalOrder(double alpha);
  double alpha;
};

using RealFn = std::function<double(double)>;

/// Default forward-difference step for the limit form: 1e-6 * max(1, t).
double conformable_default_step(double t);

/// Conformable derivative straight from its limit definition,
///   D_t^alpha f = lim_{e->0} (f(t + e*t^{1-alpha}) - f(t)) / e,
/// approximated by the forward difference at the given step (O(step)
/// accurate).  Requires t > 0.
double d_alpha_limit(const RealFn& f, double t, FractionalOrder order,
                     double step);
double d_alpha_limit(const RealFn& f, double t, FractionalOrder order);

/// Closed form for differentiable f: D_t^alpha f = t^{1-alpha} * f'(t).
double d_alpha_classical(const RealFn& df, double t, FractionalOrder order);

/// Chain rule for f(g(t)): D_t^alpha (f∘g) = t^{1-alpha} * g'(t) * f'(g(t)).
double d_alpha_chain(const RealFn& dg, const RealFn& df_outer, const RealFn& g,
                     double t, FractionalOrder order);

/// Second conformable derivative as the composition D^alpha(D^alpha f),
/// expanded for twice-differentiable f:
///   D^{2alpha} f = (1-alpha) t^{1-2alpha} f'(t) + t^{2-2alpha} f''(t).
double d_2alpha_classical(const RealFn& df, const RealFn& d2f, double t,
                          FractionalOrder order);

/// Conformable power rule: D_t^alpha t^p = p * t^{p-alpha}.
double power_rule(double p, double t, FractionalOrder order);

}  // namespace gg2x
