#include "gg2x/conformable.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gg2x {

namespace {

void require_positive_time(double t) {
  if (!(t > 0)) {
    throw std::domain_error("conformable derivative requires t > 0, got t = " +
                            std::to_string(t));
  }
}

}  // namespace

FractionalOrder::FractionalOrder(double alpha_in) : alpha(alpha_in) {
  if (!(alpha > 0.0) || !(alpha <= 1.0)) {
    throw std::domain_error("fractional order must lie in (0, 1], got " +
                            std::to_string(alpha_in));
  }
}

double conformable_default_step(double t) { return 1e-6 * std::max(1.0, t); }

double d_alpha_limit(const RealFn& f, double t, FractionalOrder order,
                     double step) {
  require_positive_time(t);
  if (!(step > 0)) throw std::domain_error("difference step must be positive");
  // Forward difference straight from the definition: an O(step) oracle that
  // stays independent of the closed forms it is used to cross-check.
  const double scale = std::pow(t, 1.0 - order.alpha);
  return (f(t + step * scale) - f(t)) / step;
}

double d_alpha_limit(const RealFn& f, double t, FractionalOrder order) {
  return d_alpha_limit(f, t, order, conformable_default_step(t));
}

double d_alpha_classical(const RealFn& df, double t, FractionalOrder order) {
  require_positive_time(t);
  return std::pow(t, 1.0 - order.alpha) * df(t);
}

double d_alpha_chain(const RealFn& dg, const RealFn& df_outer, const RealFn& g,
                     double t, FractionalOrder order) {
  require_positive_time(t);
  return std::pow(t, 1.0 - order.alpha) * dg(t) * df_outer(g(t));
}

double d_2alpha_classical(const RealFn& df, const RealFn& d2f, double t,
                          FractionalOrder order) {
  require_positive_time(t);
  const double a = order.alpha;
  return (1.0 - a) * std::pow(t, 1.0 - 2.0 * a) * df(t) +
         std::pow(t, 2.0 - 2.0 * a) * d2f(t);
}

double power_rule(double p, double t, FractionalOrder order) {
  require_positive_time(t);
  return p * std::pow(t, p - order.alpha);
}

}  // namespace gg2x
