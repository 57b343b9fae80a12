#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gg2x/conformable.hpp"
#include "gg2x/errors.hpp"
#include "gg2x/method_engine.hpp"
#include "gg2x/scalar.hpp"

namespace gg2x {

/// The three closed-form branches of the auxiliary equation
/// phi' = mu + lambda*phi^2, selected by the sign of lambda*mu.
enum class PhiCaseKind { trig, hyperbolic, rational };

std::string phi_case_name(PhiCaseKind kind);
std::optional<PhiCaseKind> phi_case_from_name(std::string_view name);

/// Throws CaseMismatch unless (lambda, mu) lie in the case's sign region:
/// trig lambda*mu > 0, hyperbolic lambda*mu < 0, rational mu = 0 (lambda != 0
/// always).
void check_case_admissible(PhiCaseKind kind, double lambda, double mu);

/// Relative guard band for the near-singular predicates.
inline constexpr double kNearSingularScale = 1e-9;

template <class S>
struct PhiValue {
  S value{};
  bool near_zero = false;  // numerator within the guard band
};

/// Evaluates phi(xi).  Throws SingularPoint inside the denominator guard
/// band |den| < scale * (1 + |num|).
template <class S>
PhiValue<S> phi_eval(PhiCaseKind kind, S lambda, S mu, S C, S D, S xi) {
  S num, den, prefactor;
  switch (kind) {
    case PhiCaseKind::trig: {
      // sqrt(lambda*mu)/lambda * (C cos + D sin)/(D cos - C sin); this form
      // solves the auxiliary equation on the whole region lambda*mu > 0.
      const S w = real_sqrt(lambda * mu);
      prefactor = w / lambda;
      const S c = real_cos(w * xi);
      const S s = real_sin(w * xi);
      num = C * c + D * s;
      den = D * c - C * s;
      break;
    }
    case PhiCaseKind::hyperbolic: {
      const S w = real_sqrt(-lambda * mu);
      prefactor = -w / lambda;
      const S e = real_exp(S(2) * w * xi);
      if (!real_finite(e)) {
        // exp overflow: the ratio has already saturated at its limit 1.
        return PhiValue<S>{prefactor, false};
      }
      num = C * e + D;
      den = C * e - D;
      break;
    }
    case PhiCaseKind::rational: {
      prefactor = S(1);
      num = -C;
      den = lambda * (C * xi + D);
      break;
    }
  }
  if (real_fabs(den) < S(kNearSingularScale) * (S(1) + real_fabs(num))) {
    throw SingularPoint("phi denominator vanishes near xi = " +
                        std::to_string(to_double(xi)));
  }
  PhiValue<S> out;
  out.value = prefactor * num / den;
  out.near_zero = real_fabs(num) < S(kNearSingularScale) * (S(1) + real_fabs(den));
  return out;
}

double phi_value(PhiCaseKind kind, double lambda, double mu, double C, double D,
                 double xi);

/// Numeric model parameters.  lambda and mu must respect the chosen case;
/// beta and gamma only matter for the coupled system.
struct ParamValues {
  double lambda = 1.0;
  double mu = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
};

/// A fully bound solution: one exact candidate set, one phi case, numeric
/// parameters, and a resolved wave speed.
struct ClosedFormSolution {
  CandidateSet set;
  PhiCaseKind kind = PhiCaseKind::trig;
  double C = 1.0;
  double D = 1.0;
  ParamValues params;
  FractionalOrder order{1.0};
  int kappa_sign = +1;
  double kappa_squared = 0.0;
  double kappa = 0.0;
  double a0 = 0, a1 = 0, a2 = 0, b1 = 0, b2 = 0;
  bool has_b_terms = false;
  bool constant_profile = false;  // every phi coefficient vanished
  bool coupled = false;
  std::optional<ParamPoly> v_over_u;  // coupled: V = v_over_u * U, e.g. -k
  double v_factor = 0.0;              // v_over_u evaluated at the parameters
};

/// Binds a candidate set to numbers.  Throws CaseMismatch on a sign-region
/// violation, ComplexWaveSpeed when kappa^2 < 0, and std::invalid_argument
/// when C, D, or lambda is zero.  Degenerate sets leave kappa unconstrained
/// and require kappa_override.
ClosedFormSolution assemble_solution(
    const CandidateSet& set, PhiCaseKind kind, double C, double D,
    const ParamValues& params, int kappa_sign, FractionalOrder order,
    const std::optional<ParamPoly>& v_over_u = std::nullopt,
    std::optional<double> kappa_override = std::nullopt);

/// Evaluates the bound solution at scalar type S.  All coefficients are
/// re-derived from the exact candidate set in S arithmetic, so the kernel is
/// self-consistent to S precision (which the quad verifier relies on).
template <class S>
class SolutionKernel {
 public:
  explicit SolutionKernel(const ClosedFormSolution& sol)
      : kind_(sol.kind),
        alpha_(sol.order.alpha),
        C_(sol.C),
        D_(sol.D),
        coupled_(sol.coupled),
        constant_(sol.constant_profile),
        has_b_(sol.has_b_terms) {
    std::array<S, kSymbolCount> vals{};
    vals[int(Sym::lambda)] = lambda_ = S(sol.params.lambda);
    vals[int(Sym::mu)] = mu_ = S(sol.params.mu);
    vals[int(Sym::beta)] = S(sol.params.beta);
    vals[int(Sym::gamma)] = S(sol.params.gamma);
    if (sol.set.kappa_squared.depends_on(Sym::k)) {
      kappa_ = S(sol.kappa);  // degenerate set: wave speed supplied directly
    } else {
      const S ks = sol.set.kappa_squared.eval(vals);
      if (ks < S(0)) {
        throw ComplexWaveSpeed("kappa^2 evaluated negative");
      }
      kappa_ = S(sol.kappa_sign) * real_sqrt(ks);
    }
    vals[int(Sym::k)] = kappa_;
    a0_ = sol.set.value(Sym::a0).eval(vals);
    a1_ = sol.set.value(Sym::a1).eval(vals);
    a2_ = sol.set.value(Sym::a2).eval(vals);
    b1_ = sol.set.value(Sym::b1).eval(vals);
    b2_ = sol.set.value(Sym::b2).eval(vals);
    v_factor_ = sol.v_over_u ? sol.v_over_u->eval(vals) : S(0);
  }

  S xi(S x, S t) const { return x + kappa_ * real_pow(t, S(alpha_)) / S(alpha_); }

  S u_of_xi(S xi_value) const {
    if (constant_) return a0_;
    const PhiValue<S> phi = phi_eval(kind_, lambda_, mu_, C_, D_, xi_value);
    S u = a0_ + phi.value * (a1_ + phi.value * a2_);
    if (has_b_) {
      if (phi.near_zero) {
        throw PoleOfInverse("phi vanished under inverse powers near xi = " +
                            std::to_string(to_double(xi_value)));
      }
      const S inv = S(1) / phi.value;
      u += inv * (b1_ + inv * b2_);
    }
    return u;
  }

  S u(S x, S t) const { return u_of_xi(xi(x, t)); }
  S v(S x, S t) const { return v_factor_ * u(x, t); }

  S kappa() const { return kappa_; }
  S v_factor() const { return v_factor_; }
  double alpha() const { return alpha_; }
  bool coupled() const { return coupled_; }

 private:
  PhiCaseKind kind_;
  double alpha_;
  S lambda_{}, mu_{}, C_{}, D_{};
  S kappa_{}, a0_{}, a1_{}, a2_{}, b1_{}, b2_{}, v_factor_{};
  bool coupled_, constant_, has_b_;
};

double evaluate_u(const ClosedFormSolution& sol, double x, double t);
double evaluate_v(const ClosedFormSolution& sol, double x, double t);

/// All poles of the profile inside [xi_lo, xi_hi]: denominator zeros of phi
/// always, plus phi zeros when inverse powers are present.  Constant
/// profiles have none.
std::vector<double> singularities(const ClosedFormSolution& sol, double xi_lo,
                                  double xi_hi);

}  // namespace gg2x
