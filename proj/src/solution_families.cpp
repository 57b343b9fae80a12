#include "gg2x/solution_families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gg2x {

std::string phi_case_name(PhiCaseKind kind) {
  switch (kind) {
    case PhiCaseKind::trig:
      return "trig";
    case PhiCaseKind::hyperbolic:
      return "hyp";
    case PhiCaseKind::rational:
      return "rational";
  }
  return "?";
}

std::optional<PhiCaseKind> phi_case_from_name(std::string_view name) {
  if (name == "trig") return PhiCaseKind::trig;
  if (name == "hyp" || name == "hyperbolic") return PhiCaseKind::hyperbolic;
  if (name == "rational") return PhiCaseKind::rational;
  return std::nullopt;
}

void check_case_admissible(PhiCaseKind kind, double lambda, double mu) {
  if (lambda == 0.0) {
    throw std::invalid_argument("lambda must be nonzero");
  }
  const double product = lambda * mu;
  switch (kind) {
    case PhiCaseKind::trig:
      if (!(product > 0)) {
        throw CaseMismatch("trig case needs lambda*mu > 0");
      }
      return;
    case PhiCaseKind::hyperbolic:
      if (!(product < 0)) {
        throw CaseMismatch("hyperbolic case needs lambda*mu < 0");
      }
      return;
    case PhiCaseKind::rational:
      if (mu != 0.0) {
        throw CaseMismatch("rational case needs mu = 0");
      }
      return;
  }
}

double phi_value(PhiCaseKind kind, double lambda, double mu, double C, double D,
                 double xi) {
  check_case_admissible(kind, lambda, mu);
  if (C == 0.0 || D == 0.0) {
    throw std::invalid_argument("C and D must both be nonzero");
  }
  return phi_eval(kind, lambda, mu, C, D, xi).value;
}

ClosedFormSolution assemble_solution(const CandidateSet& set, PhiCaseKind kind,
                                     double C, double D,
                                     const ParamValues& params, int kappa_sign,
                                     FractionalOrder order,
                                     const std::optional<ParamPoly>& v_over_u,
                                     std::optional<double> kappa_override) {
  check_case_admissible(kind, params.lambda, params.mu);
  if (C == 0.0 || D == 0.0) {
    throw std::invalid_argument("C and D must both be nonzero");
  }
  if (kappa_sign != +1 && kappa_sign != -1) {
    throw std::invalid_argument("kappa sign must be +1 or -1");
  }

  ClosedFormSolution sol;
  sol.set = set;
  sol.kind = kind;
  sol.C = C;
  sol.D = D;
  sol.params = params;
  sol.order = order;
  sol.kappa_sign = kappa_sign;
  sol.coupled = v_over_u.has_value();
  sol.v_over_u = v_over_u;

  std::array<double, kSymbolCount> vals{};
  vals[int(Sym::lambda)] = params.lambda;
  vals[int(Sym::mu)] = params.mu;
  vals[int(Sym::beta)] = params.beta;
  vals[int(Sym::gamma)] = params.gamma;

  if (set.kappa_squared.depends_on(Sym::k)) {
    // Degenerate constant set: the system leaves kappa free.
    if (!kappa_override) {
      throw UnsupportedForm("set '" + set.label +
                            "' leaves kappa unconstrained; supply a value");
    }
    sol.kappa = *kappa_override;
    sol.kappa_squared = sol.kappa * sol.kappa;
  } else {
    sol.kappa_squared = set.kappa_squared.eval(vals);
    if (sol.kappa_squared < 0) {
      throw ComplexWaveSpeed("kappa^2 = " + std::to_string(sol.kappa_squared) +
                             " < 0 for set '" + set.label + "'");
    }
    sol.kappa = kappa_sign * std::sqrt(sol.kappa_squared);
  }

  vals[int(Sym::k)] = sol.kappa;
  sol.a0 = set.value(Sym::a0).eval(vals);
  sol.a1 = set.value(Sym::a1).eval(vals);
  sol.a2 = set.value(Sym::a2).eval(vals);
  sol.b1 = set.value(Sym::b1).eval(vals);
  sol.b2 = set.value(Sym::b2).eval(vals);
  sol.has_b_terms = sol.b1 != 0.0 || sol.b2 != 0.0;
  sol.constant_profile =
      sol.a1 == 0.0 && sol.a2 == 0.0 && sol.b1 == 0.0 && sol.b2 == 0.0;
  if (v_over_u) sol.v_factor = v_over_u->eval(vals);
  return sol;
}

double evaluate_u(const ClosedFormSolution& sol, double x, double t) {
  return SolutionKernel<double>(sol).u(x, t);
}

double evaluate_v(const ClosedFormSolution& sol, double x, double t) {
  if (!sol.coupled) {
    throw std::logic_error("v requested for a single-field solution");
  }
  return SolutionKernel<double>(sol).v(x, t);
}

namespace {

/// Appends all points base + n*period falling inside [lo, hi].
void append_lattice(std::vector<double>& out, double base, double period,
                    double lo, double hi) {
  const long n_lo = static_cast<long>(std::floor((lo - base) / period)) - 1;
  const long n_hi = static_cast<long>(std::ceil((hi - base) / period)) + 1;
  for (long n = n_lo; n <= n_hi; ++n) {
    const double p = base + double(n) * period;
    if (p >= lo && p <= hi) out.push_back(p);
  }
}

}  // namespace

std::vector<double> singularities(const ClosedFormSolution& sol, double xi_lo,
                                  double xi_hi) {
  std::vector<double> points;
  if (sol.constant_profile || xi_hi < xi_lo) return points;
  const double lambda = sol.params.lambda;
  const double mu = sol.params.mu;
  const double C = sol.C;
  const double D = sol.D;

  switch (sol.kind) {
    case PhiCaseKind::trig: {
      const double w = std::sqrt(lambda * mu);
      const double period = M_PI / w;
      // Denominator D cos(w xi) - C sin(w xi): tan(w xi) = D/C.
      append_lattice(points, std::atan2(D, C) / w, period, xi_lo, xi_hi);
      if (sol.has_b_terms) {
        // Numerator C cos + D sin: tan(w xi) = -C/D.
        append_lattice(points, std::atan2(-C, D) / w, period, xi_lo, xi_hi);
      }
      break;
    }
    case PhiCaseKind::hyperbolic: {
      const double w = std::sqrt(-lambda * mu);
      if (D / C > 0) {
        points.push_back(std::log(D / C) / (2 * w));
      }
      if (sol.has_b_terms && -D / C > 0) {
        points.push_back(std::log(-D / C) / (2 * w));
      }
      break;
    }
    case PhiCaseKind::rational: {
      // Denominator C*xi + D; phi itself never vanishes at finite xi.
      points.push_back(-D / C);
      break;
    }
  }

  std::erase_if(points, [&](double p) { return p < xi_lo || p > xi_hi; });
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace gg2x
