#include "gg2x/method_engine.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "gg2x/errors.hpp"

namespace gg2x {

namespace {

const ParamPoly kZero{};
const ParamPoly kOne = ParamPoly::constant(Rational(1));

ParamPoly sym(Sym s, int exponent = 1) { return ParamPoly::variable(s, exponent); }

}  // namespace

PhiLaurent build_ansatz(int balance_order) {
  if (balance_order != 1 && balance_order != 2) {
    throw UnsupportedForm("ansatz order " + std::to_string(balance_order) +
                          " is outside the fixed symbol set (need 1 or 2)");
  }
  PhiLaurent u = PhiLaurent::constant(sym(Sym::a0));
  u += PhiLaurent::term(1, sym(Sym::a1));
  u += PhiLaurent::term(-1, sym(Sym::b1));
  if (balance_order == 2) {
    u += PhiLaurent::term(2, sym(Sym::a2));
    u += PhiLaurent::term(-2, sym(Sym::b2));
  }
  return u;
}

CoefficientSystem::CoefficientSystem(std::map<int, ParamPoly> equations)
    : equations_(std::move(equations)) {
  for (auto it = equations_.begin(); it != equations_.end();) {
    it = it->second.is_zero() ? equations_.erase(it) : std::next(it);
  }
  if (equations_.empty()) {
    throw std::invalid_argument("coefficient system has no equations");
  }
}

ParamPoly CoefficientSystem::equation(int power) const {
  const auto it = equations_.find(power);
  return it == equations_.end() ? kZero : it->second;
}

int CoefficientSystem::min_power() const { return equations_.begin()->first; }
int CoefficientSystem::max_power() const { return equations_.rbegin()->first; }

std::string CoefficientSystem::str() const {
  std::ostringstream out;
  for (auto it = equations_.rbegin(); it != equations_.rend(); ++it) {
    out << "phi^" << it->first << ": " << it->second.str() << " = 0\n";
  }
  return out.str();
}

CoefficientSystem derive_coefficient_system(const ReducedODE& ode,
                                            const PhiLaurent& ansatz) {
  const PhiLaurent expanded = ansatz.derivative(2).scaled(ode.c2) +
                              ansatz.scaled(ode.c1) +
                              (ansatz * ansatz).scaled(ode.c0);
  return CoefficientSystem(expanded.coeffs());
}

std::string branch_name(BranchKind branch) {
  switch (branch) {
    case BranchKind::high_only:
      return "high";
    case BranchKind::low_only:
      return "low";
    case BranchKind::both:
      return "both";
  }
  return "?";
}

ParamPoly CandidateSet::value(Sym s) const {
  const auto it = values.find(s);
  return it == values.end() ? kZero : it->second;
}

std::string CandidateSet::str() const {
  std::ostringstream out;
  out << label << ": kappa^2 = " << kappa_squared.str();
  for (Sym s : kAnsatzUnknowns) {
    out << ", " << symbol_name(s) << " = " << value(s).str();
  }
  if (degenerate) out << "  [degenerate]";
  return out.str();
}

namespace {

/// Nonzero root of a monic-style quadratic eq = L*s + Q*s^2 in the unknown s;
/// requires a single-term quadratic coefficient so the division stays exact.
ParamPoly nonzero_corner_root(const ParamPoly& corner_equation, Sym unknown) {
  const ParamPoly linear = corner_equation.coefficient_of(unknown, 1);
  const ParamPoly quadratic = corner_equation.coefficient_of(unknown, 2);
  if (quadratic.is_zero() || !quadratic.is_monomial()) {
    throw UnsupportedForm("corner equation is not quadratic in " +
                          std::string(symbol_name(unknown)));
  }
  return (-linear).divided_by_monomial(quadratic);
}

ParamPoly substitute_unknowns(const ParamPoly& poly,
                              const std::map<Sym, ParamPoly>& values) {
  ParamPoly out = poly;
  for (const auto& [s, value] : values) out = out.substitute(s, value);
  return out;
}

/// Solves eq = 0 as a quadratic in kappa^2 by the exact monomial square root
/// of the discriminant.  Returns the roots in canonical order: the quadratic
/// is normalised so its kappa^4 coefficient has a positive rational factor,
/// and the +sqrt branch comes first.
std::vector<ParamPoly> kappa_squared_roots(const ParamPoly& eq) {
  ParamPoly a = eq.coefficient_of(Sym::k, 4);
  ParamPoly b = eq.coefficient_of(Sym::k, 2);
  ParamPoly c = eq.coefficient_of(Sym::k, 0);
  const ParamPoly rebuilt = a * sym(Sym::k, 4) + b * sym(Sym::k, 2) + c;
  if (!(rebuilt - eq).is_zero()) {
    throw UnsupportedForm("closure equation has odd powers of k");
  }
  if (a.is_zero()) {
    if (b.is_zero() || !b.is_monomial()) {
      throw UnsupportedForm("closure equation does not determine kappa^2");
    }
    return {(-c).divided_by_monomial(b)};
  }
  if (!a.is_monomial()) {
    throw UnsupportedForm("kappa^4 coefficient is not a single term");
  }
  if (a.terms().begin()->second < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  const ParamPoly discriminant = b * b - a * c * ParamPoly::constant(Rational(4));
  const ParamPoly two_a = a * ParamPoly::constant(Rational(2));
  if (discriminant.is_zero()) {
    return {(-b).divided_by_monomial(two_a)};
  }
  const auto root = discriminant.monomial_sqrt();
  if (!root) {
    throw UnsupportedForm(
        "wave-speed discriminant is not a perfect monomial square: " +
        discriminant.str());
  }
  return {(*root - b).divided_by_monomial(two_a),
          (-b - *root).divided_by_monomial(two_a)};
}

}  // namespace

ParamPoly substitute_candidate(const ParamPoly& poly,
                               const CandidateSet& candidate) {
  ParamPoly out = poly;
  for (Sym s : kAnsatzUnknowns) out = out.substitute(s, candidate.value(s));
  return out.substitute_squares(Sym::k, candidate.kappa_squared);
}

CandidateVerification verify_candidate(const CoefficientSystem& system,
                                       const CandidateSet& candidate) {
  CandidateVerification result;
  result.exact = true;
  for (const auto& [power, equation] : system.equations()) {
    ParamPoly residual = substitute_candidate(equation, candidate);
    if (!residual.is_zero()) {
      result.exact = false;
      result.residuals.emplace(power, std::move(residual));
    }
  }
  return result;
}

std::vector<CandidateSet> solve_quadratic_form(const CoefficientSystem& system,
                                               bool include_degenerate) {
  if (system.max_power() != 4 || system.min_power() != -4) {
    throw UnsupportedForm(
        "structured elimination expects the M = 2 system with phi^±4 corners");
  }

  // Corner quadratics: the only a2 / b2 values compatible with phi^{±4}.
  const ParamPoly a2_root = nonzero_corner_root(system.equation(4), Sym::a2);
  const ParamPoly b2_root = nonzero_corner_root(system.equation(-4), Sym::b2);

  std::vector<CandidateSet> out;
  const std::array<BranchKind, 3> branch_order = {
      BranchKind::both, BranchKind::high_only, BranchKind::low_only};

  for (BranchKind branch : branch_order) {
    std::map<Sym, ParamPoly> values;
    values[Sym::a2] = branch == BranchKind::low_only ? kZero : a2_root;
    values[Sym::b2] = branch == BranchKind::high_only ? kZero : b2_root;

    // phi^{±3} reduce to (nonzero coefficient) * a1 resp. * b1, forcing zeros.
    for (const auto& [power, unknown] :
         {std::pair{3, Sym::a1}, std::pair{-3, Sym::b1}}) {
      const ParamPoly eq = substitute_unknowns(system.equation(power), values);
      const ParamPoly linear_part = eq.coefficient_of(unknown, 1);
      const bool pure_linear =
          (eq - linear_part * sym(unknown)).is_zero() && !linear_part.is_zero();
      if (!pure_linear) {
        throw UnsupportedForm("phi^" + std::to_string(power) +
                              " equation does not force " +
                              std::string(symbol_name(unknown)) + " = 0");
      }
      values[unknown] = kZero;
    }

    // phi^{+2} (or phi^{-2} on the low branch) is linear in a0.
    ParamPoly a0_constraint;
    for (int power : {2, -2}) {
      a0_constraint = substitute_unknowns(system.equation(power), values);
      if (!a0_constraint.is_zero()) break;
    }
    const ParamPoly a0_linear = a0_constraint.coefficient_of(Sym::a0, 1);
    if (a0_linear.is_zero() || !a0_linear.is_monomial()) {
      throw UnsupportedForm("phi^±2 equation is not linear in a0");
    }
    const ParamPoly a0_expr =
        (-a0_constraint.coefficient_of(Sym::a0, 0)).divided_by_monomial(a0_linear);
    values[Sym::a0] = a0_expr;

    // The phi^0 closure is now a quadratic in kappa^2 alone.
    const ParamPoly closure = substitute_unknowns(system.equation(0), values);
    const auto roots = kappa_squared_roots(closure);

    for (std::size_t i = 0; i < roots.size(); ++i) {
      CandidateSet candidate;
      candidate.branch = branch;
      candidate.root_index = static_cast<int>(i);
      candidate.label = branch_name(branch) + (i == 0 ? "+" : "-");
      candidate.kappa_squared = roots[i];
      for (Sym s : kAnsatzUnknowns) {
        candidate.values[s] = values[s].substitute_squares(Sym::k, roots[i]);
      }
      if (verify_candidate(system, candidate).exact) {
        out.push_back(std::move(candidate));
      }
    }
  }

  if (include_degenerate) {
    // With a1 = a2 = b1 = b2 = 0 only phi^0 survives: c1*a0 + c0*a0^2 = 0.
    std::map<Sym, ParamPoly> zeros;
    for (Sym s : {Sym::a1, Sym::a2, Sym::b1, Sym::b2}) zeros[s] = kZero;
    ParamPoly residual_eq = substitute_unknowns(system.equation(0), zeros);
    const ParamPoly quadratic = residual_eq.coefficient_of(Sym::a0, 2);
    const ParamPoly linear = residual_eq.coefficient_of(Sym::a0, 1);
    if (!quadratic.is_monomial()) {
      throw UnsupportedForm("degenerate closure is not quadratic in a0");
    }
    const std::array<ParamPoly, 2> constants = {
        kZero, (-linear).divided_by_monomial(quadratic)};
    for (std::size_t i = 0; i < constants.size(); ++i) {
      CandidateSet candidate;
      candidate.degenerate = true;
      candidate.root_index = static_cast<int>(i);
      candidate.label = "const" + std::to_string(i);
      candidate.kappa_squared = sym(Sym::k, 2);  // wave speed unconstrained
      candidate.values = zeros;
      candidate.values[Sym::a0] = constants[i];
      candidate.branch = BranchKind::both;
      if (verify_candidate(system, candidate).exact) {
        out.push_back(std::move(candidate));
      }
    }
  }

  return out;
}

}  // namespace gg2x
