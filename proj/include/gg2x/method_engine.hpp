#pragma once

#include <map>
#include <string>
#include <vector>

#include "gg2x/phi_laurent.hpp"
#include "gg2x/reduction.hpp"

namespace gg2x {

/// Full two-sided ansatz of order M:
///   U = a0 + sum_{i=1..M} (a_i phi^i + b_i phi^{-i}).
/// Only M in {1, 2} is expressible over the fixed symbol set.
PhiLaurent build_ansatz(int balance_order);

/// The polynomial system obtained by substituting the ansatz into a reduced
/// ODE and collecting powers of phi: one ParamPoly equation per power.
class CoefficientSystem {
 public:
  explicit CoefficientSystem(std::map<int, ParamPoly> equations);

  const std::map<int, ParamPoly>& equations() const { return equations_; }
  ParamPoly equation(int power) const;  // zero when the power is absent
  int min_power() const;
  int max_power() const;

  std::string str() const;

 private:
  std::map<int, ParamPoly> equations_;
};

CoefficientSystem derive_coefficient_system(const ReducedODE& ode,
                                            const PhiLaurent& ansatz);

/// Which of the corner unknowns a2 / b2 a candidate keeps nonzero.
enum class BranchKind { high_only, low_only, both };

std::string branch_name(BranchKind branch);

/// One exact solution set of the coefficient system: closed forms for the
/// ansatz unknowns plus the wave-speed constraint kappa^2 = kappa_squared.
struct CandidateSet {
  std::string label;                // assigned per equation family
  ParamPoly kappa_squared;          // free of k
  std::map<Sym, ParamPoly> values;  // a0, a1, a2, b1, b2, free of k
  BranchKind branch = BranchKind::both;
  int root_index = 0;     // 0: +sqrt branch of the kappa^2 quadratic
  bool degenerate = false;  // constant-profile set (a1=a2=b1=b2=0)

  ParamPoly value(Sym s) const;
  std::string str() const;
};

/// Structured elimination for the canonical quadratic shape
/// c2 U'' + c1 U + c0 U^2 = 0 under the M = 2 ansatz:
///   phi^{+4}/phi^{-4} give the corner quadratics fixing a2 and b2,
///   phi^{+3}/phi^{-3} force a1 = b1 = 0,
///   phi^{+2} (or phi^{-2}) is linear in a0,
///   phi^0 closes with a quadratic in kappa^2 solved by the exact
///   discriminant square root.
/// Non-degenerate sets come first (in deterministic branch/root order),
/// followed by the degenerate constant profiles unless suppressed.
std::vector<CandidateSet> solve_quadratic_form(const CoefficientSystem& system,
                                               bool include_degenerate = true);

/// Residuals of one candidate against every equation of the system.
struct CandidateVerification {
  bool exact = false;
  std::map<int, ParamPoly> residuals;  // only nonzero entries
};

CandidateVerification verify_candidate(const CoefficientSystem& system,
                                       const CandidateSet& candidate);

/// Substitutes a candidate's unknown values (and kappa^2, for even powers of
/// k) into an arbitrary ring element.
ParamPoly substitute_candidate(const ParamPoly& poly,
                               const CandidateSet& candidate);

}  // namespace gg2x
