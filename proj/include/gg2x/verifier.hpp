#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gg2x/method_engine.hpp"
#include "gg2x/solution_families.hpp"

namespace gg2x {

/// Uniform space-time verification grid; both endpoints included.
/// t0 must be positive (conformable derivatives live on t > 0) and each axis
/// needs at least five points to host the interior stencils.
struct GridSpec {
  GridSpec(double x0, double x1, int nx, double t0, double t1, int nt);

  double x(int i) const { return x0 + i * (x1 - x0) / (nx - 1); }
  double t(int j) const { return t0 + j * (t1 - t0) / (nt - 1); }

  double x0, x1;
  int nx;
  double t0, t1;
  int nt;
};

/// Residual statistics over the unmasked cells.  max_rel normalises each
/// cell's residual by the largest participating term, so an exact solution
/// reports ~0 even where the terms themselves are large.
struct ResidualReport {
  double max_abs = 0.0;
  double max_rel = 0.0;
  long masked_cells = 0;
  long evaluated_cells = 0;
  std::map<std::string, double> term_max;  // largest |term| seen, per term

  std::string to_json(int indent = -1) const;
};

/// Margin (in xi units) around each pole inside which cells are masked out
/// of the residual statistics.  Calibrated so the fourth-derivative stencil
/// never straddles a pole's steep flank at the default fd step.
inline constexpr double kDefaultMaskMargin = 0.4;

/// Exact check: substitutes a candidate into the coefficient system obtained
/// from the given reduced ODE (M = 2 ansatz) and returns the residuals.
CandidateVerification ode_residual_symbolic(const ReducedODE& ode,
                                            const CandidateSet& candidate);

/// Finite-difference residual of the original PDE (single Boussinesq when
/// the solution is not coupled, the coupled system otherwise), computed in
/// quad precision.  The conformable pieces use
///   D^alpha f ~ t^{1-alpha} * central(f; h),
///   D^{2alpha} f = D^alpha(D^alpha f) with inner step fd_step/10.
ResidualReport pde_residual_numeric(const ClosedFormSolution& sol,
                                    const GridSpec& grid, double fd_step,
                                    double mask_margin = kDefaultMaskMargin);

/// Max deviation |t^{1-alpha} u_t - kappa U'(xi)| over the sample points:
/// both sides of the traveling-wave chain rule, each by central differences.
double chain_rule_crosscheck(const ClosedFormSolution& sol,
                             const std::vector<std::pair<double, double>>& xt,
                             double fd_step);

}  // namespace gg2x
