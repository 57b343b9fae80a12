#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "gg2x/equations.hpp"
#include "gg2x/verifier.hpp"

namespace gg2x::cmd {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct DeriveOptions {
  EquationId equation = EquationId::boussinesq;
  bool json = false;
};
int derive(const DeriveOptions& options, std::ostream& out);

struct SolveOptions {
  EquationId equation = EquationId::boussinesq;
  bool include_degenerate = false;
  bool json = false;
};
int solve(const SolveOptions& options, std::ostream& out);

/// Everything needed to turn a labeled set into numbers.
struct SolutionBinding {
  EquationId equation = EquationId::boussinesq;
  std::string set_label = "Set1";
  PhiCaseKind kind = PhiCaseKind::trig;
  ParamValues params;
  double C = 1.0;
  double D = 1.0;
  double alpha = 0.5;
  int kappa_sign = +1;
};
ClosedFormSolution bind_solution(const SolutionBinding& binding);

struct GridOptions {
  double x0 = -3.0, x1 = 3.0;
  int nx = 61;
  double t0 = 0.1, t1 = 2.0;
  int nt = 41;
  GridSpec make() const { return GridSpec(x0, x1, nx, t0, t1, nt); }
};

struct VerifyOptions {
  SolutionBinding binding;
  GridOptions grid;
  double fd_step = 1e-4;
  double mask_margin = kDefaultMaskMargin;
  double tolerance = 1e-5;
  bool json = false;
};
int verify(const VerifyOptions& options, std::ostream& out);

struct EvalOptions {
  SolutionBinding binding;
  GridOptions grid;
  std::string out_path;  // empty: CSV to `out`
};
int eval(const EvalOptions& options, std::ostream& out);

struct FigureDataOptions {
  std::string figure_id = "1a";
  GridOptions grid;
  int kappa_sign = +1;
  std::string out_path;  // empty: CSV to `out`
};
int figure_data(const FigureDataOptions& options, std::ostream& out);

}  // namespace gg2x::cmd
