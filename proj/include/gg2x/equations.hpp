#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gg2x/method_engine.hpp"
#include "gg2x/solution_families.hpp"

namespace gg2x {

/// The two supported model equations.
enum class EquationId { boussinesq, coupled };

std::string equation_name(EquationId id);
std::optional<EquationId> equation_from_name(std::string_view name);
bool is_coupled(EquationId id);

/// Reduced traveling-wave ODE of the family (see reduction.hpp).
ReducedODE reduced_ode(EquationId id);

/// For the coupled system, the exact factor V/U (namely -k); nullopt for the
/// single equation.
std::optional<ParamPoly> v_coupling(EquationId id);

/// Coefficient system of the family under the M = 2 ansatz.
CoefficientSystem coefficient_system(EquationId id);

/// All exact solution sets of the family, labeled Set1..Set6 in the
/// published order (plus Degenerate1/Degenerate2 on request), each verified
/// against the full coefficient system.
std::vector<CandidateSet> solution_sets(EquationId id,
                                        bool include_degenerate = false);

/// Set lookup by label; throws std::invalid_argument for unknown labels.
CandidateSet find_set(EquationId id, std::string_view label);

/// One published figure: equation, set, phi case and parameter bindings.
struct FigurePreset {
  std::string id;  // "1a".."1c", "2a".."2c"
  EquationId equation;
  std::string set_label;
  PhiCaseKind kind;
  ParamValues params;
  double C;
  double D;
  double alpha;
};

const std::vector<FigurePreset>& figure_presets();
const FigurePreset& find_figure_preset(std::string_view id);

}  // namespace gg2x
