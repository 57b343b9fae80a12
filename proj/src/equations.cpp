#include "gg2x/equations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gg2x {

std::string equation_name(EquationId id) {
  return id == EquationId::boussinesq ? "boussinesq" : "coupled";
}

std::optional<EquationId> equation_from_name(std::string_view name) {
  if (name == "boussinesq") return EquationId::boussinesq;
  if (name == "coupled") return EquationId::coupled;
  return std::nullopt;
}

bool is_coupled(EquationId id) { return id == EquationId::coupled; }

ReducedODE reduced_ode(EquationId id) {
  return id == EquationId::boussinesq ? reduce_boussinesq()
                                      : reduce_coupled().ode;
}

std::optional<ParamPoly> v_coupling(EquationId id) {
  if (id == EquationId::boussinesq) return std::nullopt;
  return reduce_coupled().v_over_u;
}

CoefficientSystem coefficient_system(EquationId id) {
  return derive_coefficient_system(reduced_ode(id), build_ansatz(2));
}

namespace {

/// Published label of each solver branch, per family.  The solver emits
/// branches in a fixed (corner pattern, sqrt sign) order; the two families
/// publish them in different sequences.
std::string published_label(EquationId id, const CandidateSet& set) {
  if (set.degenerate) {
    return "Degenerate" + std::to_string(set.root_index + 1);
  }
  using Key = std::pair<BranchKind, int>;
  static const std::map<Key, std::string> boussinesq_labels = {
      {{BranchKind::both, 0}, "Set1"},     {{BranchKind::high_only, 0}, "Set2"},
      {{BranchKind::low_only, 0}, "Set3"}, {{BranchKind::high_only, 1}, "Set4"},
      {{BranchKind::low_only, 1}, "Set5"}, {{BranchKind::both, 1}, "Set6"},
  };
  static const std::map<Key, std::string> coupled_labels = {
      {{BranchKind::high_only, 0}, "Set1"}, {{BranchKind::low_only, 0}, "Set2"},
      {{BranchKind::high_only, 1}, "Set3"}, {{BranchKind::low_only, 1}, "Set4"},
      {{BranchKind::both, 0}, "Set5"},      {{BranchKind::both, 1}, "Set6"},
  };
  const auto& table = id == EquationId::boussinesq ? boussinesq_labels
                                                   : coupled_labels;
  const auto it = table.find({set.branch, set.root_index});
  if (it == table.end()) {
    throw std::logic_error("unlabeled solver branch " + set.label);
  }
  return it->second;
}

}  // namespace

std::vector<CandidateSet> solution_sets(EquationId id,
                                        bool include_degenerate) {
  std::vector<CandidateSet> sets =
      solve_quadratic_form(coefficient_system(id), include_degenerate);
  for (CandidateSet& set : sets) set.label = published_label(id, set);
  std::sort(sets.begin(), sets.end(),
            [](const CandidateSet& a, const CandidateSet& b) {
              return std::tie(a.degenerate, a.label) <
                     std::tie(b.degenerate, b.label);
            });
  return sets;
}

CandidateSet find_set(EquationId id, std::string_view label) {
  for (CandidateSet& set : solution_sets(id, true)) {
    if (set.label == label) return std::move(set);
  }
  throw std::invalid_argument("unknown solution set '" + std::string(label) +
                              "' for equation " + equation_name(id));
}

const std::vector<FigurePreset>& figure_presets() {
  // Parameter bindings of the six published surface plots; alpha = 1/2 for
  // all of them.
  static const std::vector<FigurePreset> presets = {
      {"1a", EquationId::boussinesq, "Set2", PhiCaseKind::trig,
       ParamValues{1.0, 1.0, 1.0, 1.0}, 1.0, 1.0, 0.5},
      {"1b", EquationId::boussinesq, "Set2", PhiCaseKind::hyperbolic,
       ParamValues{0.5, -0.3, 1.0, 1.0}, 1.0, 1.0, 0.5},
      {"1c", EquationId::boussinesq, "Set2", PhiCaseKind::rational,
       ParamValues{1.0, 0.0, 1.0, 1.0}, 1.0, 1.0, 0.5},
      {"2a", EquationId::coupled, "Set3", PhiCaseKind::trig,
       ParamValues{1.0, 1.0, 1.0, -1.0}, 1.0, 1.0, 0.5},
      {"2b", EquationId::coupled, "Set3", PhiCaseKind::hyperbolic,
       ParamValues{0.5, -0.3, 1.0, 1.0}, 1.0, 1.0, 0.5},
      {"2c", EquationId::coupled, "Set3", PhiCaseKind::rational,
       ParamValues{1.0, 0.0, 1.0, -1.0}, 1.0, 1.0, 0.5},
  };
  return presets;
}

const FigurePreset& find_figure_preset(std::string_view id) {
  for (const FigurePreset& preset : figure_presets()) {
    if (preset.id == id) return preset;
  }
  throw std::invalid_argument("unknown figure id '" + std::string(id) +
                              "' (expected 1a..1c, 2a..2c)");
}

}  // namespace gg2x
