#include "gg2x/commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "gg2x/errors.hpp"

namespace gg2x::cmd {

namespace {

using nlohmann::json;

std::string pde_text(EquationId id) {
  return id == EquationId::boussinesq
             ? "D_t^{2a} u - u_xx - (u^2)_xx + u_xxxx = 0"
             : "D_t^a u + v_x = 0;  D_t^a v + beta (u^2)_x - gamma u_xxx = 0";
}

/// Shortest round-trip decimal form.
std::string num(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

json set_to_json(const CandidateSet& set) {
  json values;
  for (Sym s : kAnsatzUnknowns) {
    values[std::string(symbol_name(s))] = set.value(s).str();
  }
  return json{{"label", set.label},
              {"kappa_squared", set.kappa_squared.str()},
              {"values", values},
              {"degenerate", set.degenerate}};
}

std::string ansatz_text(const PhiLaurent& ansatz) {
  std::ostringstream out;
  out << "U =";
  bool first = true;
  for (auto it = ansatz.coeffs().rbegin(); it != ansatz.coeffs().rend(); ++it) {
    out << (first ? " " : " + ") << it->second.str();
    if (it->first != 0) out << "*phi^" << it->first;
    first = false;
  }
  return out.str();
}

}  // namespace

int derive(const DeriveOptions& options, std::ostream& out) {
  const ReducedODE ode = reduced_ode(options.equation);
  // The reduced shape balances U'' against U^2: M + 2 = 2M.
  const int balance = balancing_number(2, 2);
  const PhiLaurent ansatz = build_ansatz(balance);
  const CoefficientSystem system = derive_coefficient_system(ode, ansatz);

  if (options.json) {
    json j;
    j["equation"] = equation_name(options.equation);
    j["pde"] = pde_text(options.equation);
    j["reduced_ode"] = ode.str();
    j["integrations"] = ode.provenance.integrations;
    j["balance"] = balance;
    j["ansatz"] = ansatz_text(ansatz);
    json system_json;
    for (const auto& [power, eq] : system.equations()) {
      system_json["phi^" + std::to_string(power)] = eq.str();
    }
    j["system"] = system_json;
    if (const auto coupling = v_coupling(options.equation)) {
      j["v_over_u"] = coupling->str();
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  out << "equation: " << equation_name(options.equation) << '\n'
      << "  " << pde_text(options.equation) << '\n'
      << "reduced ODE (xi = x + k*t^alpha/alpha, " << ode.provenance.integrations
      << " integration(s), constants = 0):\n"
      << "  " << ode.str() << '\n';
  if (const auto coupling = v_coupling(options.equation)) {
    out << "  V = (" << coupling->str() << ")*U\n";
  }
  out << "balance: M = " << balance << '\n'
      << "ansatz: " << ansatz_text(ansatz) << '\n'
      << "coefficient system:\n"
      << system.str();
  return kExitOk;
}

int solve(const SolveOptions& options, std::ostream& out) {
  const CoefficientSystem system = coefficient_system(options.equation);
  const auto sets =
      solution_sets(options.equation, options.include_degenerate);

  bool all_exact = true;
  json sets_json = json::array();
  for (const CandidateSet& set : sets) {
    const bool exact = verify_candidate(system, set).exact;
    all_exact = all_exact && exact;
    if (options.json) {
      json j = set_to_json(set);
      j["verified"] = exact;
      sets_json.push_back(std::move(j));
    } else {
      out << set.str() << (exact ? "" : "  [RESIDUAL != 0]") << '\n';
    }
  }
  if (options.json) {
    out << json{{"equation", equation_name(options.equation)},
                {"sets", sets_json},
                {"all_verified", all_exact}}
               .dump(2)
        << '\n';
  }
  return all_exact ? kExitOk : kExitVerificationFailed;
}

ClosedFormSolution bind_solution(const SolutionBinding& binding) {
  const CandidateSet set = find_set(binding.equation, binding.set_label);
  return assemble_solution(set, binding.kind, binding.C, binding.D,
                           binding.params, binding.kappa_sign,
                           FractionalOrder(binding.alpha),
                           v_coupling(binding.equation));
}

int verify(const VerifyOptions& options, std::ostream& out) {
  const ClosedFormSolution sol = bind_solution(options.binding);
  const auto symbolic = ode_residual_symbolic(
      reduced_ode(options.binding.equation), sol.set);
  const ResidualReport numeric = pde_residual_numeric(
      sol, options.grid.make(), options.fd_step, options.mask_margin);
  const bool pass = symbolic.exact && numeric.max_rel <= options.tolerance &&
                    numeric.evaluated_cells > 0;

  if (options.json) {
    json j;
    j["equation"] = equation_name(options.binding.equation);
    j["set"] = options.binding.set_label;
    j["case"] = phi_case_name(options.binding.kind);
    j["kappa"] = sol.kappa;
    j["symbolic_exact"] = symbolic.exact;
    j["numeric"] = json::parse(numeric.to_json());
    j["fd_step"] = options.fd_step;
    j["mask_margin"] = options.mask_margin;
    j["tolerance"] = options.tolerance;
    j["pass"] = pass;
    out << j.dump(2) << '\n';
  } else {
    out << "set " << options.binding.set_label << " ("
        << phi_case_name(options.binding.kind)
        << "), kappa = " << num(sol.kappa) << '\n'
        << "symbolic residual: " << (symbolic.exact ? "all zero" : "NONZERO")
        << '\n'
        << "numeric residual:  max_abs = " << num(numeric.max_abs)
        << ", max_rel = " << num(numeric.max_rel) << " (tolerance "
        << num(options.tolerance) << ")\n"
        << "cells: " << numeric.evaluated_cells << " evaluated, "
        << numeric.masked_cells << " masked\n"
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

namespace {

void write_csv(std::ostream& out, const ClosedFormSolution& sol,
               const GridSpec& grid) {
  out << (sol.coupled ? "x,t,u,v\n" : "x,t,u\n");
  for (int j = 0; j < grid.nt; ++j) {
    const double t = grid.t(j);
    for (int i = 0; i < grid.nx; ++i) {
      const double x = grid.x(i);
      out << num(x) << ',' << num(t);
      try {
        const double u = evaluate_u(sol, x, t);
        out << ',' << num(u);
        if (sol.coupled) out << ',' << num(sol.v_factor * u);
      } catch (const SingularPoint&) {
        out << (sol.coupled ? ",nan,nan" : ",nan");
      } catch (const PoleOfInverse&) {
        out << (sol.coupled ? ",nan,nan" : ",nan");
      }
      out << '\n';
    }
  }
}

int write_csv_to(const std::string& path, std::ostream& fallback,
                 const ClosedFormSolution& sol, const GridSpec& grid,
                 std::ostream& diagnostics) {
  if (path.empty()) {
    write_csv(fallback, sol, grid);
    return kExitOk;
  }
  std::ofstream file(path);
  if (!file) {
    throw std::invalid_argument("cannot open output file '" + path + "'");
  }
  write_csv(file, sol, grid);
  diagnostics << "wrote " << grid.nx * grid.nt << " cells to " << path << '\n';
  return kExitOk;
}

}  // namespace

int eval(const EvalOptions& options, std::ostream& out) {
  const ClosedFormSolution sol = bind_solution(options.binding);
  return write_csv_to(options.out_path, out, sol, options.grid.make(),
                      std::cerr);
}

int figure_data(const FigureDataOptions& options, std::ostream& out) {
  const FigurePreset& preset = find_figure_preset(options.figure_id);
  SolutionBinding binding;
  binding.equation = preset.equation;
  binding.set_label = preset.set_label;
  binding.kind = preset.kind;
  binding.params = preset.params;
  binding.C = preset.C;
  binding.D = preset.D;
  binding.alpha = preset.alpha;
  binding.kappa_sign = options.kappa_sign;
  const ClosedFormSolution sol = bind_solution(binding);
  return write_csv_to(options.out_path, out, sol, options.grid.make(),
                      std::cerr);
}

}  // namespace gg2x::cmd
