#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gg2x/commands.hpp"
#include "gg2x/errors.hpp"

namespace {

using namespace gg2x;

EquationId parse_equation(const std::string& name) {
  const auto id = equation_from_name(name);
  if (!id) throw CLI::ValidationError("--equation", "unknown equation " + name);
  return *id;
}

PhiCaseKind parse_case(const std::string& name) {
  const auto kind = phi_case_from_name(name);
  if (!kind) throw CLI::ValidationError("--case", "unknown phi case " + name);
  return *kind;
}

void add_binding_flags(CLI::App* app, std::string& equation, std::string& set,
                       std::string& phi_case, cmd::SolutionBinding& binding,
                       std::string& k_sign) {
  app->add_option("--equation", equation, "boussinesq or coupled")
      ->required()
      ->check(CLI::IsMember({"boussinesq", "coupled"}));
  app->add_option("--set", set, "solution set label (Set1..Set6)")
      ->capture_default_str();
  app->add_option("--case", phi_case, "phi case: trig, hyp or rational")
      ->capture_default_str()
      ->check(CLI::IsMember({"trig", "hyp", "hyperbolic", "rational"}));
  app->add_option("--lambda", binding.params.lambda, "Riccati constant lambda")
      ->capture_default_str();
  app->add_option("--mu", binding.params.mu, "Riccati constant mu")
      ->capture_default_str();
  app->add_option("--beta", binding.params.beta, "coupled-model constant beta")
      ->capture_default_str();
  app->add_option("--gamma", binding.params.gamma,
                  "coupled-model constant gamma")
      ->capture_default_str();
  app->add_option("--C", binding.C, "integration constant C")
      ->capture_default_str();
  app->add_option("--D", binding.D, "integration constant D")
      ->capture_default_str();
  app->add_option("--alpha", binding.alpha, "fractional order in (0, 1]")
      ->capture_default_str();
  app->add_option("--k-sign", k_sign, "wave speed branch: + or -")
      ->capture_default_str()
      ->check(CLI::IsMember({"+", "-"}));
}

void add_grid_flags(CLI::App* app, cmd::GridOptions& grid) {
  app->add_option("--x0", grid.x0, "grid x start")->capture_default_str();
  app->add_option("--x1", grid.x1, "grid x end")->capture_default_str();
  app->add_option("--nx", grid.nx, "grid points in x")->capture_default_str();
  app->add_option("--t0", grid.t0, "grid t start (> 0)")->capture_default_str();
  app->add_option("--t1", grid.t1, "grid t end")->capture_default_str();
  app->add_option("--nt", grid.nt, "grid points in t")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact traveling-wave solutions of conformable time-fractional "
      "Boussinesq models via the (G'/G^2) expansion"};
  app.require_subcommand(1);

  int exit_code = cmd::kExitOk;

  // ---- derive ----
  auto derive_opts = std::make_shared<cmd::DeriveOptions>();
  auto derive_eq = std::make_shared<std::string>("boussinesq");
  CLI::App* derive =
      app.add_subcommand("derive", "reduce the PDE and print the phi system");
  derive->add_option("--equation", *derive_eq, "boussinesq or coupled")
      ->required()
      ->check(CLI::IsMember({"boussinesq", "coupled"}));
  derive->add_flag("--json", derive_opts->json, "emit JSON");
  derive->callback([&, derive_opts, derive_eq] {
    derive_opts->equation = parse_equation(*derive_eq);
    exit_code = cmd::derive(*derive_opts, std::cout);
  });

  // ---- solve ----
  auto solve_opts = std::make_shared<cmd::SolveOptions>();
  auto solve_eq = std::make_shared<std::string>("boussinesq");
  CLI::App* solve = app.add_subcommand(
      "solve", "solve the coefficient system into labeled sets");
  solve->add_option("--equation", *solve_eq, "boussinesq or coupled")
      ->required()
      ->check(CLI::IsMember({"boussinesq", "coupled"}));
  solve->add_flag("--include-degenerate", solve_opts->include_degenerate,
                  "also list the constant-profile sets");
  solve->add_flag("--json", solve_opts->json, "emit JSON");
  solve->callback([&, solve_opts, solve_eq] {
    solve_opts->equation = parse_equation(*solve_eq);
    exit_code = cmd::solve(*solve_opts, std::cout);
  });

  // ---- verify ----
  auto verify_opts = std::make_shared<cmd::VerifyOptions>();
  auto verify_eq = std::make_shared<std::string>();
  auto verify_set = std::make_shared<std::string>("Set1");
  auto verify_case = std::make_shared<std::string>("trig");
  auto verify_sign = std::make_shared<std::string>("+");
  CLI::App* verify = app.add_subcommand(
      "verify", "verify one bound solution symbolically and numerically");
  add_binding_flags(verify, *verify_eq, *verify_set, *verify_case,
                    verify_opts->binding, *verify_sign);
  add_grid_flags(verify, verify_opts->grid);
  verify->add_option("--fd-step", verify_opts->fd_step,
                     "finite-difference step")
      ->capture_default_str();
  verify->add_option("--mask-margin", verify_opts->mask_margin,
                     "xi distance masked around poles")
      ->capture_default_str();
  verify->add_option("--tol", verify_opts->tolerance,
                     "max relative residual accepted")
      ->capture_default_str();
  verify->add_flag("--json", verify_opts->json, "emit JSON");
  verify->callback([&, verify_opts, verify_eq, verify_set, verify_case,
                    verify_sign] {
    verify_opts->binding.equation = parse_equation(*verify_eq);
    verify_opts->binding.set_label = *verify_set;
    verify_opts->binding.kind = parse_case(*verify_case);
    verify_opts->binding.kappa_sign = *verify_sign == "-" ? -1 : +1;
    exit_code = cmd::verify(*verify_opts, std::cout);
  });

  // ---- eval ----
  auto eval_opts = std::make_shared<cmd::EvalOptions>();
  auto eval_eq = std::make_shared<std::string>();
  auto eval_set = std::make_shared<std::string>("Set1");
  auto eval_case = std::make_shared<std::string>("trig");
  auto eval_sign = std::make_shared<std::string>("+");
  CLI::App* eval =
      app.add_subcommand("eval", "evaluate a bound solution onto a CSV grid");
  add_binding_flags(eval, *eval_eq, *eval_set, *eval_case, eval_opts->binding,
                    *eval_sign);
  add_grid_flags(eval, eval_opts->grid);
  eval->add_option("--out", eval_opts->out_path,
                   "CSV output path (default: stdout)");
  eval->callback([&, eval_opts, eval_eq, eval_set, eval_case, eval_sign] {
    eval_opts->binding.equation = parse_equation(*eval_eq);
    eval_opts->binding.set_label = *eval_set;
    eval_opts->binding.kind = parse_case(*eval_case);
    eval_opts->binding.kappa_sign = *eval_sign == "-" ? -1 : +1;
    exit_code = cmd::eval(*eval_opts, std::cout);
  });

  // ---- figure-data ----
  auto fig_opts = std::make_shared<cmd::FigureDataOptions>();
  auto fig_sign = std::make_shared<std::string>("+");
  CLI::App* figure = app.add_subcommand(
      "figure-data", "emit the CSV behind one published surface plot");
  figure->add_option("--figure", fig_opts->figure_id,
                     "figure id: 1a, 1b, 1c, 2a, 2b or 2c")
      ->required()
      ->check(CLI::IsMember({"1a", "1b", "1c", "2a", "2b", "2c"}));
  add_grid_flags(figure, fig_opts->grid);
  figure->add_option("--k-sign", *fig_sign, "wave speed branch: + or -")
      ->capture_default_str()
      ->check(CLI::IsMember({"+", "-"}));
  figure->add_option("--out", fig_opts->out_path,
                     "CSV output path (default: stdout)");
  figure->callback([&, fig_opts, fig_sign] {
    fig_opts->kappa_sign = *fig_sign == "-" ? -1 : +1;
    exit_code = cmd::figure_data(*fig_opts, std::cout);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cmd::kExitUsage;
  } catch (const gg2x::NoIntegerBalance& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cmd::kExitUsage;
  } catch (const gg2x::UnsupportedForm& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cmd::kExitUsage;
  } catch (const gg2x::CaseMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cmd::kExitUsage;
  } catch (const gg2x::ComplexWaveSpeed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cmd::kExitUsage;
  } catch (const gg2x::DegenerateGrid& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cmd::kExitUsage;
  } catch (const gg2x::SingularPoint& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cmd::kExitUsage;
  } catch (const gg2x::PoleOfInverse& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cmd::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cmd::kExitUsage;
  }
  return exit_code;
}
