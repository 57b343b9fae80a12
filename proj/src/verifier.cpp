#include "gg2x/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "gg2x/errors.hpp"

namespace gg2x {

GridSpec::GridSpec(double x0_in, double x1_in, int nx_in, double t0_in,
                   double t1_in, int nt_in)
    : x0(x0_in), x1(x1_in), nx(nx_in), t0(t0_in), t1(t1_in), nt(nt_in) {
  if (nx < 5 || nt < 5) {
    throw DegenerateGrid("grid needs at least 5 points per axis, got " +
                         std::to_string(nx) + " x " + std::to_string(nt));
  }
  if (!(x1 > x0) || !(t1 > t0)) {
    throw std::invalid_argument("grid ranges must be increasing");
  }
  if (!(t0 > 0)) {
    throw std::domain_error("grid must start at t0 > 0");
  }
}

std::string ResidualReport::to_json(int indent) const {
  nlohmann::json j;
  j["max_abs"] = max_abs;
  j["max_rel"] = max_rel;
  j["masked_cells"] = masked_cells;
  j["evaluated_cells"] = evaluated_cells;
  j["terms"] = term_max;
  return j.dump(indent);
}

CandidateVerification ode_residual_symbolic(const ReducedODE& ode,
                                            const CandidateSet& candidate) {
  const CoefficientSystem system =
      derive_coefficient_system(ode, build_ansatz(2));
  return verify_candidate(system, candidate);
}

namespace {

struct TermAccumulator {
  ResidualReport* report;
  void record(const std::string& name, quad value) {
    auto& slot = report->term_max[name];
    slot = std::max(slot, std::fabs(to_double(value)));
  }
};

/// D^alpha f at fixed x via t^{1-alpha} * central difference in t.
quad d_alpha_t(const SolutionKernel<quad>& kernel, bool field_v, quad x, quad t,
               quad h, quad alpha) {
  const quad left = field_v ? kernel.v(x, t - h) : kernel.u(x, t - h);
  const quad right = field_v ? kernel.v(x, t + h) : kernel.u(x, t + h);
  return real_pow(t, quad(1) - alpha) * (right - left) / (quad(2) * h);
}

quad residual_rel(quad residual, quad largest_term) {
  if (residual == quad(0)) return quad(0);
  if (largest_term == quad(0)) return quad(HUGE_VAL);
  return real_fabs(residual) / largest_term;
}

}  // namespace

ResidualReport pde_residual_numeric(const ClosedFormSolution& sol,
                                    const GridSpec& grid, double fd_step,
                                    double mask_margin) {
  if (!(fd_step > 0)) throw std::domain_error("fd step must be positive");
  if (!(mask_margin >= 0)) throw std::domain_error("mask margin must be >= 0");
  const double h_inner = fd_step / 10.0;  // inner step of the nested D^alpha
  if (!(grid.t0 - (fd_step + h_inner) > 0)) {
    throw std::domain_error(
        "time stencil would cross t = 0; raise t0 or shrink fd step");
  }

  const SolutionKernel<quad> kernel(sol);
  const quad alpha = quad(sol.order.alpha);
  const quad h = quad(fd_step);
  const quad hi = quad(h_inner);

  // Pole positions over the grid's xi span (padded by margin + stencil reach).
  const double pad = mask_margin + 4.0 * fd_step + 1.0;
  double xi_min = HUGE_VAL, xi_max = -HUGE_VAL;
  for (double xc : {grid.x0, grid.x1}) {
    for (double tc : {grid.t0, grid.t1}) {
      const double xi = to_double(kernel.xi(quad(xc), quad(tc)));
      xi_min = std::min(xi_min, xi);
      xi_max = std::max(xi_max, xi);
    }
  }
  const std::vector<double> poles =
      singularities(sol, xi_min - pad, xi_max + pad);

  ResidualReport report;
  TermAccumulator acc{&report};

  for (int j = 0; j < grid.nt; ++j) {
    const quad t = quad(grid.t(j));
    for (int i = 0; i < grid.nx; ++i) {
      const quad x = quad(grid.x(i));
      const double xi_cell = to_double(kernel.xi(x, t));
      bool masked = false;
      for (double p : poles) {
        if (std::fabs(xi_cell - p) < mask_margin) {
          masked = true;
          break;
        }
      }
      if (masked) {
        ++report.masked_cells;
        continue;
      }

      try {
        quad cell_abs = 0, cell_rel = 0;
        if (!sol.coupled) {
          // D^{2alpha}u - u_xx - (u^2)_xx + u_xxxx = 0.
          const auto g = [&](quad tau) {
            return real_pow(tau, quad(1) - alpha) *
                   (kernel.u(x, tau + hi) - kernel.u(x, tau - hi)) /
                   (quad(2) * hi);
          };
          const quad frac = real_pow(t, quad(1) - alpha) *
                            (g(t + h) - g(t - h)) / (quad(2) * h);
          const quad um2 = kernel.u(x - 2 * h, t), um1 = kernel.u(x - h, t),
                     u0 = kernel.u(x, t), up1 = kernel.u(x + h, t),
                     up2 = kernel.u(x + 2 * h, t);
          const quad uxx = (um1 - 2 * u0 + up1) / (h * h);
          const quad sq_m1 = um1 * um1, sq_0 = u0 * u0, sq_p1 = up1 * up1;
          const quad u2xx = (sq_m1 - 2 * sq_0 + sq_p1) / (h * h);
          const quad uxxxx =
              (um2 - 4 * um1 + 6 * u0 - 4 * up1 + up2) / (h * h * h * h);
          const quad residual = frac - uxx - u2xx + uxxxx;
          acc.record("d2alpha_u", frac);
          acc.record("u_xx", uxx);
          acc.record("u2_xx", u2xx);
          acc.record("u_xxxx", uxxxx);
          const quad largest =
              std::max({real_fabs(frac), real_fabs(uxx), real_fabs(u2xx),
                        real_fabs(uxxxx)});
          cell_abs = real_fabs(residual);
          cell_rel = residual_rel(residual, largest);
        } else {
          // D^alpha u + v_x = 0.
          const quad frac_u = d_alpha_t(kernel, false, x, t, h, alpha);
          const quad vx = (kernel.v(x + h, t) - kernel.v(x - h, t)) / (2 * h);
          const quad r1 = frac_u + vx;
          acc.record("dalpha_u", frac_u);
          acc.record("v_x", vx);
          // D^alpha v + beta (u^2)_x - gamma u_xxx = 0.
          const quad frac_v = d_alpha_t(kernel, true, x, t, h, alpha);
          const quad um2 = kernel.u(x - 2 * h, t), um1 = kernel.u(x - h, t),
                     up1 = kernel.u(x + h, t), up2 = kernel.u(x + 2 * h, t);
          const quad u2x = (up1 * up1 - um1 * um1) / (2 * h);
          const quad uxxx = (up2 - 2 * up1 + 2 * um1 - um2) / (2 * h * h * h);
          const quad beta = quad(sol.params.beta);
          const quad gamma = quad(sol.params.gamma);
          const quad r2 = frac_v + beta * u2x - gamma * uxxx;
          acc.record("dalpha_v", frac_v);
          acc.record("beta_u2_x", beta * u2x);
          acc.record("gamma_u_xxx", gamma * uxxx);
          const quad largest1 = std::max(real_fabs(frac_u), real_fabs(vx));
          const quad largest2 =
              std::max({real_fabs(frac_v), real_fabs(beta * u2x),
                        real_fabs(gamma * uxxx)});
          cell_abs = std::max(real_fabs(r1), real_fabs(r2));
          cell_rel = std::max(residual_rel(r1, largest1),
                              residual_rel(r2, largest2));
        }
        ++report.evaluated_cells;
        report.max_abs = std::max(report.max_abs, to_double(cell_abs));
        report.max_rel = std::max(report.max_rel, to_double(cell_rel));
      } catch (const SingularPoint&) {
        ++report.masked_cells;  // stencil grazed a pole past the margin
      } catch (const PoleOfInverse&) {
        ++report.masked_cells;
      }
    }
  }
  return report;
}

double chain_rule_crosscheck(const ClosedFormSolution& sol,
                             const std::vector<std::pair<double, double>>& xt,
                             double fd_step) {
  if (!(fd_step > 0)) throw std::domain_error("fd step must be positive");
  const SolutionKernel<quad> kernel(sol);
  const quad h = quad(fd_step);
  const quad alpha = quad(sol.order.alpha);
  double worst = 0.0;
  for (const auto& [x_pt, t_pt] : xt) {
    const quad x = quad(x_pt), t = quad(t_pt);
    const quad lhs = real_pow(t, quad(1) - alpha) *
                     (kernel.u(x, t + h) - kernel.u(x, t - h)) / (quad(2) * h);
    const quad xi = kernel.xi(x, t);
    const quad du_dxi =
        (kernel.u_of_xi(xi + h) - kernel.u_of_xi(xi - h)) / (quad(2) * h);
    const quad rhs = kernel.kappa() * du_dxi;
    worst = std::max(worst, std::fabs(to_double(lhs - rhs)));
  }
  return worst;
}

}  // namespace gg2x
