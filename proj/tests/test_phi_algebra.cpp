#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gg2x/errors.hpp"
#include "gg2x/method_engine.hpp"
#include "gg2x/phi_laurent.hpp"
#include "gg2x/solution_families.hpp"

using namespace gg2x;

namespace {

ParamPoly P(const char* text) { return ParamPoly::parse(text); }
PhiLaurent phi_pow(int n) {
  return PhiLaurent::term(n, ParamPoly::constant(Rational(1)));
}

}  // namespace

TEST_CASE("auxiliary relation closes differentiation") {
  // phi' = mu + lambda*phi^2, so d(phi^n) = n*mu*phi^(n-1) + n*lambda*phi^(n+1).
  const PhiLaurent dphi = phi_pow(1).derivative();
  CHECK(dphi.coefficient(0) == P("mu"));
  CHECK(dphi.coefficient(2) == P("lambda"));
  CHECK(dphi.coefficient(1).is_zero());
  CHECK(dphi.min_power() == 0);
  CHECK(dphi.max_power() == 2);

  const PhiLaurent dinv = phi_pow(-1).derivative();
  CHECK(dinv.coefficient(-2) == P("-mu"));
  CHECK(dinv.coefficient(0) == P("-lambda"));

  const PhiLaurent dcube = phi_pow(3).derivative();
  CHECK(dcube.coefficient(2) == P("3*mu"));
  CHECK(dcube.coefficient(4) == P("3*lambda"));

  CHECK(phi_derivative(phi_pow(2)) == phi_pow(2).derivative());
  CHECK(PhiLaurent().derivative().is_zero());
  CHECK(PhiLaurent::constant(P("a0")).derivative().is_zero());
}

TEST_CASE("product rule") {
  const PhiLaurent p =
      PhiLaurent::term(1, P("a1")) + PhiLaurent::term(-2, P("b2"));
  const PhiLaurent q = phi_pow(3) + PhiLaurent::constant(P("mu"));
  CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
}

TEST_CASE("squares and powers expand") {
  const PhiLaurent s = phi_pow(1) + phi_pow(-1);
  const PhiLaurent sq = s * s;
  CHECK(sq.coefficient(2) == P("1"));
  CHECK(sq.coefficient(0) == P("2"));
  CHECK(sq.coefficient(-2) == P("1"));
  CHECK(s.pow(2) == sq);
  CHECK(s.pow(0) == PhiLaurent::constant(P("1")));
  CHECK_THROWS_AS(s.pow(-1), UnsupportedForm);
}

TEST_CASE("second derivative of the full ansatz") {
  const PhiLaurent u2 = build_ansatz(2).derivative(2);
  CHECK(u2.coefficient(4) == P("6*lambda^2*a2"));
  CHECK(u2.coefficient(3) == P("2*lambda^2*a1"));
  CHECK(u2.coefficient(2) == P("8*lambda*mu*a2"));
  CHECK(u2.coefficient(1) == P("2*lambda*mu*a1"));
  CHECK(u2.coefficient(0) == P("2*mu^2*a2 + 2*lambda^2*b2"));
  CHECK(u2.coefficient(-1) == P("2*lambda*mu*b1"));
  CHECK(u2.coefficient(-2) == P("8*lambda*mu*b2"));
  CHECK(u2.coefficient(-3) == P("2*mu^2*b1"));
  CHECK(u2.coefficient(-4) == P("6*mu^2*b2"));
  CHECK(u2.min_power() == -4);
  CHECK(u2.max_power() == 4);
}

TEST_CASE("closed form of (6 lambda^2 phi^2)''") {
  const PhiLaurent f2 = PhiLaurent::term(2, P("6*lambda^2")).derivative(2);
  CHECK(f2.coefficient(0) == P("12*lambda^2*mu^2"));
  CHECK(f2.coefficient(2) == P("48*lambda^3*mu"));
  CHECK(f2.coefficient(4) == P("36*lambda^4"));
  CHECK(f2.coefficient(1).is_zero());
  CHECK(f2.coefficient(3).is_zero());
}

TEST_CASE("algebraic derivative agrees with finite differences") {
  // f(xi) = 6 lambda^2 phi(xi)^2 along the trig branch with lambda = mu = 1:
  // the series says f'' = 12 + 48 phi^2 + 36 phi^4.
  const auto f = [](double xi) {
    const double p = phi_value(PhiCaseKind::trig, 1.0, 1.0, 1.0, 1.0, xi);
    return 6.0 * p * p;
  };
  const double xi = 0.3, h = 1e-4;
  const double fdd = (f(xi + h) - 2.0 * f(xi) + f(xi - h)) / (h * h);
  const double p = phi_value(PhiCaseKind::trig, 1.0, 1.0, 1.0, 1.0, xi);
  const double closed = 12.0 + 48.0 * p * p + 36.0 * p * p * p * p;
  CHECK(fdd == doctest::Approx(closed).epsilon(1e-6));
}

TEST_CASE("coefficient substitution, scaling and text") {
  const PhiLaurent series =
      PhiLaurent::term(2, P("a2")) + PhiLaurent::constant(P("a0"));
  const PhiLaurent bound = series.substituted(Sym::a2, P("6*lambda^2"))
                               .substituted(Sym::a0, P("6*lambda*mu"));
  CHECK(bound.coefficient(2) == P("6*lambda^2"));
  CHECK(bound.coefficient(0) == P("6*lambda*mu"));
  CHECK(series.str() == "(a2)*phi^2 + (a0)");
  CHECK(PhiLaurent().str() == "0");
  CHECK(series.scaled(P("-1")) ==
        PhiLaurent::term(2, P("-a2")) + PhiLaurent::constant(P("-a0")));
  CHECK(phi_pow(1).derivative(0) == phi_pow(1));
  CHECK_THROWS_AS(phi_pow(1).derivative(-1), std::invalid_argument);
}
