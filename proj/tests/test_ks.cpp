#include <cmath>
#include <random>

#include "doctest.h"
#include "rdtm/ks.hpp"

using namespace rdtm;

TEST_CASE("default parameters")
{
    const KsParams p;
    CHECK(p.c == 0.1);
    CHECK(p.x0 == -30.0);
    CHECK(p.kappa == std::sqrt(11.0 / 19.0) / 4.0);
    CHECK_THROWS_AS((KsParams{0.1, 0.0, -30}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((KsParams{NAN, 0.2, -30}.validate()), std::invalid_argument);
}

TEST_CASE("initial condition values")
{
    const KsParams p;
    const Expr f = ks_initial(p);
    CHECK(std::fabs(evaluate(f, p.bindings().at(0.0)) - 0.500360093) < 5e-9);
    CHECK(evaluate(f, p.bindings().at(p.x0)) == p.c);

    const double limit = p.c + 5.0 / 19.0 * std::sqrt(11.0 / 19.0) * 2.0;
    CHECK(std::fabs(evaluate(f, p.bindings().at(p.x0 + 50.0 / p.kappa)) - limit) < 1e-8);

    const KsParams q{0.3, 0.5, 2.0};
    CHECK(evaluate(f, q.bindings().at(2.0)) == 0.3);
}

TEST_CASE("exact solution values")
{
    const KsParams p;
    CHECK(std::fabs(ks_exact(p, 1.0, 0.0) - 0.500393690) < 5e-9);
    CHECK(std::fabs(ks_exact(p, 0.0, 0.0) - 0.500360093) < 5e-9);
    CHECK(std::fabs(ks_exact(p, 0.5, 0.0) - 0.500378483) < 5e-9);
}

TEST_CASE("exact solution is a traveling wave")
{
    const KsParams p;
    for (double x : {-35.0, -10.0, 3.0})
        for (double t : {0.5, 2.0}) CHECK(ks_exact(p, x + p.c * t, t) == doctest::Approx(ks_exact(p, x, 0.0)).epsilon(1e-14));
}

TEST_CASE("initial condition and exact solution agree at t = 0")
{
    const KsParams p;
    const Expr f = ks_initial();
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> ux(-40, 40);
    for (int i = 0; i < 500; ++i) {
        const double x = ux(rng);
        CHECK(evaluate(f, p.bindings().at(x)) == ks_exact(p, x, 0.0));
    }
}

TEST_CASE("models")
{
    const PdeModel ks = ks_model(0.5, 2.0);
    REQUIRE(ks.linear.size() == 2);
    CHECK(ks.linear[0].coefficient == 0.5);
    CHECK(ks.linear[0].derivative_order == 2);
    CHECK(ks.linear[1].coefficient == 2.0);
    CHECK(ks.linear[1].derivative_order == 4);
    REQUIRE(ks.nonlinear.size() == 1);
    CHECK(ks.nonlinear[0].power == 1);
    CHECK(ks.nonlinear[0].derivative_order == 1);

    const PdeModel pr = ks_printed_model();
    CHECK(pr.linear[1].derivative_order == 3);
    CHECK(pr.nonlinear[0].derivative_order == 2);

    const PdeModel g = generalized_model(1, 2, 3, 0, 4);
    REQUIRE(g.nonlinear.size() == 2);
    CHECK(g.nonlinear[0].power == 2);
    CHECK(g.nonlinear[1].coefficient == 3.0);
    CHECK(g.nonlinear[1].derivative_order == 2);
    CHECK(g.linear.size() == 1);
    CHECK_THROWS_AS(generalized_model(1, -1, 1, 0, 1), EngineError);
}
