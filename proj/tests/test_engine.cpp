#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "rdtm/engine.hpp"
#include "rdtm/ks.hpp"
#include "rdtm/parse.hpp"
#include "rdtm/quad.hpp"
#include "rdtm/verify.hpp"
#include "support/tanh_poly_oracle.hpp"

using namespace rdtm;

namespace {

SpectrumSeries constants(std::vector<double> v)
{
    std::vector<Expr> c;
    for (double d : v) c.push_back(Expr::constant(d));
    return SpectrumSeries(c);
}

double at(const Expr& e, double x, const Bindings& b = {}) { return evaluate(e, b.at(x)); }

bool close(double got, double want, double rel, double abs = 0.0)
{
    return std::fabs(got - want) <= std::max(abs, rel * std::fabs(want));
}

// U_0..U_4 at selected x from a 50-digit evaluation of the tanh-polynomial recurrence.
struct Frozen {
    double x;
    double u[5];
};

const Frozen kKsFrozen[] = {
    {0.0, {0.50036009144217334, -2.6221494735367129e-6, -3.2836929415404035e-8, -1.9223711799146449e-10,
           -1.1542131458260707e-11}},
    {-30.0, {0.1, 0.034279778393351801, 0.01602710206912163, 0.0013756032824654325, 0.0035461225802830989}},
    {-27.5, {-0.50667806631199884, -0.13409350237418333, -0.019880887192956653, 0.0090927534454276519,
             -0.0075257319648366036}},
    {-25.0, {-0.34050450937392463, 0.006216287518262973, 0.012253125877004322, 0.0011890806078422355,
             -0.0050998426978140873}},
    {5.0, {0.50045042236493204, -3.9157030251541654e-7, -4.848205563836575e-9, -3.819232722616061e-11,
           -4.6829063475429167e-13}},
};

const Frozen kPrintedFrozen[] = {
    {0.0, {0.50036009144217334, 1.7209425035301597e-5, -1.3941662407731268e-6, 7.5216732251725548e-8,
           -3.0344587810415697e-9}},
    {-30.0, {0.1, -0.11576942703017933, -0.12396365304608176, 0.049462906056176989, 0.41952657451688818}},
    {-27.5, {-0.50667806631199884, -0.054409752663194165, 0.03354876174242547, -0.045957666721859066,
             0.081553060906098842}},
    {-25.0, {-0.34050450937392463, 0.026768455543152565, -0.0029480609029616573, 0.0036190346926531394,
             -0.0023426742950449158}},
    {5.0, {0.50045042236493204, 2.5687417152311965e-6, -2.0819130291821065e-7, 1.1247223831587587e-8,
           -4.5550904664246542e-10}},
};

void check_frozen(const PdeModel& model, const Frozen (&rows)[5])
{
    const KsParams p;
    const auto s = build_series(model, ks_initial(), 4);
    const SeriesEvaluator ev(s, p.bindings());
    for (const auto& r : rows) {
        const auto c = ev.coefficients_at(r.x);
        for (int k = 0; k <= 4; ++k) {
            INFO("x = " << r.x << ", k = " << k);
            CHECK(close(c[k], r.u[k], 1e-9, 1e-15));
        }
    }
}

}  // namespace

TEST_CASE("SpectrumSeries: indexing and truncation")
{
    const auto s = constants({1, 2, 3});
    CHECK(s.order() == 2);
    CHECK(s.at(2).is_constant(3.0));
    CHECK_THROWS_AS(s.at(3), EngineError);
    CHECK_THROWS_AS(s.at(-1), EngineError);
    CHECK(s.truncated(1).order() == 1);
    CHECK_THROWS_AS(s.truncated(5), EngineError);
}

TEST_CASE("cauchy_product: examples and symmetry")
{
    const SpectrumSeries a({parse("x"), parse("x^2"), parse("sin(x)")});
    const SpectrumSeries b({parse("2"), parse("cos(x)"), parse("exp(x)")});
    CHECK(at(cauchy_product(a, b, 0), 0.7) == doctest::Approx(0.7 * 2));
    CHECK_THROWS_AS(cauchy_product(a, b, 3), EngineError);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ux(-3, 3);
    for (int k = 0; k <= 2; ++k) {
        const Expr ab = cauchy_product(a, b, k), ba = cauchy_product(b, a, k);
        for (int i = 0; i < 20; ++i) {
            const double x = ux(rng);
            CHECK(close(at(ab, x), at(ba, x), 1e-12, 1e-300));
        }
    }
}

TEST_CASE("cauchy_product matches the plain-number oracle")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coef(-2, 2), ux(-2, 2);
    std::uniform_int_distribution<int> ord(0, 6), deg(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = ord(rng);
        // Random polynomial coefficient functions, evaluated separately for the oracle.
        std::vector<std::vector<double>> pa(n + 1), pb(n + 1);
        std::vector<Expr> ea, eb;
        auto make = [&](std::vector<double>& poly) {
            poly.resize(static_cast<std::size_t>(deg(rng)) + 1);
            Expr e = Expr::constant(0.0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                poly[i] = coef(rng);
                e = e + Expr::constant(poly[i]) * pow(Expr::variable(), static_cast<long>(i));
            }
            return e;
        };
        for (int k = 0; k <= n; ++k) {
            ea.push_back(make(pa[k]));
            eb.push_back(make(pb[k]));
        }
        const SpectrumSeries a(ea), b(eb);
        const double x = ux(rng);
        std::vector<double> va, vb;
        for (int k = 0; k <= n; ++k) {
            va.push_back(oracle::eval(pa[k], x));
            vb.push_back(oracle::eval(pb[k], x));
        }
        for (int k = 0; k <= n; ++k) {
            const double want = series_product_oracle(va, vb, static_cast<std::size_t>(k));
            double scale = 0.0;
            for (int r = 0; r <= k; ++r) scale += std::fabs(va[r] * vb[k - r]);
            CHECK(std::fabs(at(cauchy_product(a, b, k), x) - want) <= 1e-12 * std::max(scale, 1e-300));
        }
    }
}

TEST_CASE("power_convolution: examples")
{
    const SpectrumSeries a({parse("x"), parse("x^2"), parse("sin(x)")});
    for (int k = 0; k <= 2; ++k) CHECK(power_convolution(a, 1, k).same_node(a[k]));
    CHECK(power_convolution(a, 0, 0).is_constant(1.0));
    CHECK(power_convolution(a, 0, 2).is_constant(0.0));
    const auto e = constants({1.0, 1.0, 0.5});  // e^t
    CHECK(at(power_convolution(e, 3, 2), 0.0) == doctest::Approx(4.5).epsilon(1e-15));
    const std::vector<double> v{1.0, 1.0, 0.5};
    const std::vector<double> sq{1.0, 2.0, series_product_oracle(v, v, 2)};
    CHECK(series_product_oracle(sq, v, 2) == doctest::Approx(4.5));
    CHECK_THROWS_AS(power_convolution(a, 2, 3), EngineError);
    CHECK_THROWS_AS(power_convolution(a, -1, 0), EngineError);
}

TEST_CASE("time_derivative_transform: examples")
{
    const auto e = constants({1.0, 1.0, 0.5, 1.0 / 6.0});
    CHECK(at(time_derivative_transform(e, 1, 0), 0.0) == 1.0);
    const auto s = constants({0, 0, 0, 5});
    CHECK(at(time_derivative_transform(s, 2, 1), 0.0) == 30.0);
    CHECK_THROWS_AS(time_derivative_transform(s, 2, 2), EngineError);
}

TEST_CASE("monomial_shift: examples")
{
    const SpectrumSeries a({parse("sin(x)"), parse("x + 1")});
    CHECK(monomial_shift(a, 0, 1, 0).is_constant(0.0));
    CHECK(monomial_shift(a, 0, 0, 1).same_node(a[1]));
    CHECK(at(monomial_shift(a, 2, 1, 1), 1.3) == doctest::Approx(1.3 * 1.3 * std::sin(1.3)));
}

TEST_CASE("spatial_derivative: examples")
{
    const SpectrumSeries a({Expr::named("c"), parse("x^2"), parse("tanh(kappa*x)")});
    for (int m = 1; m <= 4; ++m) CHECK(spatial_derivative(a, m, 0).is_constant(0.0));
    for (double x : {-3.0, 0.0, 2.5}) CHECK(at(spatial_derivative(a, 2, 1), x) == 2.0);

    Bindings b;
    b.set("kappa", 0.25);
    Evaluator f(a[2], b);
    const double want = fd_derivative([&](double s) { return f.evaluate(s); }, 0.3, 4, 2e-2);
    CHECK(close(at(spatial_derivative(a, 4, 2), 0.3, b), want, 1e-5));
    CHECK_THROWS_AS(spatial_derivative(a, 1, 3), EngineError);
}

TEST_CASE("recurrence_step: examples")
{
    SUBCASE("constant data is a fixed point")
    {
        const auto s = build_series(ks_model(0.3, 2.0), Expr::named("c"), 4);
        for (int k = 1; k <= 4; ++k) CHECK(s[k].is_constant(0.0));
        const auto z = build_series(ks_model(), Expr::constant(0.0), 2);
        for (int k = 0; k <= 2; ++k) CHECK(z[k].is_constant(0.0));
    }
    SUBCASE("sin(x) under KS")
    {
        const auto s = build_series(ks_model(), parse("sin(x)"), 1);
        for (double x : {-2.0, -0.4, 0.9, 3.1}) CHECK(close(at(s[1], x), -std::sin(x) * std::cos(x), 1e-14, 1e-15));
    }
    SUBCASE("sin(x) under generalized (2,2,1,1,1)")
    {
        const auto s = build_series(generalized_model(2, 2, 1, 1, 1), parse("sin(x)"), 1);
        for (double x : {-2.0, -0.4, 0.9, 3.1}) {
            const double sn = std::sin(x), cs = std::cos(x);
            CHECK(close(at(s[1], x), -(2 * sn * sn * cs + sn * (-sn) + sn), 1e-14, 1e-15));
        }
    }
    SUBCASE("KS initial data, first step at x = 0")
    {
        const KsParams p;
        const Expr f = ks_initial();
        const auto s = build_series(ks_model(), f, 1);
        const Expr comp = -(f * differentiate(f) + differentiate(f, 2) + differentiate(f, 4));
        CHECK(close(at(s[1], 0.0, p.bindings()), at(comp, 0.0, p.bindings()), 1e-9));
    }
    SUBCASE("derivative order cap")
    {
        PdeModel m;
        m.linear.push_back({1.0, kMaxDerivativeOrder + 1});
        CHECK_THROWS_AS(build_series(m, parse("x"), 1), EngineError);
        CHECK_THROWS_AS(build_series(ks_model(), parse("x"), kMaxSeriesOrder + 1), EngineError);
    }
}

TEST_CASE("build_series: n = 0 holds exactly f")
{
    const Expr f = ks_initial();
    const auto s = build_series(ks_model(), f, 0);
    CHECK(s.order() == 0);
    CHECK(s[0].same_node(f));
}

TEST_CASE("KS coefficients match the 50-digit oracle") { check_frozen(ks_model(), kKsFrozen); }

TEST_CASE("printed-recurrence coefficients match the 50-digit oracle") { check_frozen(ks_printed_model(), kPrintedFrozen); }

TEST_CASE("tanh-polynomial oracle agrees across the soliton")
{
    const KsParams p;
    const quad kappa = sqrtq(quad(11) / quad(19)) / quad(4);
    const auto poly = oracle::build(oracle::ks_profile(quad(1) / quad(10), sqrtq(quad(11) / quad(19))), kappa,
                                    {{1, 2}, {1, 4}}, {{1, 1, 1}}, 5);
    const auto s = build_series(ks_model(), ks_initial(), 5);
    const SeriesEvaluator ev(s, p.bindings());
    for (double x = -40; x <= 40; x += 2.5) {
        const auto c = ev.coefficients_at(x);
        const quad T = tanhq(kappa * (quad(x) + quad(30)));
        for (int k = 0; k <= 5; ++k) {
            INFO("x = " << x << ", k = " << k);
            CHECK(close(c[k], static_cast<double>(oracle::eval(poly[k], T)), 1e-9, 1e-15));
        }
    }
}

TEST_CASE("reduction: generalized (1,1,g,0,l) equals KS (g,l)")
{
    // Normwise: far from the soliton U_4 is a ~1e-18 residue of cancelling
    // terms, so deviations are measured against each coefficient's size on the sample.
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ux(-40, 40);
    std::vector<double> xs(100);
    for (auto& x : xs) x = ux(rng);
    const KsParams p;
    for (auto [g, l] : {std::pair{1.0, 1.0}, std::pair{0.5, 2.0}}) {
        const SeriesEvaluator a(build_series(generalized_model(1, 1, g, 0, l), ks_initial(), 4), p.bindings());
        const SeriesEvaluator b(build_series(ks_model(g, l), ks_initial(), 4), p.bindings());
        std::vector<std::vector<double>> ca, cb;
        std::vector<double> sup(5, 0.0);
        for (double x : xs) {
            ca.push_back(a.coefficients_at(x));
            cb.push_back(b.coefficients_at(x));
            for (int k = 0; k <= 4; ++k) sup[k] = std::max(sup[k], std::fabs(cb.back()[k]));
        }
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (int k = 0; k <= 4; ++k) {
                INFO("x = " << xs[i] << ", k = " << k);
                CHECK(std::fabs(ca[i][k] - cb[i][k]) <= 1e-12 * std::max(std::fabs(cb[i][k]), sup[k]));
            }
    }
}

TEST_CASE("generalized with alpha = 0 is linear in U")
{
    const auto s1 = build_series(generalized_model(0, 2, 1, 0, 1), parse("sin(x)"), 3);
    const auto s2 = build_series(generalized_model(0, 2, 1, 0, 1), parse("3*sin(x)"), 3);
    for (int k = 0; k <= 3; ++k)
        for (double x : {-1.0, 0.4, 2.2}) CHECK(close(at(s2[k], x), 3 * at(s1[k], x), 1e-13, 1e-15));
}

TEST_CASE("assemble: t = 0 gives f bitwise")
{
    const KsParams p;
    const Expr f = ks_initial();
    const auto s = build_series(ks_model(), f, 3);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> ux(-40, 40);
    for (int i = 0; i < 200; ++i) {
        const double x = ux(rng);
        const double a = assemble(s, x, 0.0, p.bindings()), e = evaluate(f, p.bindings().at(x));
        CHECK(std::memcmp(&a, &e, sizeof a) == 0);
    }
}

TEST_CASE("assemble: Horner sum of coefficients")
{
    const auto s = constants({1, 2, 3});
    CHECK(assemble(s, 0.0, 2.0, {}) == 1 + 2 * 2 + 3 * 4);
    CHECK_THROWS_AS(assemble(SpectrumSeries({parse("q")}), 0.0, 0.0, {}), EvalError);
}

TEST_CASE("assemble: paper RDTM values for the printed recurrence")
{
    const KsParams p;
    const auto s = build_series(ks_printed_model(), ks_initial(), 2);
    CHECK(std::fabs(assemble(s, 0.0, 1.0, p.bindings()) - 0.5003762240) < 5e-7);
    CHECK(std::fabs(assemble(s, 0.5, 0.5, p.bindings()) - 0.5003854531) < 5e-7);
}
