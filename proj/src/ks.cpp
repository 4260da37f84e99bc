#include "rdtm/ks.hpp"

#include <cmath>
#include <stdexcept>

#include "rdtm/parse.hpp"

namespace rdtm {

double default_kappa() { return std::sqrt(11.0 / 19.0) / 4.0; }

void KsParams::validate() const
{
    if (kappa == 0.0 || !std::isfinite(kappa)) throw std::invalid_argument("kappa must be finite and nonzero");
    if (!std::isfinite(c) || !std::isfinite(x0)) throw std::invalid_argument("c and x0 must be finite");
}

Bindings KsParams::bindings() const
{
    Bindings b;
    b.set("c", c).set("kappa", kappa).set("x0", x0);
    return b;
}

Expr ks_initial()
{
    static const Expr f =
        parse("c + 5/19*sqrt(11/19)*(11*tanh(kappa*(x - x0))^3 - 9*tanh(kappa*(x - x0)))");
    return f;
}

double ks_exact(const KsParams& p, double x, double t)
{
    // Operation order mirrors the evaluation of ks_initial().
    const double xi = (x - p.c * t) + -p.x0;
    const double th = std::tanh(p.kappa * xi);
    const double amplitude = (5.0 / 19.0) * std::sqrt(11.0 / 19.0);
    return p.c + amplitude * (11.0 * std::pow(th, 3.0) + -(9.0 * th));
}

PdeModel ks_model(double gamma, double lambda)
{
    return PdeModel{{{gamma, 2}, {lambda, 4}}, {{1.0, 1, 1}}};
}

PdeModel ks_printed_model(double gamma, double lambda)
{
    return PdeModel{{{gamma, 2}, {lambda, 3}}, {{1.0, 1, 2}}};
}

PdeModel generalized_model(double alpha, int beta, double gamma, int tau, double lambda)
{
    if (beta < 0 || tau < 0) throw EngineError("beta and tau must be nonnegative integers");
    return PdeModel{{{lambda, 4}}, {{alpha, beta, 1}, {gamma, tau, 2}}};
}

}  // namespace rdtm
