#ifndef RDTM_VERIFY_HPP
#define RDTM_VERIFY_HPP

// Numerical oracles that share no code path with the symbolic engine:
// finite differences, PDE residuals, and plain-number series products.

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "rdtm/engine.hpp"
#include "rdtm/ks.hpp"

namespace rdtm {

// Step sizes for x-derivatives of order 1..4 (index 0 unused) and for t.
template <class Scalar>
struct FdSteps {
    std::array<Scalar, 5> x;
    Scalar t;
};

// One-Richardson-step central differences balance truncation against
// roundoff; the optimum step grows with the derivative order and shrinks
// with the working precision.
template <class Scalar>
FdSteps<Scalar> default_fd_steps();

template <>
inline FdSteps<double> default_fd_steps<double>()
{
    return {{0.0, 1e-3, 5e-3, 1e-2, 2e-2}, 1e-4};
}

namespace detail {

template <class Scalar, class F>
Scalar central_difference(F& f, Scalar x, int order, Scalar h)
{
    switch (order) {
    case 1:
        return (f(x + h) - f(x - h)) / (Scalar(2) * h);
    case 2:
        return (f(x + h) - Scalar(2) * f(x) + f(x - h)) / (h * h);
    case 3:
        return (f(x + Scalar(2) * h) - Scalar(2) * f(x + h) + Scalar(2) * f(x - h) - f(x - Scalar(2) * h)) /
               (Scalar(2) * h * h * h);
    case 4:
        return (f(x + Scalar(2) * h) - Scalar(4) * f(x + h) + Scalar(6) * f(x) - Scalar(4) * f(x - h) +
                f(x - Scalar(2) * h)) /
               (h * h * h * h);
    default:
        throw std::invalid_argument("finite-difference order must be 1..4");
    }
}

}  // namespace detail

// Central-difference estimate of f^(order)(x), 1 <= order <= 4, with one
// Richardson step: (4 D(h/2) - D(h)) / 3. Error O(h^4) for smooth f.
template <class Scalar, class F>
Scalar fd_derivative(F&& f, Scalar x, int order, Scalar h)
{
    if (!(h > Scalar(0))) throw std::invalid_argument("finite-difference step must be positive");
    const Scalar coarse = detail::central_difference(f, x, order, h);
    const Scalar fine = detail::central_difference(f, x, order, h / Scalar(2));
    return (Scalar(4) * fine - coarse) / Scalar(3);
}

// First derivative in t: central where t >= 2h, otherwise the one-sided
// second-order stencil (so t = 0 is allowed), each with one Richardson step.
template <class Scalar, class F>
Scalar fd_time_derivative(F&& f, Scalar t, Scalar h)
{
    if (t >= Scalar(2) * h) return fd_derivative(f, t, 1, h);
    auto forward = [&](Scalar s) {
        return (Scalar(-3) * f(t) + Scalar(4) * f(t + s) - f(t + Scalar(2) * s)) / (Scalar(2) * s);
    };
    return (Scalar(4) * forward(h / Scalar(2)) - forward(h)) / Scalar(3);
}

// Left-hand side u_t + sum(linear) + sum(nonlinear) of `model` at (x, t),
// every derivative by finite differences of u(x, t).
template <class Scalar, class U>
Scalar residual(U&& u, const PdeModel& model, Scalar x, Scalar t, const FdSteps<Scalar>& steps)
{
    auto in_x = [&](Scalar s) { return u(s, t); };
    auto in_t = [&](Scalar s) { return u(x, s); };
    auto dx = [&](int m) -> Scalar {
        if (m == 0) return u(x, t);
        if (m > 4) throw std::invalid_argument("residual supports x-derivatives up to order 4");
        return fd_derivative(in_x, x, m, steps.x[static_cast<std::size_t>(m)]);
    };
    const Scalar value = u(x, t);
    Scalar r = fd_time_derivative(in_t, t, steps.t);
    for (const auto& term : model.linear) r = r + Scalar(term.coefficient) * dx(term.derivative_order);
    for (const auto& term : model.nonlinear) {
        Scalar up = Scalar(1);
        for (int i = 0; i < term.power; ++i) up = up * value;
        r = r + Scalar(term.coefficient) * up * dx(term.derivative_order);
    }
    return r;
}

template <class Scalar, class U>
Scalar residual(U&& u, const PdeModel& model, Scalar x, Scalar t)
{
    return residual(u, model, x, t, default_fd_steps<Scalar>());
}

// sum_{r=0}^{k} a_r b_{k-r} on plain numbers.
double series_product_oracle(std::span<const double> a, std::span<const double> b, std::size_t k);

struct ErrorRow {
    double x;
    double t;
    double rdtm;
    double exact;
    double abs_err;
};

struct ErrorTable {
    std::vector<ErrorRow> rows;
    KsParams params;
    int order = kDefaultSeriesOrder;

    double max_abs_err() const;
};

// RDTM series of `model` from ks_initial() against ks_exact() on xs x ts
// (x outer, both sorted ascending).
ErrorTable compare_table(const KsParams& p, int n, std::vector<double> xs, std::vector<double> ts,
                         const PdeModel& model = ks_model());

// Same, for a series that was already built from ks_initial().
ErrorTable compare_table(const KsParams& p, const SpectrumSeries& series, std::vector<double> xs,
                         std::vector<double> ts);

}  // namespace rdtm

#endif  // RDTM_VERIFY_HPP
