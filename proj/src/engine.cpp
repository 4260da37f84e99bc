#include "rdtm/engine.hpp"

#include <algorithm>
#include <map>

namespace rdtm {

SpectrumSeries::SpectrumSeries(std::vector<Expr> coefficients) : coefficients_(std::move(coefficients))
{
    if (coefficients_.empty()) throw EngineError("a spectrum series needs at least U_0");
}

const Expr& SpectrumSeries::at(int k) const
{
    if (k < 0 || k > order()) {
        throw EngineError("spectrum index " + std::to_string(k) + " out of range 0.." + std::to_string(order()));
    }
    return coefficients_[static_cast<std::size_t>(k)];
}

SpectrumSeries SpectrumSeries::truncated(int n) const
{
    if (n < 0 || n > order()) throw EngineError("cannot truncate series of order " + std::to_string(order()) +
                                                " to order " + std::to_string(n));
    return SpectrumSeries({coefficients_.begin(), coefficients_.begin() + n + 1});
}

void PdeModel::validate() const
{
    auto check_order = [](int m) {
        if (m < 0 || m > kMaxDerivativeOrder) {
            throw EngineError("derivative order " + std::to_string(m) + " outside 0.." +
                              std::to_string(kMaxDerivativeOrder));
        }
    };
    for (const auto& t : linear) check_order(t.derivative_order);
    for (const auto& t : nonlinear) {
        check_order(t.derivative_order);
        if (t.power < 0) throw EngineError("nonlinear power must be nonnegative");
    }
}

namespace {

void check_index(const SpectrumSeries& s, int k, const char* what)
{
    if (k < 0 || k > s.order()) {
        throw EngineError(std::string(what) + ": index " + std::to_string(k) + " out of range 0.." +
                          std::to_string(s.order()));
    }
}

Expr convolve(const std::vector<Expr>& a, const std::vector<Expr>& b, int k)
{
    std::vector<Expr> terms;
    terms.reserve(static_cast<std::size_t>(k) + 1);
    for (int r = 0; r <= k; ++r) terms.push_back(a[static_cast<std::size_t>(r)] * b[static_cast<std::size_t>(k - r)]);
    return simplify(Node::make_add(std::move(terms)));
}

// Incremental caches of derivatives d^m U_r and power coefficients (u^p)_r,
// extended as new coefficients become available.
class RecurrenceBuilder {
public:
    explicit RecurrenceBuilder(PdeModel model) : model_(std::move(model)) { model_.validate(); }

    void push(const Expr& coefficient)
    {
        u_.push_back(coefficient);
        derivatives_.push_back({coefficient});
    }

    int size() const { return static_cast<int>(u_.size()); }

    const Expr& derivative(int r, int m)
    {
        auto& d = derivatives_[static_cast<std::size_t>(r)];
        while (static_cast<int>(d.size()) <= m) d.push_back(differentiate(d.back(), 1));
        return d[static_cast<std::size_t>(m)];
    }

    const Expr& power(int p, int r)
    {
        auto& coeffs = powers_[p];
        while (static_cast<int>(coeffs.size()) <= r) {
            const int j = static_cast<int>(coeffs.size());
            coeffs.push_back(power_coefficient(p, j));
        }
        return coeffs[static_cast<std::size_t>(r)];
    }

    // U_{k+1}; requires U_0..U_k to have been pushed.
    Expr next(int k)
    {
        std::vector<Expr> terms;
        const double scale = -1.0 / static_cast<double>(k + 1);
        for (const auto& t : model_.linear) {
            if (t.coefficient == 0.0) continue;
            terms.push_back((scale * t.coefficient) * derivative(k, t.derivative_order));
        }
        for (const auto& t : model_.nonlinear) {
            if (t.coefficient == 0.0) continue;
            for (int r = 0; r <= k; ++r) {
                const Expr& pr = power(t.power, r);
                if (pr.is_constant(0.0)) continue;
                terms.push_back((scale * t.coefficient) * (pr * derivative(k - r, t.derivative_order)));
            }
        }
        return simplify(Node::make_add(std::move(terms)));
    }

private:
    Expr power_coefficient(int p, int r)
    {
        if (p == 0) return Expr::constant(r == 0 ? 1.0 : 0.0);
        if (p == 1) return u_[static_cast<std::size_t>(r)];
        // (u^p)_r = sum_s (u^{p-1})_s U_{r-s}
        std::vector<Expr> lower;
        for (int s = 0; s <= r; ++s) lower.push_back(power(p - 1, s));
        return convolve(lower, u_, r);
    }

    PdeModel model_;
    std::vector<Expr> u_;
    std::vector<std::vector<Expr>> derivatives_;
    std::map<int, std::vector<Expr>> powers_;
};

}  // namespace

Expr cauchy_product(const SpectrumSeries& a, const SpectrumSeries& b, int k)
{
    if (k < 0 || k > std::min(a.order(), b.order())) {
        throw EngineError("cauchy_product: index " + std::to_string(k) + " exceeds min order " +
                          std::to_string(std::min(a.order(), b.order())));
    }
    return convolve(a.coefficients(), b.coefficients(), k);
}

Expr power_convolution(const SpectrumSeries& a, int p, int k)
{
    if (p < 0) throw EngineError("power_convolution: negative power");
    check_index(a, k, "power_convolution");
    if (p == 0) return Expr::constant(k == 0 ? 1.0 : 0.0);
    if (p == 1) return a[static_cast<std::size_t>(k)];
    std::vector<Expr> acc(a.coefficients().begin(), a.coefficients().begin() + k + 1);
    for (int j = 2; j <= p; ++j) {
        std::vector<Expr> next;
        for (int r = 0; r <= k; ++r) next.push_back(convolve(acc, a.coefficients(), r));
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(k)];
}

Expr time_derivative_transform(const SpectrumSeries& a, int r, int k)
{
    if (r < 1) throw EngineError("time_derivative_transform: order must be positive");
    if (k < 0) throw EngineError("time_derivative_transform: negative index");
    if (k + r > a.order()) {
        throw EngineError("time_derivative_transform: index k+r = " + std::to_string(k + r) + " exceeds order " +
                          std::to_string(a.order()));
    }
    double factor = 1.0;
    for (int j = 1; j <= r; ++j) factor *= static_cast<double>(k + j);
    return simplify(factor * a[static_cast<std::size_t>(k + r)]);
}

Expr monomial_shift(const SpectrumSeries& a, int m, int p, int k)
{
    if (m < 0 || p < 0) throw EngineError("monomial_shift: exponents must be nonnegative");
    if (k > a.order() + p) {
        throw EngineError("monomial_shift: index " + std::to_string(k) + " exceeds order + p = " +
                          std::to_string(a.order() + p));
    }
    if (k < p) return Expr::constant(0.0);
    const Expr& shifted = a[static_cast<std::size_t>(k - p)];
    if (m == 0) return shifted;
    return simplify(pow(Expr::variable(), static_cast<long>(m)) * shifted);
}

Expr spatial_derivative(const SpectrumSeries& a, int m, int k)
{
    if (m < 1) throw EngineError("spatial_derivative: order must be positive");
    check_index(a, k, "spatial_derivative");
    return differentiate(a[static_cast<std::size_t>(k)], m);
}

Expr recurrence_step(const SpectrumSeries& u, const PdeModel& model, int k)
{
    check_index(u, k, "recurrence_step");
    RecurrenceBuilder builder(model);
    for (int r = 0; r <= k; ++r) builder.push(u[static_cast<std::size_t>(r)]);
    return builder.next(k);
}

SpectrumSeries build_series(const PdeModel& model, const Expr& f, int n)
{
    if (n < 0 || n > kMaxSeriesOrder) {
        throw EngineError("series order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxSeriesOrder));
    }
    RecurrenceBuilder builder(model);
    std::vector<Expr> coefficients{f};
    builder.push(f);
    for (int k = 0; k < n; ++k) {
        coefficients.push_back(builder.next(k));
        builder.push(coefficients.back());
    }
    return SpectrumSeries(std::move(coefficients));
}

double assemble(const SpectrumSeries& s, double x, double t, const Bindings& bindings)
{
    return SeriesEvaluator(s, bindings)(x, t);
}

}  // namespace rdtm
