#ifndef RDTM_ENGINE_HPP
#define RDTM_ENGINE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdtm/evaluator.hpp"
#include "rdtm/expr.hpp"

namespace rdtm {

inline constexpr int kMaxDerivativeOrder = 8;
inline constexpr int kMaxSeriesOrder = 6;
inline constexpr int kDefaultSeriesOrder = 2;

class EngineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// U_0(x), ..., U_n(x): the time-Taylor coefficients of u(x, t).
class SpectrumSeries {
public:
    explicit SpectrumSeries(std::vector<Expr> coefficients);

    int order() const { return static_cast<int>(coefficients_.size()) - 1; }
    const Expr& operator[](std::size_t k) const { return coefficients_[k]; }
    // Throws EngineError when k exceeds the order.
    const Expr& at(int k) const;
    const std::vector<Expr>& coefficients() const { return coefficients_; }

    SpectrumSeries truncated(int order) const;

private:
    std::vector<Expr> coefficients_;
};

// coefficient * d^order u / dx^order
struct LinearTerm {
    double coefficient = 1.0;
    int derivative_order = 0;
};

// coefficient * u^power * d^order u / dx^order
struct NonlinearTerm {
    double coefficient = 1.0;
    int power = 1;
    int derivative_order = 1;
};

// u_t + sum(linear) + sum(nonlinear) = 0
struct PdeModel {
    std::vector<LinearTerm> linear;
    std::vector<NonlinearTerm> nonlinear;

    // Throws EngineError on a negative order/power or an order above kMaxDerivativeOrder.
    void validate() const;
};

// Transform of a product: sum_{r=0}^{k} A_r B_{k-r}.
Expr cauchy_product(const SpectrumSeries& a, const SpectrumSeries& b, int k);

// k-th coefficient of u^p by repeated convolution.
Expr power_convolution(const SpectrumSeries& a, int p, int k);

// Transform of d^r u / dt^r: (k+r)!/k! * A_{k+r}.
Expr time_derivative_transform(const SpectrumSeries& a, int r, int k);

// Transform of x^m t^p u: x^m A_{k-p}, zero when k < p.
Expr monomial_shift(const SpectrumSeries& a, int m, int p, int k);

// Transform of d^m u / dx^m: d^m A_k / dx^m.
Expr spatial_derivative(const SpectrumSeries& a, int m, int k);

// U_{k+1} from U_0..U_k. `u` may hold more than k+1 coefficients; only 0..k are used.
Expr recurrence_step(const SpectrumSeries& u, const PdeModel& model, int k);

// U_0 = f, then U_{k+1} = recurrence_step(U, model, k) for k < n.
SpectrumSeries build_series(const PdeModel& model, const Expr& f, int n);

// sum_k U_k(x) t^k by Horner's rule.
double assemble(const SpectrumSeries& s, double x, double t, const Bindings& bindings);

// Compiled form of a series for repeated evaluation over grids.
template <class Scalar>
class BasicSeriesEvaluator {
public:
    BasicSeriesEvaluator(const SpectrumSeries& s, const Bindings& bindings)
        : evaluator_(std::span<const Expr>(s.coefficients()), bindings)
    {
    }

    int order() const { return static_cast<int>(evaluator_.root_count()) - 1; }

    std::vector<Scalar> coefficients_at(Scalar x) const { return evaluator_.evaluate_all(x); }

    static Scalar horner(std::span<const Scalar> coefficients, Scalar t)
    {
        Scalar acc = coefficients.back();
        for (std::size_t k = coefficients.size() - 1; k-- > 0;) acc = acc * t + coefficients[k];
        return acc;
    }

    Scalar operator()(Scalar x, Scalar t) const
    {
        const auto c = coefficients_at(x);
        return horner(c, t);
    }

private:
    BasicEvaluator<Scalar> evaluator_;
};

using SeriesEvaluator = BasicSeriesEvaluator<double>;

}  // namespace rdtm

#endif  // RDTM_ENGINE_HPP
