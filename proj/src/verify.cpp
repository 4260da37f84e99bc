#include "rdtm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rdtm {

double series_product_oracle(std::span<const double> a, std::span<const double> b, std::size_t k)
{
    if (a.empty() || b.empty() || k > std::min(a.size(), b.size()) - 1) {
        throw std::out_of_range("series_product_oracle: index " + std::to_string(k) + " out of range");
    }
    double sum = 0.0;
    for (std::size_t r = 0; r <= k; ++r) sum += a[r] * b[k - r];
    return sum;
}

double ErrorTable::max_abs_err() const
{
    double m = 0.0;
    for (const auto& r : rows) m = std::max(m, r.abs_err);
    return m;
}

ErrorTable compare_table(const KsParams& p, int n, std::vector<double> xs, std::vector<double> ts,
                         const PdeModel& model)
{
    p.validate();
    return compare_table(p, build_series(model, ks_initial(), n), std::move(xs), std::move(ts));
}

ErrorTable compare_table(const KsParams& p, const SpectrumSeries& series, std::vector<double> xs,
                         std::vector<double> ts)
{
    if (xs.empty() || ts.empty()) throw std::invalid_argument("compare_table: empty grid");
    std::sort(xs.begin(), xs.end());
    std::sort(ts.begin(), ts.end());
    const SeriesEvaluator u(series, p.bindings());
    ErrorTable table;
    table.params = p;
    table.order = series.order();
    table.rows.reserve(xs.size() * ts.size());
    for (double x : xs) {
        const auto coefficients = u.coefficients_at(x);
        for (double t : ts) {
            const double rdtm = SeriesEvaluator::horner(coefficients, t);
            const double exact = ks_exact(p, x, t);
            table.rows.push_back({x, t, rdtm, exact, std::fabs(rdtm - exact)});
        }
    }
    return table;
}

}  // namespace rdtm
