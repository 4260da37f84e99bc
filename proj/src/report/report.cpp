#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>

#include "rdtm/report.hpp"
#include "rdtm/verify_quad.hpp"

namespace rdtm {

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9e", v);
    return buf;
}

ErrorTable run_table(const Problem& p) { return compare_table(p.params, p.order, p.xs, p.ts, p.model); }

void write_csv(const ErrorTable& table, std::ostream& os)
{
    os << "x,t,rdtm,exact,abs_err\n";
    for (const auto& r : table.rows) {
        os << format_number(r.x) << ',' << format_number(r.t) << ',' << format_number(r.rdtm) << ','
           << format_number(r.exact) << ',' << format_number(r.abs_err) << '\n';
    }
}

void write_text(const ErrorTable& table, std::ostream& os)
{
    os << "order " << table.order << ", c = " << format_number(table.params.c)
       << ", kappa = " << format_number(table.params.kappa) << ", x0 = " << format_number(table.params.x0) << "\n";
    os << std::setw(10) << "x" << std::setw(10) << "t" << std::setw(20) << "rdtm" << std::setw(20) << "exact"
       << std::setw(20) << "abs_err" << "\n";
    char buf[128];
    for (const auto& r : table.rows) {
        std::snprintf(buf, sizeof buf, "%10.4g%10.4g%20.10f%20.10f%20.10e\n", r.x, r.t, r.rdtm, r.exact, r.abs_err);
        os << buf;
    }
}

void run_surface(const Problem& p, std::ostream& os)
{
    const auto series = build_series(p.model, p.initial, p.order);
    write_csv(compare_table(p.params, series, p.xs, p.ts), os);
}

std::vector<ConvergenceRow> run_convergence(const Problem& p, const std::vector<int>& orders)
{
    if (orders.empty()) throw DescriptorError("orders", "at least one order is required");
    for (int n : orders) {
        if (n < 0 || n > kMaxSeriesOrder)
            throw DescriptorError("orders", "order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxSeriesOrder));
    }
    const int top = *std::max_element(orders.begin(), orders.end());
    const auto full = build_series(p.model, p.initial, top);
    std::vector<ConvergenceRow> rows;
    for (int n : orders) {
        const auto series = full.truncated(n);
        const double err = compare_table(p.params, series, p.xs, p.ts).max_abs_err();
        const double slope = residual_slope(series, p.model, p.bindings, 0.0).slope;
        rows.push_back({n, err, slope});
    }
    return rows;
}

void write_convergence(const std::vector<ConvergenceRow>& rows, bool csv, std::ostream& os)
{
    if (csv) {
        os << "order,max_abs_err,residual_slope\n";
        for (const auto& r : rows) os << r.order << ',' << format_number(r.max_abs_err) << ',' << format_number(r.residual_slope) << '\n';
        return;
    }
    os << std::setw(6) << "order" << std::setw(20) << "max_abs_err" << std::setw(18) << "residual_slope" << "\n";
    char buf[96];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%6d%20.10e%18.4f\n", r.order, r.max_abs_err, r.residual_slope);
        os << buf;
    }
}

std::vector<CoefficientRow> run_coefficients(const Problem& p)
{
    const auto series = build_series(p.model, p.initial, p.order);
    std::vector<CoefficientRow> rows;
    for (int k = 0; k <= series.order(); ++k) {
        const Expr& u = series[static_cast<std::size_t>(k)];
        rows.push_back({k, to_string(u), evaluate(u, p.bindings.at(0.0))});
    }
    return rows;
}

void write_coefficients(const std::vector<CoefficientRow>& rows, bool csv, std::ostream& os)
{
    if (csv) {
        os << "k,value_at_0,expression\n";
        for (const auto& r : rows) os << r.k << ',' << format_number(r.value_at_zero) << ",\"" << r.text << "\"\n";
        return;
    }
    for (const auto& r : rows) {
        os << "U_" << r.k << "(x) = " << r.text << "\n";
        os << "U_" << r.k << "(0) = " << format_number(r.value_at_zero) << "\n";
    }
}

}  // namespace rdtm
