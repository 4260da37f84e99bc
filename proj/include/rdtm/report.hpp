#ifndef RDTM_REPORT_HPP
#define RDTM_REPORT_HPP

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rdtm/engine.hpp"
#include "rdtm/ks.hpp"
#include "rdtm/verify.hpp"

namespace rdtm {

// Invalid input: descriptor, flags, grid or expression text. Maps to exit code 2.
class DescriptorError : public std::runtime_error {
public:
    DescriptorError(std::string field, const std::string& message)
        : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field))
    {
    }
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct GridRange {
    double min = 0.0;
    double max = 0.0;
    int count = 1;

    std::vector<double> points() const;
};

// Raw, unvalidated problem description. Every field is optional; missing
// fields fall back to the built-in KS example.
struct ProblemDescriptor {
    std::optional<std::string> preset;  // "ks", "ks-printed", "generalized-ks"
    std::optional<PdeModel> model;      // explicit terms; overrides the preset
    std::map<std::string, double> coefficients;  // alpha, beta, gamma, tau, lambda
    std::optional<std::string> initial;
    std::map<std::string, double> params;  // named-constant bindings (c, kappa, x0, ...)
    std::optional<int> order;
    std::optional<std::vector<double>> xs;
    std::optional<std::vector<double>> ts;
    std::optional<GridRange> x_range;
    std::optional<GridRange> t_range;

    // Parses the JSON document format; throws DescriptorError.
    static ProblemDescriptor from_json(std::string_view text);
    static ProblemDescriptor from_file(const std::string& path);
};

enum class Command { Table, Surface, Convergence, Coefficients };

std::vector<double> default_xs(Command command);
std::vector<double> default_ts(Command command);

// Validated, ready-to-run problem.
struct Problem {
    std::string preset;
    PdeModel model;
    Expr initial;
    bool builtin_initial = true;
    Bindings bindings;
    KsParams params;
    int order = kDefaultSeriesOrder;
    std::vector<double> xs;
    std::vector<double> ts;

    // ks_exact() applies only to KS-type presets started from ks_initial().
    bool has_exact() const;
};

Problem resolve(const ProblemDescriptor& d, Command command);

PdeModel preset_model(const std::string& name, const std::map<std::string, double>& coefficients);

ErrorTable run_table(const Problem& p);

void write_csv(const ErrorTable& table, std::ostream& os);
void write_text(const ErrorTable& table, std::ostream& os);

// Streams rows x,t,rdtm,exact,abs_err over the grid, x outer.
void run_surface(const Problem& p, std::ostream& os);

struct ConvergenceRow {
    int order;
    double max_abs_err;
    double residual_slope;  // log-log slope of the residual at x = 0 over t in [1e-3, 1e-1]
};

std::vector<ConvergenceRow> run_convergence(const Problem& p, const std::vector<int>& orders);
void write_convergence(const std::vector<ConvergenceRow>& rows, bool csv, std::ostream& os);

struct CoefficientRow {
    int k;
    std::string text;
    double value_at_zero;
};

std::vector<CoefficientRow> run_coefficients(const Problem& p);
void write_coefficients(const std::vector<CoefficientRow>& rows, bool csv, std::ostream& os);

// Fixed scientific notation, 10 significant digits.
std::string format_number(double v);

}  // namespace rdtm

#endif  // RDTM_REPORT_HPP
