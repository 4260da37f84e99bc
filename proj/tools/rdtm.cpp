// rdtm: build reduced-differential-transform series for Kuramoto-Sivashinsky
// problems and compare them with the traveling-wave solution.
//
// Exit codes: 0 success, 2 invalid input, 3 evaluation or I/O failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rdtm/report.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitRuntime = 3;

struct Options {
    std::string problem;
    std::optional<std::string> preset;
    std::optional<int> order;
    std::vector<double> xs;
    std::vector<double> ts;
    std::optional<double> xmin, xmax, tmin, tmax;
    std::optional<int> nx, nt;
    std::string format;
    std::string out;
    std::vector<int> orders{1, 2, 3};
};

void add_common(CLI::App* cmd, Options& o, const std::string& default_format)
{
    o.format = default_format;
    cmd->add_option("--problem", o.problem, "JSON problem descriptor");
    cmd->add_option("--preset", o.preset, "ks, ks-printed or generalized-ks");
    cmd->add_option("--order", o.order, "truncation order n (0..6)");
    cmd->add_option("--xs", o.xs, "comma-separated x values")->delimiter(',');
    cmd->add_option("--ts", o.ts, "comma-separated t values")->delimiter(',');
    cmd->add_option("--xmin", o.xmin);
    cmd->add_option("--xmax", o.xmax);
    cmd->add_option("--nx", o.nx);
    cmd->add_option("--tmin", o.tmin);
    cmd->add_option("--tmax", o.tmax);
    cmd->add_option("--nt", o.nt);
    cmd->add_option("--format", o.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    cmd->add_option("--out", o.out, "output path (default: stdout)");
}

// Command-line flags override descriptor fields.
rdtm::ProblemDescriptor descriptor_from(const Options& o, rdtm::Command command)
{
    rdtm::ProblemDescriptor d = o.problem.empty() ? rdtm::ProblemDescriptor{} : rdtm::ProblemDescriptor::from_file(o.problem);
    if (o.preset) {
        d.preset = *o.preset;
        d.model.reset();
    }
    if (o.order) d.order = *o.order;

    auto apply_range = [](std::optional<rdtm::GridRange>& range, std::optional<std::vector<double>>& list,
                          const std::optional<double>& lo, const std::optional<double>& hi, const std::optional<int>& n,
                          rdtm::GridRange fallback) {
        if (!lo && !hi && !n) return;
        rdtm::GridRange r = range.value_or(fallback);
        if (lo) r.min = *lo;
        if (hi) r.max = *hi;
        if (n) r.count = *n;
        range = r;
        list.reset();
    };
    const bool window = command == rdtm::Command::Surface || command == rdtm::Command::Convergence;
    apply_range(d.x_range, d.xs, o.xmin, o.xmax, o.nx, window ? rdtm::GridRange{-40, 40, 201} : rdtm::GridRange{0, 1, 3});
    apply_range(d.t_range, d.ts, o.tmin, o.tmax, o.nt, window ? rdtm::GridRange{0, 4, 101} : rdtm::GridRange{0, 1, 3});
    if (!o.xs.empty()) {
        d.xs = o.xs;
        d.x_range.reset();
    }
    if (!o.ts.empty()) {
        d.ts = o.ts;
        d.t_range.reset();
    }
    return d;
}

int emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) {
        std::cerr << "error: cannot write '" << o.out << "'\n";
        return kExitRuntime;
    }
    return 0;
}

int run(const Options& o, rdtm::Command command)
{
    const rdtm::Problem p = rdtm::resolve(descriptor_from(o, command), command);
    const bool csv = o.format == "csv";
    std::ostringstream os;
    switch (command) {
    case rdtm::Command::Table: {
        const auto table = rdtm::run_table(p);
        csv ? rdtm::write_csv(table, os) : rdtm::write_text(table, os);
        break;
    }
    case rdtm::Command::Surface:
        rdtm::run_surface(p, os);
        break;
    case rdtm::Command::Convergence:
        rdtm::write_convergence(rdtm::run_convergence(p, o.orders), csv, os);
        break;
    case rdtm::Command::Coefficients:
        rdtm::write_coefficients(rdtm::run_coefficients(p), csv, os);
        break;
    }
    return emit(o, os.str());
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Reduced differential transform series for Kuramoto-Sivashinsky problems"};
    app.require_subcommand(1);

    Options table_opts, surface_opts, convergence_opts, coefficient_opts;
    auto* table = app.add_subcommand("table", "RDTM vs exact solution at grid points");
    add_common(table, table_opts, "text");
    auto* surface = app.add_subcommand("surface", "CSV surface x,t,rdtm,exact,abs_err");
    add_common(surface, surface_opts, "csv");
    auto* convergence = app.add_subcommand("convergence", "max error and residual order per truncation order");
    add_common(convergence, convergence_opts, "text");
    convergence->add_option("--orders", convergence_opts.orders, "comma-separated orders")->delimiter(',');
    auto* coefficients = app.add_subcommand("coefficients", "print U_k(x) and U_k(0)");
    add_common(coefficients, coefficient_opts, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*table) return run(table_opts, rdtm::Command::Table);
        if (*surface) return run(surface_opts, rdtm::Command::Surface);
        if (*convergence) {
            if (convergence_opts.orders.empty()) throw rdtm::DescriptorError("orders", "at least one order is required");
            return run(convergence_opts, rdtm::Command::Convergence);
        }
        return run(coefficient_opts, rdtm::Command::Coefficients);
    } catch (const rdtm::DescriptorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const rdtm::EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const rdtm::EngineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
