// Command-line driver: sweeps over theta, N and epsilon through the library
// modules and emits machine-readable CSV or JSON tables.
//
// Exit codes: 0 success, 2 argument validation, 3 domain violation,
// 4 numerical failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qig/qig.hpp"

namespace {

using qig::Interval;
using qig::SymmetricProbabilityPath;

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::initializer_list<double> values) {
        std::vector<std::string> row;
        row.reserve(values.size());
        for (double v : values) row.push_back(format_number(v));
        rows.push_back(std::move(row));
    }
};

struct Options {
    std::int64_t n = 8;
    std::optional<double> theta_lo;
    std::optional<double> theta_hi;
    int points = 101;
    std::string model = "grover";
    double lambda = 1.0;
    std::optional<double> epsilon;
    std::string format = "csv";
    std::string out_path;

    // Window actually used, recorded for the config echo.
    double resolved_lo = 0.0;
    double resolved_hi = 0.0;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--n", opt.n, "database size N");
    cmd->add_option("--theta-lo", opt.theta_lo, "sweep window lower edge");
    cmd->add_option("--theta-hi", opt.theta_hi, "sweep window upper edge");
    cmd->add_option("--points", opt.points, "grid points (>= 2)");
    cmd->add_option("--model", opt.model, "path model")
        ->check(CLI::IsMember({"grover", "model2", "model3", "model4"}));
    cmd->add_option("--lambda", opt.lambda, "Euler-Lagrange multiplier");
    cmd->add_option("--epsilon", opt.epsilon, "boundary offset for the gap command");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opt.out_path, "output file (default: stdout)");
}

SymmetricProbabilityPath model_path(const Options& opt) {
    if (opt.model == "grover") return qig::grover_path(opt.n);
    if (opt.model == "model2") return qig::model_ii_path(opt.n);
    if (opt.model == "model3") return qig::model_iii_path(opt.n);
    throw std::invalid_argument("model4 has no closed-form path; it is driven "
                                "through the elliptic command");
}

// Resolves the sweep window: explicit flags win, otherwise the model domain
// trimmed away from the simplex boundary.
std::vector<double> resolve_grid(Options& opt, Interval fallback) {
    qig::require(opt.points >= 2, "points must be >= 2");
    opt.resolved_lo = opt.theta_lo.value_or(fallback.lo);
    opt.resolved_hi = opt.theta_hi.value_or(fallback.hi);
    qig::require(opt.resolved_lo < opt.resolved_hi, "theta-lo must be below theta-hi");
    return qig::uniform_grid(Interval{opt.resolved_lo, opt.resolved_hi}, opt.points);
}

Table run_grover(Options& opt) {
    const std::int64_t optimal = qig::optimal_steps(opt.n);
    const std::int64_t last =
        static_cast<std::int64_t>(std::ceil(1.5 * static_cast<double>(optimal)));
    const bool with_oracle =
        opt.n <= 4096 && (opt.n & (opt.n - 1)) == 0;  // dense check needs N = 2^n
    int n_qubits = 0;
    if (with_oracle)
        while ((std::int64_t{1} << n_qubits) < opt.n) ++n_qubits;

    Table table;
    table.columns = {"m", "success_probability"};
    if (with_oracle) table.columns.push_back("rotation_vs_statevector_delta");
    table.columns.push_back("is_optimal");
    for (std::int64_t m = 0; m <= last; ++m) {
        const double probability = qig::success_probability(opt.n, m);
        std::vector<double> row{static_cast<double>(m), probability};
        if (with_oracle)
            row.push_back(std::abs(qig::statevector_oracle(n_qubits, 0, m) - probability));
        row.push_back(m == optimal ? 1.0 : 0.0);
        std::vector<std::string> formatted;
        for (double v : row) formatted.push_back(format_number(v));
        table.rows.push_back(std::move(formatted));
    }
    return table;
}

Table run_fisher(Options& opt) {
    const SymmetricProbabilityPath path = model_path(opt);
    const std::vector<double> grid = resolve_grid(opt, path.domain.trimmed());

    std::vector<double> fisher(grid.size());
    double lo = 1e300, hi = -1e300;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        fisher[i] = qig::fisher_info_function(path, grid[i]);
        lo = std::min(lo, fisher[i]);
        hi = std::max(hi, fisher[i]);
    }
    const double constant = (hi - lo) < 1e-9 ? 1.0 : 0.0;

    Table table;
    table.columns = {"theta", "fisher_info", "kinetic_energy", "constant_flag"};
    for (std::size_t i = 0; i < grid.size(); ++i)
        table.add_row({grid[i], fisher[i], 0.25 * fisher[i], constant});
    return table;
}

Table run_actuality(Options& opt) {
    const SymmetricProbabilityPath path = model_path(opt);
    const std::vector<double> grid = resolve_grid(opt, path.domain.trimmed());
    const qig::ActualityReport report = qig::el_residual(path, opt.lambda, grid);

    Table table;
    table.columns = {"theta", "residual_q0", "residual_qbar", "sup_norm"};
    for (std::size_t i = 0; i < grid.size(); ++i)
        table.add_row({grid[i], report.residual_q0[i], report.residual_qbar[i],
                       report.sup_norm});
    return table;
}

Table run_geodesic(Options& opt) {
    std::function<double(double)> metric, metric_prime;
    if (opt.model == "model2") {
        metric = [](double t) { return 4.0 / (1.0 - t * t); };
        metric_prime = [](double t) {
            const double w = 1.0 - t * t;
            return 8.0 * t / (w * w);
        };
    } else if (opt.model == "grover" || opt.model == "model3") {
        metric = [](double) { return 4.0; };
        metric_prime = [](double) { return 0.0; };
    } else {
        throw std::invalid_argument("geodesic: unsupported model " + opt.model);
    }
    const Interval fallback = model_path(opt).domain.trimmed();
    const std::vector<double> grid = resolve_grid(opt, fallback);

    // Unit-speed parametrization: tau runs over [0, length].
    const double length = qig::geodesic_length(metric, opt.resolved_lo, opt.resolved_hi);
    const qig::GeodesicSolution solution =
        qig::solve_geodesic(metric, metric_prime, opt.resolved_lo, opt.resolved_hi, 0.0,
                            length, opt.points);

    Table table;
    table.columns = {"tau", "theta", "first_integral"};
    for (const qig::GeodesicSample& s : solution.samples)
        table.add_row({s.tau, s.theta, std::sqrt(metric(s.theta)) * s.theta_dot});
    return table;
}

Table run_gap(Options& opt) {
    std::vector<double> epsilons;
    if (opt.epsilon.has_value()) {
        epsilons.push_back(*opt.epsilon);
        opt.resolved_lo = *opt.epsilon;
        opt.resolved_hi = *opt.epsilon;
    } else {
        epsilons = resolve_grid(opt, Interval{0.01, 0.5});
    }

    Table table;
    table.columns = {"epsilon", "delta_tau_grover", "delta_tau_model2", "gap",
                     "gap_over_eps3_thirds"};
    for (double eps : epsilons) {
        const double gap = qig::duration_gap(eps);
        const double grover = 2.0 * eps;
        table.add_row({eps, grover, grover + gap, gap, gap / (eps * eps * eps / 3.0)});
    }
    return table;
}

Table run_elliptic(Options& opt) {
    qig::require(opt.n >= 2, "N must be >= 2");
    const double root = std::sqrt(static_cast<double>(opt.n - 1));
    const double theta_max = root * qig::elliptic_I_N(1.0 - 1e-9, opt.n).value;
    const std::vector<double> grid = resolve_grid(opt, Interval{0.0, 0.95 * theta_max});
    const std::vector<double> q0 = qig::solve_model_iv(opt.n, 0.0, grid);

    Table table;
    table.columns = {"theta", "q0", "i_n_value", "inversion_residual"};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double value = qig::elliptic_I_N(q0[i], opt.n).value;
        table.add_row({grid[i], q0[i], value, value - grid[i] / root});
    }
    return table;
}

Table run_metrics(Options& opt) {
    qig::require(opt.n <= 4096, "metrics: N above 4096 would materialize too "
                                "large a family");
    const SymmetricProbabilityPath path = model_path(opt);
    const qig::PureStateFamily family = qig::to_family(path);
    const std::vector<double> grid = resolve_grid(opt, path.domain.trimmed());

    const double h = 1e-4;
    Table table;
    table.columns = {"theta", "wy_speed", "fs_speed", "ratio", "overlap_fd"};
    for (double theta : grid) {
        const double wy = qig::wy_line_element(family, theta);
        const double fs = qig::fubini_study_speed(family, theta);
        const double fd =
            4.0 * (1.0 - qig::overlap_squared(family, theta, theta + h)) / (h * h);
        table.add_row({theta, wy, fs, wy / fs, fd});
    }
    return table;
}

std::string config_json(const Options& opt) {
    std::string json = "{";
    json += "\"n\": " + format_number(static_cast<double>(opt.n));
    json += ", \"theta_lo\": " + format_number(opt.resolved_lo);
    json += ", \"theta_hi\": " + format_number(opt.resolved_hi);
    json += ", \"points\": " + format_number(opt.points);
    json += ", \"model\": \"" + opt.model + "\"";
    json += ", \"lambda\": " + format_number(opt.lambda);
    json += opt.epsilon.has_value()
                ? ", \"epsilon\": " + format_number(*opt.epsilon)
                : std::string(", \"epsilon\": null");
    json += "}";
    return json;
}

void write_output(const std::string& command, const Options& opt, const Table& table) {
    std::string body;
    if (opt.format == "csv") {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c) body += ',';
            body += table.columns[c];
        }
        body += '\n';
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) body += ',';
                body += row[c];
            }
            body += '\n';
        }
    } else {
        body += "{\n  \"command\": \"" + command + "\",\n";
        body += "  \"config\": " + config_json(opt) + ",\n";
        body += "  \"columns\": [";
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c) body += ", ";
            body += "\"" + table.columns[c] + "\"";
        }
        body += "],\n  \"rows\": [\n";
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            body += "    [";
            for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
                if (c) body += ", ";
                body += table.rows[r][c];
            }
            body += r + 1 < table.rows.size() ? "],\n" : "]\n";
        }
        body += "  ]\n}\n";
    }

    if (opt.out_path.empty()) {
        std::fwrite(body.data(), 1, body.size(), stdout);
    } else {
        std::ofstream file(opt.out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file " + opt.out_path);
        file.write(body.data(), static_cast<std::streamsize>(body.size()));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Information-geometric sweeps over quantum search paths"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::string> names{"grover",   "fisher", "actuality", "geodesic",
                                         "gap",      "elliptic", "metrics"};
    const std::vector<std::string> blurbs{
        "success probability per iteration, with a statevector cross-check",
        "Fisher information and kinetic energy over a theta grid",
        "Euler-Lagrange residuals of the length action",
        "geodesic samples for the model metric",
        "navigation-duration gap between the quadratic model and the base path",
        "elliptic-integral inversion for the actual parametric-dependent path",
        "pure-state metric speeds and the factor-of-4 identity"};
    for (std::size_t i = 0; i < names.size(); ++i)
        add_common_flags(app.add_subcommand(names[i], blurbs[i]), opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << e.what() << "\n";
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        Table table;
        if (command == "grover") table = run_grover(opt);
        else if (command == "fisher") table = run_fisher(opt);
        else if (command == "actuality") table = run_actuality(opt);
        else if (command == "geodesic") table = run_geodesic(opt);
        else if (command == "gap") table = run_gap(opt);
        else if (command == "elliptic") table = run_elliptic(opt);
        else table = run_metrics(opt);
        write_output(command, opt, table);
    } catch (const qig::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "domain violation: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
