#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "convfem/convfem.hpp"

namespace convfem::cli {

namespace {

std::string fmt_lossless(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_fixed(double x, int decimals, int width = 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%*.*f", width, decimals, x);
    return buf;
}

const std::vector<double> kTableSteps = {0.1, 0.05, 0.025, 0.02, 0.0125, 0.01};
constexpr double kTableHorizon = 10.0;

OscillatorProblem free_problem() {
    return OscillatorProblem(1.0, 9.0, 0.0, 2.0, kTableHorizon);
}

OscillatorProblem forced_problem() {
    return OscillatorProblem(1.0, 9.0, 0.0, 0.0, kTableHorizon, Forcing::sinusoid(5.0, 3.6));
}

struct SampledRun {
    std::vector<double> fem;
    std::vector<double> onestep;
};

// FEM and one-step runs on the same uniform mesh, sampled at t = 1..10.
SampledRun sample_run(const OscillatorProblem& problem, double tau) {
    const auto n = static_cast<std::size_t>(std::lround(problem.horizon() / tau));
    const Mesh mesh = uniform_mesh(problem.horizon(), n);
    const Trajectory fem = fem_trajectory(problem, mesh);
    const Trajectory one = march_on_mesh(problem, mesh);
    SampledRun run;
    for (int t = 1; t <= 10; ++t) {
        const auto idx = static_cast<std::size_t>(std::lround(t / tau));
        run.fem.push_back(fem.displacements[idx]);
        run.onestep.push_back(one.displacements[idx]);
    }
    return run;
}

std::string step_label(double tau) {
    std::ostringstream os;
    os << "tau=" << tau;
    return os.str();
}

TableData accuracy_table(const OscillatorProblem& problem, std::string title) {
    TableData table;
    table.title = std::move(title);
    for (int t = 1; t <= 10; ++t) {
        table.times.push_back(t);
    }
    int disagreements = 0;
    for (double tau : kTableSteps) {
        const SampledRun run = sample_run(problem, tau);
        for (std::size_t i = 0; i < run.fem.size(); ++i) {
            if (fmt_fixed(run.fem[i], 4) != fmt_fixed(run.onestep[i], 4)) {
                ++disagreements;
                table.notes.push_back("one-step differs from FEM at t=" +
                                      std::to_string(i + 1) + ", " + step_label(tau));
            }
        }
        table.columns.push_back({step_label(tau), run.fem});
    }
    TableColumn exact{"Exact", {}};
    for (double t : table.times) {
        exact.values.push_back(exact_solution(problem, t));
    }
    table.columns.push_back(std::move(exact));
    if (disagreements == 0) {
        table.notes.emplace(table.notes.begin(),
                            "FEM and one-step values agree to 4 decimals in every cell");
    }
    return table;
}

TableData difference_table() {
    TableData table;
    table.title = "Forced oscillation f0=5, Omega=3.6: F = FEM, O = one-step, D = F - O";
    for (int t = 1; t <= 10; ++t) {
        table.times.push_back(t);
    }
    const OscillatorProblem problem = forced_problem();
    struct Setting {
        double tau;
        double scale;
        const char* label;
    };
    const Setting settings[] = {{0.5, 1e14, "D x1e14"}, {0.01, 1e12, "D x1e12"}};
    for (const auto& [tau, scale, label] : settings) {
        const SampledRun run = sample_run(problem, tau);
        TableColumn d{label, {}};
        for (std::size_t i = 0; i < run.fem.size(); ++i) {
            d.values.push_back((run.fem[i] - run.onestep[i]) * scale);
        }
        table.columns.push_back({"F " + step_label(tau), run.fem});
        table.columns.push_back({"O " + step_label(tau), run.onestep});
        table.columns.push_back(std::move(d));
    }
    return table;
}

}  // namespace

void write_atomically(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ConfigError("cannot open output file '" + path + "'");
        }
        out << contents;
        if (!out.flush()) {
            throw ConfigError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw ConfigError("cannot move output into place: " + ec.message());
    }
}

std::string solve_csv(const RunConfig& config, std::ostream& diag) {
    const std::size_t n = resolve_element_count(config);
    const OscillatorProblem problem = make_problem(config);
    const Mesh mesh = uniform_mesh(config.horizon, n);

    std::optional<Trajectory> fem;
    std::optional<Trajectory> one;
    if (config.scheme != SchemeChoice::onestep) {
        fem = fem_trajectory(problem, mesh);
    }
    if (config.scheme != SchemeChoice::fem) {
        one = march_on_mesh(problem, mesh);
        for (const auto& w : one->warnings) {
            diag << "warning: " << w << '\n';
        }
    }
    if (fem) {
        for (const auto& w : fem->warnings) {
            diag << "warning: " << w << '\n';
        }
    }

    std::string csv = kCsvHeader;
    csv += '\n';
    const auto& times = mesh.nodes();
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        std::optional<double> exact;
        if (config.emit_exact) {
            exact = exact_solution(problem, t);
        }
        csv += fmt_lossless(t);
        csv += ',';
        if (fem) csv += fmt_lossless(fem->displacements[i]);
        csv += ',';
        if (one) csv += fmt_lossless(one->displacements[i]);
        csv += ',';
        if (exact) csv += fmt_lossless(*exact);
        csv += ',';
        if (exact && fem) csv += fmt_lossless(fem->displacements[i] - *exact);
        csv += ',';
        if (exact && one) csv += fmt_lossless(one->displacements[i] - *exact);
        csv += '\n';
    }
    return csv;
}

int run_solve(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    try {
        const std::string csv = solve_csv(config, diag);
        if (config.output.empty()) {
            out << csv;
        } else {
            write_atomically(config.output, csv);
        }
        return 0;
    } catch (const ConfigError& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    } catch (const SingularSystemError& e) {
        diag << "error: " << e.what() << '\n';
        return 3;
    }
}

TableData compute_table(int which) {
    switch (which) {
        case 1:
            return accuracy_table(free_problem(),
                                  "Free vibration m=1, k=9, u0=0, v0=2 (FEM; one-step identical)");
        case 2:
            return accuracy_table(forced_problem(),
                                  "Forced vibration f0=5, Omega=3.6, u0=v0=0 (FEM; one-step identical)");
        case 3:
            return difference_table();
        default:
            throw ConfigError("unknown table id " + std::to_string(which) + " (expected 1, 2 or 3)");
    }
}

std::string format_table(const TableData& table) {
    constexpr int kWidth = 12;
    std::string text = table.title + "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%6s", "Time");
    text += buf;
    for (const auto& col : table.columns) {
        std::snprintf(buf, sizeof buf, "%*s", kWidth + 2, col.label.c_str());
        text += buf;
    }
    text += '\n';
    for (std::size_t r = 0; r < table.times.size(); ++r) {
        std::snprintf(buf, sizeof buf, "%6g", table.times[r]);
        text += buf;
        for (const auto& col : table.columns) {
            text += "  " + fmt_fixed(col.values[r], 4, kWidth);
        }
        text += '\n';
    }
    for (const auto& note : table.notes) {
        text += "# " + note + '\n';
    }
    return text;
}

int run_tables(int which, const std::string& output, std::ostream& out, std::ostream& diag) {
    try {
        const std::string text = format_table(compute_table(which));
        if (output.empty()) {
            out << text;
        } else {
            write_atomically(output, text);
        }
        return 0;
    } catch (const ConfigError& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    } catch (const SingularSystemError& e) {
        diag << "error: " << e.what() << '\n';
        return 3;
    }
}

StabilityReport stability(double m, double k, std::optional<double> tau) {
    if (!(m > 0.0) || !(k > 0.0) || (tau && !(*tau > 0.0))) {
        throw ConfigError("m, k and tau must be positive");
    }
    StabilityReport report;
    report.critical_tau = stability_limit(m, k);
    report.period_ratio = critical_period_ratio();
    report.tau = tau;
    if (tau) {
        const auto [l1, l2] = amplification_eigenvalues(m, k, *tau);
        for (const auto& l : {l1, l2}) {
            report.eigen_real.push_back(l.real());
            report.eigen_imag.push_back(l.imag());
            report.eigen_abs.push_back(std::abs(l));
        }
        report.stable = *tau < report.critical_tau;
    }
    return report;
}

std::string format_stability(const StabilityReport& r) {
    std::ostringstream os;
    os << "critical tau     = " << fmt_fixed(r.critical_tau, 6) << '\n';
    os << "critical tau / T = " << fmt_fixed(r.period_ratio, 4) << '\n';
    if (r.tau) {
        os << "tau              = " << fmt_lossless(*r.tau) << '\n';
        for (std::size_t i = 0; i < r.eigen_real.size(); ++i) {
            const double im = r.eigen_imag[i];
            os << "lambda" << i + 1 << "          = " << fmt_fixed(r.eigen_real[i], 6)
               << (im < 0 ? " - " : " + ") << fmt_fixed(std::abs(im), 6) << "i\n";
        }
        for (std::size_t i = 0; i < r.eigen_abs.size(); ++i) {
            os << "|lambda" << i + 1 << "|        = " << fmt_fixed(r.eigen_abs[i], 6) << '\n';
        }
        os << "verdict          = " << (r.stable ? "STABLE" : "UNSTABLE") << '\n';
    }
    return os.str();
}

int run_stability(double m, double k, std::optional<double> tau, std::ostream& out,
                  std::ostream& diag) {
    try {
        out << format_stability(stability(m, k, tau));
        return 0;
    } catch (const ConfigError& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace convfem::cli
