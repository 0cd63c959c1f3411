#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "run_config.hpp"

namespace {

using convfem::cli::ConfigError;
using convfem::cli::RunConfig;

struct SolveFlags {
    std::optional<double> m, k, u0, v0, horizon, tau;
    std::optional<long long> n;
    std::optional<std::string> forcing, scheme, out, config;
    bool exact = false;
};

RunConfig merge(const SolveFlags& flags) {
    RunConfig cfg = flags.config ? convfem::cli::load_config_file(*flags.config) : RunConfig{};
    if (flags.m) cfg.m = *flags.m;
    if (flags.k) cfg.k = *flags.k;
    if (flags.u0) cfg.u0 = *flags.u0;
    if (flags.v0) cfg.v0 = *flags.v0;
    if (flags.horizon) cfg.horizon = *flags.horizon;
    // tau and n are alternatives: a flag for one replaces a config value for the other.
    if (flags.tau) {
        cfg.tau = flags.tau;
        if (!flags.n) cfg.n.reset();
    }
    if (flags.n) {
        cfg.n = flags.n;
        if (!flags.tau) cfg.tau.reset();
    }
    if (flags.forcing) cfg.forcing = convfem::cli::parse_forcing(*flags.forcing);
    if (flags.scheme) cfg.scheme = convfem::cli::parse_scheme(*flags.scheme);
    if (flags.out) cfg.output = *flags.out;
    if (flags.exact) cfg.emit_exact = true;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convolution-based time finite elements for the harmonic oscillator"};
    app.require_subcommand(1);

    SolveFlags solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one problem and write nodal values as CSV");
    solve_cmd->add_option("--m", solve.m, "Mass");
    solve_cmd->add_option("--k", solve.k, "Stiffness");
    solve_cmd->add_option("--u0", solve.u0, "Initial displacement");
    solve_cmd->add_option("--v0", solve.v0, "Initial velocity");
    solve_cmd->add_option("--t-end", solve.horizon, "Time horizon");
    solve_cmd->add_option("--tau", solve.tau, "Element length (time step)");
    solve_cmd->add_option("--n", solve.n, "Number of elements");
    solve_cmd->add_option("--forcing", solve.forcing, "none | sin:F0,OMEGA");
    solve_cmd->add_option("--scheme", solve.scheme, "fem | onestep | both");
    solve_cmd->add_option("--out", solve.out, "Output CSV path (default: stdout)");
    solve_cmd->add_option("--config", solve.config, "JSON config; flags override its values");
    solve_cmd->add_flag("--exact", solve.exact, "Add exact solution and error columns");

    int which = 0;
    std::optional<std::string> tables_out;
    auto* tables_cmd = app.add_subcommand("tables", "Regenerate the accuracy tables");
    tables_cmd->add_option("--which", which, "Table id: 1, 2 or 3")->required();
    tables_cmd->add_option("--out", tables_out, "Output path (default: stdout)");

    double stab_m = 1.0;
    double stab_k = 1.0;
    std::optional<double> stab_tau;
    auto* stab_cmd = app.add_subcommand("stability", "Critical step and amplification eigenvalues");
    stab_cmd->add_option("--m", stab_m, "Mass")->required();
    stab_cmd->add_option("--k", stab_k, "Stiffness")->required();
    stab_cmd->add_option("--tau", stab_tau, "Step to classify");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*solve_cmd) {
        try {
            return convfem::cli::run_solve(merge(solve), std::cout, std::cerr);
        } catch (const ConfigError& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
    }
    if (*tables_cmd) {
        return convfem::cli::run_tables(which, tables_out.value_or(""), std::cout, std::cerr);
    }
    return convfem::cli::run_stability(stab_m, stab_k, stab_tau, std::cout, std::cerr);
}
