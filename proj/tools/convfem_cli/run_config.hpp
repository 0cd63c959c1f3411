#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "convfem/model.hpp"

namespace convfem::cli {

/// Bad user input; the CLI maps it to exit status 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SchemeChoice { fem, onestep, both };

struct SineSpec {
    double f0 = 0.0;
    double omega = 1.0;
};

struct RunConfig {
    double m = 1.0;
    double k = 1.0;
    double u0 = 0.0;
    double v0 = 0.0;
    double horizon = 0.0;
    std::optional<double> tau;
    std::optional<long long> n;
    std::optional<SineSpec> forcing;
    SchemeChoice scheme = SchemeChoice::both;
    std::string output;  // empty: standard output
    bool emit_exact = false;
};

/// "none" or "sin:F0,OMEGA".
std::optional<SineSpec> parse_forcing(const std::string& text);
SchemeChoice parse_scheme(const std::string& text);

/// Reads a JSON document with the RunConfig field names
/// (m, k, u0, v0, horizon, tau, n, forcing, scheme, output, emit_exact).
RunConfig load_config_json(const std::string& text);
RunConfig load_config_file(const std::string& path);

/// Checks the invariants and returns the element count (tau must divide the
/// horizon to within 1e-9 relative).
std::size_t resolve_element_count(const RunConfig& config);

OscillatorProblem make_problem(const RunConfig& config);

}  // namespace convfem::cli
