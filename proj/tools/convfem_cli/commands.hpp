#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace convfem::cli {

inline constexpr const char* kCsvHeader = "time,fem,onestep,exact,err_fem,err_onestep";

/// CSV text for a solve run; warnings (e.g. an unstable one-step tau) go to `diag`.
std::string solve_csv(const RunConfig& config, std::ostream& diag);

/// Exit status: 0 ok, 2 config error, 3 singular system.
int run_solve(const RunConfig& config, std::ostream& out, std::ostream& diag);

struct TableColumn {
    std::string label;
    std::vector<double> values;
};

struct TableData {
    std::string title;
    std::vector<double> times;
    std::vector<TableColumn> columns;
    std::vector<std::string> notes;
};

/// Table 1 (free vibration), 2 (forced, f0 = 5, Omega = 3.6) or 3 (FEM vs
/// one-step differences). Throws ConfigError for any other id.
TableData compute_table(int which);
std::string format_table(const TableData& table);
int run_tables(int which, const std::string& output, std::ostream& out, std::ostream& diag);

struct StabilityReport {
    double critical_tau = 0.0;
    double period_ratio = 0.0;
    std::optional<double> tau;
    std::vector<double> eigen_real;
    std::vector<double> eigen_imag;
    std::vector<double> eigen_abs;
    bool stable = true;
};

StabilityReport stability(double m, double k, std::optional<double> tau);
std::string format_stability(const StabilityReport& report);
int run_stability(double m, double k, std::optional<double> tau, std::ostream& out,
                  std::ostream& diag);

/// Writes to `path` through a temporary file and a rename.
void write_atomically(const std::string& path, const std::string& contents);

}  // namespace convfem::cli
