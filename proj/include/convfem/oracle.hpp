#pragma once

#include <vector>

#include "convfem/model.hpp"
#include "convfem/solver.hpp"

namespace convfem {

/// Closed-form solution of m u'' + k u = f for zero or sinusoidal forcing,
/// including the resonant case Omega == omega (relative 1e-12). Throws
/// std::invalid_argument for pointwise forcing, which has no closed form here.
double exact_solution(const OscillatorProblem& problem, double s);

/// Relative frequency gap below which the resonant formula is used.
inline constexpr double kResonanceTolerance = 1e-12;

struct ErrorReport {
    std::vector<double> per_node_error;  // approximation - exact
    std::vector<double> at_times;
    double max_abs_error = 0.0;
};

ErrorReport error_metrics(const Trajectory& traj, const OscillatorProblem& problem);

}  // namespace convfem
