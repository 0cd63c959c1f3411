#include "convfem/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace convfem {

double exact_solution(const OscillatorProblem& problem, double s) {
    const double m = problem.mass();
    const double w = natural_frequency(problem);
    const double u0 = problem.initial_displacement();
    const double v0 = problem.initial_velocity();
    const Forcing& forcing = problem.forcing();

    if (forcing.is_zero()) {
        return u0 * std::cos(w * s) + (v0 / w) * std::sin(w * s);
    }
    const SinusoidForcing* sine = forcing.as_sinusoid();
    if (sine == nullptr) {
        throw std::invalid_argument("exact_solution: no closed form for pointwise forcing");
    }
    const double f0 = sine->amplitude;
    const double big_w = sine->frequency;
    if (std::abs(big_w - w) <= kResonanceTolerance * w) {
        return u0 * std::cos(w * s) + (v0 / w + f0 / (2.0 * m * w * w)) * std::sin(w * s) -
               (f0 / (2.0 * m * w)) * s * std::cos(w * s);
    }
    const double c = f0 / (m * (w * w - big_w * big_w));
    return u0 * std::cos(w * s) + ((v0 - c * big_w) / w) * std::sin(w * s) +
           c * std::sin(big_w * s);
}

ErrorReport error_metrics(const Trajectory& traj, const OscillatorProblem& problem) {
    if (traj.times.size() != traj.displacements.size()) {
        throw std::invalid_argument("error_metrics: times and displacements differ in length");
    }
    ErrorReport report;
    report.at_times = traj.times;
    report.per_node_error.reserve(traj.times.size());
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const double err = traj.displacements[i] - exact_solution(problem, traj.times[i]);
        report.per_node_error.push_back(err);
        report.max_abs_error = std::max(report.max_abs_error, std::abs(err));
    }
    return report;
}

}  // namespace convfem
