#include "convfem/marching.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace convfem {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument(std::string(name) + " must be positive");
    }
}

}  // namespace

StepMatrices step_matrices(double m, double k, double tau) {
    require_positive(m, "mass");
    require_positive(k, "stiffness");
    require_positive(tau, "tau");
    const double mt = m / tau;
    StepMatrices sm;
    sm.tau = tau;
    sm.a = {{{-mt + k * tau / 3.0, m}, {mt + k * tau / 6.0, 0.0}}};
    sm.b = {{{-mt - k * tau / 6.0, 0.0}, {mt - k * tau / 3.0, m}}};
    return sm;
}

StateVector step(const LocalSystem& element, double m, const StateVector& state) {
    const Mat2& kc = element.kcal;
    StateVector next;
    next.displacement =
        (element.force[1] + m * state.velocity - kc[1][0] * state.displacement) / kc[1][1];
    next.velocity =
        (element.force[0] - kc[0][0] * state.displacement - kc[0][1] * next.displacement) / m;
    return next;
}

Trajectory march_on_mesh(const OscillatorProblem& problem, const Mesh& mesh,
                         const QuadratureSpec& quad) {
    const std::size_t n = mesh.element_count();
    if (n == 0) {
        throw std::invalid_argument("march: need at least one step");
    }
    Trajectory traj;
    traj.scheme = Scheme::onestep;
    traj.times = mesh.nodes();
    traj.displacements.resize(n + 1);
    std::vector<double> velocities(n + 1);

    StateVector state{problem.initial_displacement(), problem.initial_velocity()};
    traj.displacements[0] = state.displacement;
    velocities[0] = state.velocity;

    const double m = problem.mass();
    const double limit = stability_limit(m, problem.stiffness());
    double longest = 0.0;
    const auto uniform = mesh.uniform_step();
    // Element matrices depend only on the length; reuse them on uniform meshes.
    LocalSystem fixed;
    if (uniform) {
        fixed = local_matrices(Element::from_mesh(mesh, 0), m, problem.stiffness());
    }
    for (std::size_t e = 0; e < n; ++e) {
        const Element elem = Element::from_mesh(mesh, e);
        longest = std::max(longest, elem.length);
        LocalSystem ls = uniform ? fixed : local_matrices(elem, m, problem.stiffness());
        ls.force = local_force(elem, problem.forcing(), quad);
        state = step(ls, m, state);
        traj.displacements[e + 1] = state.displacement;
        velocities[e + 1] = state.velocity;
    }
    traj.velocities = std::move(velocities);
    if (longest >= limit) {
        std::ostringstream msg;
        msg << "step " << longest << " is not below the stability limit " << limit
            << "; the one-step solution grows without bound";
        traj.warnings.push_back(msg.str());
    }
    return traj;
}

Trajectory march(const OscillatorProblem& problem, double tau, std::size_t steps,
                 const QuadratureSpec& quad) {
    require_positive(tau, "tau");
    if (steps == 0) {
        throw std::invalid_argument("march: steps must be at least 1");
    }
    return march_on_mesh(problem, Mesh::uniform_from_step(tau, steps), quad);
}

double stability_limit(double m, double k) {
    require_positive(m, "mass");
    require_positive(k, "stiffness");
    return std::sqrt(12.0 * m / k);
}

double critical_period_ratio() {
    return std::sqrt(12.0) / (2.0 * std::numbers::pi);
}

std::pair<std::complex<double>, std::complex<double>> amplification_eigenvalues(double m, double k,
                                                                                double tau) {
    require_positive(m, "mass");
    require_positive(k, "stiffness");
    require_positive(tau, "tau");
    const double big_m = m / tau;
    const double big_k = k * tau / 3.0;
    const double c = (big_m - big_k) / (big_m + 0.5 * big_k);
    const double disc = c * c - 1.0;
    if (disc < 0.0) {
        const double im = std::sqrt(-disc);
        return {{c, im}, {c, -im}};
    }
    // Real pair; product is 1 so take the larger root directly and divide.
    const double big = c >= 0.0 ? c + std::sqrt(disc) : c - std::sqrt(disc);
    return {{big, 0.0}, {1.0 / big, 0.0}};
}

}  // namespace convfem
