#include "convfem/solver.hpp"

#include <stdexcept>

namespace convfem {

const char* to_string(Scheme scheme) {
    return scheme == Scheme::fem ? "fem" : "onestep";
}

std::vector<double> solve_reduced(const ReducedSystem& rs) {
    const std::size_t n = rs.matrix.size();
    if (n == 0 || rs.load.size() != n) {
        throw std::invalid_argument("solve_reduced: malformed reduced system");
    }
    // Row p of the reversed system is row n-1-p of the reduced one; its
    // entries sit in columns p-2, p-1, p.
    BandMatrix band(n, 2, 0);
    std::vector<double> rhs(n);
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t r = n - 1 - p;
        for (std::size_t c = (p >= 2 ? p - 2 : 0); c <= p; ++c) {
            band.at(p, c) = rs.matrix(r, c);
        }
        rhs[p] = rs.load[r];
    }
    return solve_banded(std::move(band), rhs);
}

Trajectory fem_trajectory(const OscillatorProblem& problem, const Mesh& mesh,
                          const QuadratureSpec& quad) {
    const MeshCheck check = validate_mesh(mesh);
    if (!check.ok) {
        throw MeshError(check.error);
    }
    const GlobalSystem gs = assemble_global(mesh, problem, quad);
    const ReducedSystem rs = impose_initial_conditions(gs, problem.initial_displacement());
    const std::vector<double> unknowns = solve_reduced(rs);

    Trajectory traj;
    traj.scheme = Scheme::fem;
    traj.times = mesh.nodes();
    traj.displacements.reserve(unknowns.size() + 1);
    traj.displacements.push_back(problem.initial_displacement());
    traj.displacements.insert(traj.displacements.end(), unknowns.begin(), unknowns.end());
    traj.warnings = check.warnings;
    return traj;
}

double recover_final_velocity(const GlobalSystem& gs, std::span<const double> displacements) {
    const std::size_t size = gs.matrix.size();
    if (displacements.size() != size || size < 2) {
        throw std::invalid_argument("recover_final_velocity: need n+1 nodal values");
    }
    double residual = gs.load[0];
    for (std::size_t j = 0; j < size; ++j) {
        residual -= gs.matrix(0, j) * displacements[j];
    }
    return residual / gs.mass;
}

}  // namespace convfem
