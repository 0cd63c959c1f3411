#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convfem/assembly.hpp"
#include "convfem/banded.hpp"
#include "convfem/model.hpp"

namespace convfem {

enum class Scheme { fem, onestep };

const char* to_string(Scheme scheme);

/// Nodal history of one approximate solution.
struct Trajectory {
    std::vector<double> times;
    std::vector<double> displacements;
    std::optional<std::vector<double>> velocities;  // one-step scheme only
    Scheme scheme = Scheme::fem;
    std::vector<std::string> warnings;
};

/// Solves the reduced anti-banded system for U_1..U_n. Reversing the row order
/// turns the three anti-diagonals into a lower band of width 2, which is
/// eliminated in O(n).
std::vector<double> solve_reduced(const ReducedSystem& rs);

Trajectory fem_trajectory(const OscillatorProblem& problem, const Mesh& mesh,
                          const QuadratureSpec& quad = {});

/// u'(horizon) from the discarded first global equation
///   Kcal_{0,n-1} U_{n-1} + Kcal_{0,n} U_n = F_0 - m u'(horizon).
double recover_final_velocity(const GlobalSystem& gs, std::span<const double> displacements);

}  // namespace convfem
