#pragma once

#include <complex>
#include <cstddef>
#include <utility>

#include "convfem/element.hpp"
#include "convfem/model.hpp"
#include "convfem/solver.hpp"

namespace convfem {

struct StateVector {
    double displacement = 0.0;
    double velocity = 0.0;
};

/// A W^{I+1} = B W^I + F^I for a fixed step tau, W = (U, V).
struct StepMatrices {
    Mat2 a{};
    Mat2 b{};
    double tau = 0.0;
};

StepMatrices step_matrices(double m, double k, double tau);

/// Advances one element: the element equations
///   Kcal11 U_e + Kcal12 U_{e+1} = F1 - m V_{e+1}
///   Kcal21 U_e + Kcal22 U_{e+1} = F2 + m V_e
/// are solved for U_{e+1} (second row), then V_{e+1} (first row).
StateVector step(const LocalSystem& element, double m, const StateVector& state);

/// Uniform march of `steps` steps of length tau from (u0, v0). Runs past the
/// stability limit still complete; they only add a warning.
Trajectory march(const OscillatorProblem& problem, double tau, std::size_t steps,
                 const QuadratureSpec& quad = {});

/// Same recurrence over the elements of an arbitrary mesh.
Trajectory march_on_mesh(const OscillatorProblem& problem, const Mesh& mesh,
                         const QuadratureSpec& quad = {});

/// sqrt(12 m / k): the scheme is neutrally stable for tau below this value.
double stability_limit(double m, double k);

/// Critical step as a fraction of the natural period, sqrt(12) / (2 pi).
double critical_period_ratio();

/// Roots of lambda^2 - 2 lambda (M - K)/(M + K/2) + 1 = 0, M = m/tau,
/// K = k tau / 3; these are the eigenvalues of A^{-1} B.
std::pair<std::complex<double>, std::complex<double>> amplification_eigenvalues(double m, double k,
                                                                                double tau);

}  // namespace convfem
