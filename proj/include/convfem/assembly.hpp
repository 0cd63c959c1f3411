#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "convfem/convolution.hpp"
#include "convfem/element.hpp"
#include "convfem/model.hpp"

namespace convfem {

/// Square matrix whose only non-zero entries sit on three adjacent
/// anti-diagonals: (i, j) with i + j in {offset, offset + 1, offset + 2}
/// (0-based). Storage is three values per row.
class AntiBandMatrix {
public:
    AntiBandMatrix() = default;
    AntiBandMatrix(std::size_t size, std::ptrdiff_t offset);

    std::size_t size() const { return size_; }
    std::ptrdiff_t offset() const { return offset_; }

    bool in_band(std::size_t i, std::size_t j) const;

    /// Zero outside the band.
    double operator()(std::size_t i, std::size_t j) const;

    /// Throws std::out_of_range outside the band.
    double& at(std::size_t i, std::size_t j);

    std::vector<double> multiply(std::span<const double> x) const;

    /// Row-major dense copy.
    std::vector<double> to_dense() const;

private:
    std::size_t slot(std::size_t i, std::size_t j) const;

    std::size_t size_ = 0;
    std::ptrdiff_t offset_ = 0;
    std::vector<double> values_;  // 3 per row
};

/// Assembled (n+1)x(n+1) system. Row 0 of the load holds only F^{n-1}_1:
/// its -m u'(horizon) part is unknown (flagged) and recovered after the solve.
struct GlobalSystem {
    AntiBandMatrix matrix;
    std::vector<double> load;
    bool final_momentum_unknown = true;
    double mass = 1.0;

    std::size_t element_count() const { return load.empty() ? 0 : load.size() - 1; }
};

/// n x n system for U_1..U_n after U_0 = u0 is imposed.
struct ReducedSystem {
    AntiBandMatrix matrix;
    std::vector<double> load;
    double u0 = 0.0;
};

GlobalSystem assemble_global(const Mesh& mesh, const OscillatorProblem& problem,
                             const QuadratureSpec& quad = {});

ReducedSystem impose_initial_conditions(const GlobalSystem& gs, double u0);

/// Builds the same system from the global hat functions, using closed forms
/// for [N_i, N_j] and [N_i', N_j'] and quadrature for [f, N_i]. Requires a
/// palindromic mesh.
GlobalSystem global_system_direct(const Mesh& mesh, const OscillatorProblem& problem,
                                  const QuadratureSpec& quad = {});

/// Global hat function N_i and its derivative (0-based node index).
double hat_value(const Mesh& mesh, std::size_t i, double s);
double hat_derivative(const Mesh& mesh, std::size_t i, double s);

/// [N_i, N_j](horizon), closed form. Non-zero only for i + j in {n-1, n, n+1}.
double hat_convolution(const Mesh& mesh, std::size_t i, std::size_t j);

/// [N_i', N_j'](horizon), closed form.
double hat_derivative_convolution(const Mesh& mesh, std::size_t i, std::size_t j);

/// The same two quantities by quadrature, split at every node and mirrored node.
double hat_convolution_quadrature(const Mesh& mesh, std::size_t i, std::size_t j,
                                  const QuadratureSpec& quad = {});
double hat_derivative_convolution_quadrature(const Mesh& mesh, std::size_t i, std::size_t j,
                                             const QuadratureSpec& quad = {});

/// [f, N_i](horizon) by quadrature.
double forcing_hat_convolution(const Mesh& mesh, const Forcing& forcing, std::size_t i,
                               const QuadratureSpec& quad = {});

/// B(x, y) = sum_i x_i y_{N-1-i}.
double bilinear_B(std::span<const double> x, std::span<const double> y);

/// Discrete functional 1/2 U^T K U - F^T U over all n+1 nodal values, built
/// from the direct global matrices. U[0] must equal u0.
double evaluate_global_functional(const Mesh& mesh, const OscillatorProblem& problem,
                                  std::span<const double> displacements,
                                  const QuadratureSpec& quad = {});

}  // namespace convfem
