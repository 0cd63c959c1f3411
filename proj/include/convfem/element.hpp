#pragma once

#include <array>
#include <cstddef>
#include <utility>

#include "convfem/convolution.hpp"
#include "convfem/model.hpp"

namespace convfem {

using Vec2 = std::array<double, 2>;
using Mat2 = std::array<std::array<double, 2>, 2>;

/// One time element [left, right]; `index` is its 0-based position in the mesh.
struct Element {
    double left = 0.0;
    double right = 0.0;
    double length = 0.0;
    std::size_t index = 0;

    static Element make(double left, double right, std::size_t index = 0);
    static Element from_mesh(const Mesh& mesh, std::size_t e);
};

/// Element matrices of the convolutional functional and the element load.
///
///   mass      = m [N_i', N_j']   = (m / tau) [[1, -1], [-1, 1]]
///   stiffness = k [N_i,  N_j ]   = (k tau / 3) [[1/2, 1], [1, 1/2]]
///   kcal      = mass + stiffness
///
/// where [., .] is the element convolution over [left, right]. Both matrices
/// are symmetric and persymmetric.
struct LocalSystem {
    Mat2 kcal{};
    Mat2 mass{};
    Mat2 stiffness{};
    Vec2 force{};
};

/// (N_1(s), N_2(s)) of the linear hat pair; throws if s is outside the element.
std::pair<double, double> shape_values(const Element& elem, double s);

/// (N_1', N_2') = (-1/tau, 1/tau).
std::pair<double, double> shape_derivatives(const Element& elem);

/// Matrices only; the force entry is zero. m = 0 or k = 0 is accepted here.
LocalSystem local_matrices(const Element& elem, double m, double k);

/// F_i = int_0^tau f(left + s) N_i(right - s) ds. Sinusoids use the closed
/// form, pointwise forcings the quadrature.
Vec2 local_force(const Element& elem, const Forcing& forcing, const QuadratureSpec& quad = {});

/// Same integral evaluated by quadrature for any forcing.
Vec2 local_force_quadrature(const Element& elem, const Forcing& forcing,
                            const QuadratureSpec& quad = {});

/// Closed form of the element load for f(s) = f0 sin(Omega s).
Vec2 local_force_sinusoid_closed(const Element& elem, double f0, double omega);

LocalSystem local_system(const Element& elem, const OscillatorProblem& problem,
                         const QuadratureSpec& quad = {});

/// I^e(u) = 1/2 u^T Kcal u - F^T u - f2 u1 + f1 u2, with f1, f2 the weights of
/// the Dirac terms at the left and right ends. Its stationary point solves
/// Kcal u = F + (f2, -f1); the element equations used by the marching scheme
/// correspond to f1 = -m u'(left), f2 = -m u'(right).
double evaluate_local_functional(const Element& elem, const Vec2& u, double m, double k,
                                 const Forcing& forcing, double f1, double f2,
                                 const QuadratureSpec& quad = {});

}  // namespace convfem
