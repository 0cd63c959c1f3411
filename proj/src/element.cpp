#include "convfem/element.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace convfem {

Element Element::make(double left, double right, std::size_t index) {
    if (!(right > left)) {
        throw std::invalid_argument("element must have right > left");
    }
    return Element{left, right, right - left, index};
}

Element Element::from_mesh(const Mesh& mesh, std::size_t e) {
    const auto& s = mesh.nodes();
    if (e + 1 >= s.size()) {
        throw std::out_of_range("element index out of range");
    }
    Element elem{s[e], s[e + 1], mesh.element_length(e), e};
    if (!(elem.length > 0.0)) {
        throw std::invalid_argument("element must have positive length");
    }
    return elem;
}

std::pair<double, double> shape_values(const Element& elem, double s) {
    if (s < elem.left || s > elem.right) {
        throw std::invalid_argument("shape_values: s lies outside the element");
    }
    const double n2 = (s - elem.left) / elem.length;
    const double n1 = (elem.right - s) / elem.length;
    return {n1, n2};
}

std::pair<double, double> shape_derivatives(const Element& elem) {
    return {-1.0 / elem.length, 1.0 / elem.length};
}

LocalSystem local_matrices(const Element& elem, double m, double k) {
    const double tau = elem.length;
    const double mt = m / tau;
    const double kt = k * tau / 3.0;
    LocalSystem ls;
    ls.mass = {{{mt, -mt}, {-mt, mt}}};
    ls.stiffness = {{{0.5 * kt, kt}, {kt, 0.5 * kt}}};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            ls.kcal[i][j] = ls.mass[i][j] + ls.stiffness[i][j];
        }
    }
    return ls;
}

Vec2 local_force_sinusoid_closed(const Element& elem, double f0, double omega) {
    if (!(omega > 0.0)) {
        throw std::invalid_argument("sinusoid frequency must be positive");
    }
    const double tau = elem.length;
    const double jump = std::sin(omega * elem.right) - std::sin(omega * elem.left);
    const double c = f0 / (tau * omega * omega);
    return {-(f0 / omega) * std::cos(omega * elem.right) + c * jump,
            (f0 / omega) * std::cos(omega * elem.left) - c * jump};
}

Vec2 local_force_quadrature(const Element& elem, const Forcing& forcing,
                            const QuadratureSpec& quad) {
    if (forcing.is_zero()) {
        return {0.0, 0.0};
    }
    const auto f = [&](double s) { return forcing(s); };
    // N_1, N_2 evaluated off the element clamp into [0, 1] so roundoff at the
    // ends cannot throw.
    const auto n1 = [&](double s) {
        return std::clamp((elem.right - s) / elem.length, 0.0, 1.0);
    };
    const auto n2 = [&](double s) {
        return std::clamp((s - elem.left) / elem.length, 0.0, 1.0);
    };
    return {convolve_shifted(f, n1, elem.left, elem.right, quad),
            convolve_shifted(f, n2, elem.left, elem.right, quad)};
}

Vec2 local_force(const Element& elem, const Forcing& forcing, const QuadratureSpec& quad) {
    if (forcing.is_zero()) {
        return {0.0, 0.0};
    }
    if (const auto* sine = forcing.as_sinusoid()) {
        return local_force_sinusoid_closed(elem, sine->amplitude, sine->frequency);
    }
    return local_force_quadrature(elem, forcing, quad);
}

LocalSystem local_system(const Element& elem, const OscillatorProblem& problem,
                         const QuadratureSpec& quad) {
    LocalSystem ls = local_matrices(elem, problem.mass(), problem.stiffness());
    ls.force = local_force(elem, problem.forcing(), quad);
    return ls;
}

double evaluate_local_functional(const Element& elem, const Vec2& u, double m, double k,
                                 const Forcing& forcing, double f1, double f2,
                                 const QuadratureSpec& quad) {
    const LocalSystem ls = local_matrices(elem, m, k);
    const Vec2 force = local_force(elem, forcing, quad);
    double quadratic = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            quadratic += u[i] * ls.kcal[i][j] * u[j];
        }
    }
    return 0.5 * quadratic - (force[0] * u[0] + force[1] * u[1]) - f2 * u[0] + f1 * u[1];
}

}  // namespace convfem
