#include "convfem/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace convfem {

AntiBandMatrix::AntiBandMatrix(std::size_t size, std::ptrdiff_t offset)
    : size_(size), offset_(offset), values_(3 * size, 0.0) {}

bool AntiBandMatrix::in_band(std::size_t i, std::size_t j) const {
    if (i >= size_ || j >= size_) {
        return false;
    }
    const auto d = static_cast<std::ptrdiff_t>(i + j) - offset_;
    return d >= 0 && d <= 2;
}

std::size_t AntiBandMatrix::slot(std::size_t i, std::size_t j) const {
    return 3 * i + static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i + j) - offset_);
}

double AntiBandMatrix::operator()(std::size_t i, std::size_t j) const {
    return in_band(i, j) ? values_[slot(i, j)] : 0.0;
}

double& AntiBandMatrix::at(std::size_t i, std::size_t j) {
    if (!in_band(i, j)) {
        throw std::out_of_range("entry lies outside the anti-diagonal band");
    }
    return values_[slot(i, j)];
}

std::vector<double> AntiBandMatrix::multiply(std::span<const double> x) const {
    if (x.size() != size_) {
        throw std::invalid_argument("AntiBandMatrix::multiply: size mismatch");
    }
    std::vector<double> y(size_, 0.0);
    const auto n = static_cast<std::ptrdiff_t>(size_);
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        for (std::ptrdiff_t d = 0; d < 3; ++d) {
            const std::ptrdiff_t j = offset_ + d - i;
            if (j >= 0 && j < n) {
                y[i] += values_[3 * i + d] * x[j];
            }
        }
    }
    return y;
}

std::vector<double> AntiBandMatrix::to_dense() const {
    std::vector<double> dense(size_ * size_, 0.0);
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = 0; j < size_; ++j) {
            dense[i * size_ + j] = (*this)(i, j);
        }
    }
    return dense;
}

GlobalSystem assemble_global(const Mesh& mesh, const OscillatorProblem& problem,
                             const QuadratureSpec& quad) {
    require_valid_mesh(mesh);
    const std::size_t n = mesh.element_count();
    GlobalSystem gs;
    gs.matrix = AntiBandMatrix(n + 1, static_cast<std::ptrdiff_t>(n) - 1);
    gs.load.assign(n + 1, 0.0);
    gs.mass = problem.mass();

    // Element e couples U_e and U_{e+1}. Its first equation (carrying
    // -m u'(s_{e+1})) pairs with the second equation of element e+1; after the
    // paired equations are summed the order is reversed, so element e lands
    // in rows n-1-e and n-e.
    for (std::size_t e = 0; e < n; ++e) {
        const LocalSystem ls = local_system(Element::from_mesh(mesh, e), problem, quad);
        const std::size_t upper = n - 1 - e;
        const std::size_t lower = n - e;
        gs.matrix.at(upper, e) += ls.kcal[0][0];
        gs.matrix.at(upper, e + 1) += ls.kcal[0][1];
        gs.matrix.at(lower, e) += ls.kcal[1][0];
        gs.matrix.at(lower, e + 1) += ls.kcal[1][1];
        gs.load[upper] += ls.force[0];
        gs.load[lower] += ls.force[1];
    }
    gs.load[n] += problem.mass() * problem.initial_velocity();
    return gs;
}

ReducedSystem impose_initial_conditions(const GlobalSystem& gs, double u0) {
    const std::size_t full = gs.matrix.size();
    if (full < 2 || gs.load.size() != full) {
        throw std::invalid_argument("impose_initial_conditions: malformed global system");
    }
    const std::size_t n = full - 1;
    ReducedSystem rs;
    rs.u0 = u0;
    rs.matrix = AntiBandMatrix(n, gs.matrix.offset() - 2);
    rs.load.resize(n);
    const auto offset = rs.matrix.offset();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::ptrdiff_t d = 0; d < 3; ++d) {
            const std::ptrdiff_t c = offset + d - static_cast<std::ptrdiff_t>(r);
            if (c >= 0 && c < static_cast<std::ptrdiff_t>(n)) {
                const auto cu = static_cast<std::size_t>(c);
                rs.matrix.at(r, cu) = gs.matrix(r + 1, cu + 1);
            }
        }
        rs.load[r] = gs.load[r + 1] - gs.matrix(r + 1, 0) * u0;
    }
    return rs;
}

namespace {

// Length of element e, or 0 for the virtual elements beyond either end.
double length_or_zero(const Mesh& mesh, std::ptrdiff_t e) {
    if (e < 0 || e >= static_cast<std::ptrdiff_t>(mesh.element_count())) {
        return 0.0;
    }
    return mesh.element_length(static_cast<std::size_t>(e));
}

double inverse_length_or_zero(const Mesh& mesh, std::ptrdiff_t e) {
    const double tau = length_or_zero(mesh, e);
    return tau > 0.0 ? 1.0 / tau : 0.0;
}

std::vector<double> mirrored_breakpoints(const Mesh& mesh) {
    const auto& s = mesh.nodes();
    const double t = mesh.horizon();
    std::vector<double> cuts;
    cuts.reserve(2 * s.size());
    for (double x : s) {
        cuts.push_back(x);
        cuts.push_back(t - x);
    }
    return cuts;
}

}  // namespace

double hat_value(const Mesh& mesh, std::size_t i, double s) {
    const auto& x = mesh.nodes();
    if (i >= x.size()) {
        throw std::out_of_range("hat_value: node index out of range");
    }
    if (i > 0 && s >= x[i - 1] && s <= x[i]) {
        return (s - x[i - 1]) / (x[i] - x[i - 1]);
    }
    if (i + 1 < x.size() && s >= x[i] && s <= x[i + 1]) {
        return (x[i + 1] - s) / (x[i + 1] - x[i]);
    }
    return 0.0;
}

double hat_derivative(const Mesh& mesh, std::size_t i, double s) {
    const auto& x = mesh.nodes();
    if (i >= x.size()) {
        throw std::out_of_range("hat_derivative: node index out of range");
    }
    if (i > 0 && s > x[i - 1] && s < x[i]) {
        return 1.0 / (x[i] - x[i - 1]);
    }
    if (i + 1 < x.size() && s > x[i] && s < x[i + 1]) {
        return -1.0 / (x[i + 1] - x[i]);
    }
    return 0.0;
}

// On a palindromic mesh N_j(t - s) = N_{n-j}(s), so the convolution reduces to
// the L2 product (N_i, N_{n-j}), non-zero only when the nodes i and n-j
// coincide or are neighbours.
double hat_convolution(const Mesh& mesh, std::size_t i, std::size_t j) {
    const auto n = static_cast<std::ptrdiff_t>(mesh.element_count());
    const auto ii = static_cast<std::ptrdiff_t>(i);
    const std::ptrdiff_t mirror = n - static_cast<std::ptrdiff_t>(j);
    if (mirror == ii) {
        return (length_or_zero(mesh, ii - 1) + length_or_zero(mesh, ii)) / 3.0;
    }
    if (mirror == ii + 1) {
        return length_or_zero(mesh, ii) / 6.0;
    }
    if (mirror == ii - 1) {
        return length_or_zero(mesh, ii - 1) / 6.0;
    }
    return 0.0;
}

// N_j'(t - s) = -N_{n-j}'(s): every entry is minus the L2 product of the
// derivatives.
double hat_derivative_convolution(const Mesh& mesh, std::size_t i, std::size_t j) {
    const auto n = static_cast<std::ptrdiff_t>(mesh.element_count());
    const auto ii = static_cast<std::ptrdiff_t>(i);
    const std::ptrdiff_t mirror = n - static_cast<std::ptrdiff_t>(j);
    if (mirror == ii) {
        return -(inverse_length_or_zero(mesh, ii - 1) + inverse_length_or_zero(mesh, ii));
    }
    if (mirror == ii + 1) {
        return inverse_length_or_zero(mesh, ii);
    }
    if (mirror == ii - 1) {
        return inverse_length_or_zero(mesh, ii - 1);
    }
    return 0.0;
}

double hat_convolution_quadrature(const Mesh& mesh, std::size_t i, std::size_t j,
                                  const QuadratureSpec& quad) {
    const auto cuts = mirrored_breakpoints(mesh);
    return convolve([&](double s) { return hat_value(mesh, i, s); },
                    [&](double s) { return hat_value(mesh, j, s); }, mesh.horizon(), quad, cuts);
}

double hat_derivative_convolution_quadrature(const Mesh& mesh, std::size_t i, std::size_t j,
                                             const QuadratureSpec& quad) {
    const auto cuts = mirrored_breakpoints(mesh);
    return convolve([&](double s) { return hat_derivative(mesh, i, s); },
                    [&](double s) { return hat_derivative(mesh, j, s); }, mesh.horizon(), quad,
                    cuts);
}

double forcing_hat_convolution(const Mesh& mesh, const Forcing& forcing, std::size_t i,
                               const QuadratureSpec& quad) {
    if (forcing.is_zero()) {
        return 0.0;
    }
    const auto& x = mesh.nodes();
    const double t = mesh.horizon();
    // N_i(t - s) is supported on s in [t - x_{i+1}, t - x_{i-1}], kinked at t - x_i.
    const double lo = (i + 1 < x.size()) ? t - x[i + 1] : 0.0;
    const double hi = (i > 0) ? t - x[i - 1] : t;
    const double a = std::max(0.0, lo);
    const double b = std::min(t, hi);
    if (!(b > a)) {
        return 0.0;
    }
    const double kink[] = {t - x[i]};
    return integrate_piecewise(
        [&](double s) { return forcing(s) * hat_value(mesh, i, t - s); }, a, b, kink, quad);
}

GlobalSystem global_system_direct(const Mesh& mesh, const OscillatorProblem& problem,
                                  const QuadratureSpec& quad) {
    require_valid_mesh(mesh);
    const std::size_t n = mesh.element_count();
    GlobalSystem gs;
    gs.matrix = AntiBandMatrix(n + 1, static_cast<std::ptrdiff_t>(n) - 1);
    gs.load.assign(n + 1, 0.0);
    gs.mass = problem.mass();
    for (std::size_t i = 0; i <= n; ++i) {
        // Row i is non-zero only in columns n-1-i, n-i and n+1-i.
        for (std::size_t j = (i + 1 >= n ? 0 : n - 1 - i); j <= std::min(n, n + 1 - i); ++j) {
            gs.matrix.at(i, j) = problem.mass() * hat_derivative_convolution(mesh, i, j) +
                                 problem.stiffness() * hat_convolution(mesh, i, j);
        }
        gs.load[i] = forcing_hat_convolution(mesh, problem.forcing(), i, quad);
    }
    // [m v0 delta, N_i] = m v0 N_i(t): only the last hat is non-zero at t.
    gs.load[n] += problem.mass() * problem.initial_velocity();
    return gs;
}

double bilinear_B(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("bilinear_B: length mismatch");
    }
    const std::size_t n = x.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += x[i] * y[n - 1 - i];
    }
    return sum;
}

double evaluate_global_functional(const Mesh& mesh, const OscillatorProblem& problem,
                                  std::span<const double> displacements,
                                  const QuadratureSpec& quad) {
    if (displacements.size() != mesh.element_count() + 1) {
        throw std::invalid_argument("evaluate_global_functional: need n+1 nodal values");
    }
    if (displacements[0] != problem.initial_displacement()) {
        throw std::invalid_argument("evaluate_global_functional: U[0] must equal u0");
    }
    const GlobalSystem gs = global_system_direct(mesh, problem, quad);
    const std::vector<double> ku = gs.matrix.multiply(displacements);
    double value = 0.0;
    for (std::size_t i = 0; i < displacements.size(); ++i) {
        value += 0.5 * displacements[i] * ku[i] - gs.load[i] * displacements[i];
    }
    return value;
}

}  // namespace convfem
