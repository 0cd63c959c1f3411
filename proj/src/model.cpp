#include "convfem/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace convfem {

Forcing Forcing::sinusoid(double amplitude, double frequency) {
    if (!(frequency > 0.0) || !std::isfinite(frequency)) {
        throw std::invalid_argument("sinusoid forcing frequency must be positive");
    }
    return Forcing{SinusoidForcing{amplitude, frequency}};
}

Forcing Forcing::pointwise(std::function<double(double)> fn) {
    if (!fn) {
        throw std::invalid_argument("pointwise forcing needs a callable");
    }
    return Forcing{PointwiseForcing{std::move(fn)}};
}

double Forcing::operator()(double s) const {
    struct Eval {
        double s;
        double operator()(const ZeroForcing&) const { return 0.0; }
        double operator()(const SinusoidForcing& f) const {
            return f.amplitude * std::sin(f.frequency * s);
        }
        double operator()(const PointwiseForcing& f) const { return f.fn(s); }
    };
    return std::visit(Eval{s}, v_);
}

OscillatorProblem::OscillatorProblem(double mass, double stiffness, double initial_displacement,
                                     double initial_velocity, double horizon, Forcing forcing)
    : mass_(mass),
      stiffness_(stiffness),
      u0_(initial_displacement),
      v0_(initial_velocity),
      horizon_(horizon),
      forcing_(std::move(forcing)) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw std::invalid_argument("mass must be positive and finite");
    }
    if (!(stiffness > 0.0) || !std::isfinite(stiffness)) {
        throw std::invalid_argument("stiffness must be positive and finite");
    }
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw std::invalid_argument("horizon must be positive and finite");
    }
    if (!std::isfinite(initial_displacement) || !std::isfinite(initial_velocity)) {
        throw std::invalid_argument("initial data must be finite");
    }
    if (!std::isfinite(std::sqrt(stiffness / mass))) {
        throw std::invalid_argument("natural frequency is not finite");
    }
}

double natural_frequency(const OscillatorProblem& problem) {
    return std::sqrt(problem.stiffness() / problem.mass());
}

Mesh Mesh::uniform_from_step(double step, std::size_t element_count) {
    if (!(step > 0.0) || element_count == 0) {
        throw std::invalid_argument("uniform mesh needs a positive step and at least one element");
    }
    std::vector<double> nodes(element_count + 1);
    for (std::size_t i = 0; i <= element_count; ++i) {
        nodes[i] = static_cast<double>(i) * step;
    }
    return with_uniform_step(std::move(nodes), step);
}

Mesh Mesh::with_uniform_step(std::vector<double> nodes, double step) {
    Mesh mesh(std::move(nodes));
    mesh.step_ = step;
    return mesh;
}

double Mesh::element_length(std::size_t e) const {
    if (e + 1 >= nodes_.size()) {
        throw std::out_of_range("element index out of range");
    }
    if (step_) {
        return *step_;
    }
    return nodes_[e + 1] - nodes_[e];
}

Mesh uniform_mesh(double horizon, std::size_t n) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw std::invalid_argument("uniform_mesh: horizon must be positive");
    }
    if (n == 0) {
        throw std::invalid_argument("uniform_mesh: element count must be at least 1");
    }
    // horizon * i / n keeps the last node exactly at the horizon.
    std::vector<double> nodes(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        nodes[i] = horizon * static_cast<double>(i) / static_cast<double>(n);
    }
    return Mesh::with_uniform_step(std::move(nodes), horizon / static_cast<double>(n));
}

MeshCheck validate_mesh(const Mesh& mesh) {
    MeshCheck check;
    const auto& s = mesh.nodes();
    auto fail = [&](std::string msg) {
        check.ok = false;
        check.error = std::move(msg);
        return check;
    };
    if (s.size() < 2) {
        return fail("mesh needs at least two nodes");
    }
    if (s.front() != 0.0) {
        return fail("first node must be 0");
    }
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (!std::isfinite(s[i + 1]) || !(s[i + 1] > s[i])) {
            return fail("nodes must be strictly increasing (at node " + std::to_string(i + 1) + ")");
        }
    }
    const std::size_t n = s.size() - 1;
    double longest = 0.0;
    for (std::size_t e = 0; e < n; ++e) {
        longest = std::max(longest, s[e + 1] - s[e]);
    }
    const double tol = 1e-10 * longest;
    for (std::size_t e = 0; e < n / 2; ++e) {
        const double a = s[e + 1] - s[e];
        const double b = s[n - e] - s[n - e - 1];
        if (std::abs(a - b) > tol) {
            return fail("element lengths are not palindromic (elements " + std::to_string(e) + " and " +
                        std::to_string(n - 1 - e) + ")");
        }
    }
    if (n % 2 == 1) {
        check.warnings.emplace_back("odd element count " + std::to_string(n) +
                                    ": no node at the interval midpoint");
    }
    return check;
}

void require_valid_mesh(const Mesh& mesh) {
    const MeshCheck check = validate_mesh(mesh);
    if (!check.ok) {
        throw MeshError(check.error);
    }
}

}  // namespace convfem
