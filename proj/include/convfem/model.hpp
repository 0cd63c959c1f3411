#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace convfem {

// Forcing terms f(s) of m u'' + k u = f.

struct ZeroForcing {};

struct SinusoidForcing {
    double amplitude = 0.0;  // f0
    double frequency = 1.0;  // Omega, > 0
};

struct PointwiseForcing {
    std::function<double(double)> fn;
};

class Forcing {
public:
    using Variant = std::variant<ZeroForcing, SinusoidForcing, PointwiseForcing>;

    Forcing() = default;

    static Forcing zero() { return Forcing{}; }
    static Forcing sinusoid(double amplitude, double frequency);
    static Forcing pointwise(std::function<double(double)> fn);

    double operator()(double s) const;

    bool is_zero() const { return std::holds_alternative<ZeroForcing>(v_); }
    const SinusoidForcing* as_sinusoid() const { return std::get_if<SinusoidForcing>(&v_); }
    const Variant& variant() const { return v_; }

private:
    explicit Forcing(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// Harmonic oscillator initial value problem on [0, horizon]:
///   m u''(s) + k u(s) = f(s),  u(0) = u0,  u'(0) = v0.
/// The constructor rejects non-positive mass, stiffness or horizon.
class OscillatorProblem {
public:
    OscillatorProblem(double mass, double stiffness, double initial_displacement,
                      double initial_velocity, double horizon, Forcing forcing = {});

    double mass() const { return mass_; }
    double stiffness() const { return stiffness_; }
    double initial_displacement() const { return u0_; }
    double initial_velocity() const { return v0_; }
    double horizon() const { return horizon_; }
    const Forcing& forcing() const { return forcing_; }

private:
    double mass_;
    double stiffness_;
    double u0_;
    double v0_;
    double horizon_;
    Forcing forcing_;
};

double natural_frequency(const OscillatorProblem& problem);

/// Partition 0 = s_0 < s_1 < ... < s_n = horizon of the time interval.
///
/// A Mesh is a plain value; validity (monotone nodes, palindromic element
/// lengths) is checked by validate_mesh and enforced by the operations that
/// consume a mesh. Uniform meshes remember their step so that every element
/// reports the identical length.
class Mesh {
public:
    Mesh() = default;
    explicit Mesh(std::vector<double> nodes) : nodes_(std::move(nodes)) {}

    static Mesh uniform_from_step(double step, std::size_t element_count);
    /// Nodes of a uniform partition whose elements all report length `step`.
    static Mesh with_uniform_step(std::vector<double> nodes, double step);

    const std::vector<double>& nodes() const { return nodes_; }
    std::size_t element_count() const { return nodes_.empty() ? 0 : nodes_.size() - 1; }
    double horizon() const { return nodes_.empty() ? 0.0 : nodes_.back(); }
    std::optional<double> uniform_step() const { return step_; }

    /// Length of element e (0-based).
    double element_length(std::size_t e) const;

private:
    std::vector<double> nodes_;
    std::optional<double> step_;
};

Mesh uniform_mesh(double horizon, std::size_t n);

struct MeshCheck {
    bool ok = true;
    std::string error;
    std::vector<std::string> warnings;

    explicit operator bool() const { return ok; }
};

MeshCheck validate_mesh(const Mesh& mesh);

/// Throws MeshError when validate_mesh fails.
void require_valid_mesh(const Mesh& mesh);

class MeshError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace convfem
