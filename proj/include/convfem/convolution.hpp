#pragma once

#include <functional>
#include <span>
#include <vector>

namespace convfem {

using RealFunction = std::function<double(double)>;

/// Composite quadrature rule: the interval is split into `panels` equal
/// panels and each is integrated with either an n-point Gauss-Legendre rule
/// or a single Simpson 1/3 application.
struct QuadratureSpec {
    enum class Rule { GaussLegendre, Simpson };

    Rule rule = Rule::GaussLegendre;
    int points = 5;  // Gauss points per panel, in [2, 16]; ignored for Simpson
    int panels = 8;

    static QuadratureSpec gauss(int points, int panels);
    static QuadratureSpec simpson(int panels);

    /// Throws std::invalid_argument when the invariants do not hold.
    void check() const;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int points);

double integrate(const RealFunction& f, double a, double b, const QuadratureSpec& quad = {});

/// Integrates over [a, b] with every breakpoint inside (a, b) starting a new
/// sub-interval, so integrands with kinks at the breakpoints stay accurate.
double integrate_piecewise(const RealFunction& f, double a, double b,
                           std::span<const double> breakpoints, const QuadratureSpec& quad = {});

/// [g, h](t) = int_0^t g(s) h(t - s) ds.
double convolve(const RealFunction& g, const RealFunction& h, double t,
                const QuadratureSpec& quad = {}, std::span<const double> breakpoints = {});

/// [g, h]_{t1}^{t2} = int_0^tau g(t1 + s) h(t2 - s) ds, tau = t2 - t1.
/// Breakpoints are given in the local variable s in (0, tau).
double convolve_shifted(const RealFunction& g, const RealFunction& h, double t1, double t2,
                        const QuadratureSpec& quad = {}, std::span<const double> breakpoints = {});

}  // namespace convfem
