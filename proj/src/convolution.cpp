#include "convfem/convolution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace convfem {

namespace {

constexpr int kMinGauss = 2;
constexpr int kMaxGauss = 16;

// Newton iteration on P_n with the three-term recurrence.
GaussRule make_gauss_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // Recompute the derivative at the converged root for the weight.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

double integrate_panel(const RealFunction& f, double a, double b, const QuadratureSpec& quad) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    if (quad.rule == QuadratureSpec::Rule::Simpson) {
        return (b - a) / 6.0 * (f(a) + 4.0 * f(mid) + f(b));
    }
    const GaussRule& rule = gauss_legendre(quad.points);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

}  // namespace

QuadratureSpec QuadratureSpec::gauss(int points, int panels) {
    QuadratureSpec q{Rule::GaussLegendre, points, panels};
    q.check();
    return q;
}

QuadratureSpec QuadratureSpec::simpson(int panels) {
    QuadratureSpec q{Rule::Simpson, 0, panels};
    q.check();
    return q;
}

void QuadratureSpec::check() const {
    if (panels < 1) {
        throw std::invalid_argument("quadrature panel count must be at least 1");
    }
    if (rule == Rule::GaussLegendre && (points < kMinGauss || points > kMaxGauss)) {
        throw std::invalid_argument("Gauss-Legendre points per panel must be in [2, 16]");
    }
    if (rule == Rule::Simpson && panels < 2) {
        throw std::invalid_argument("composite Simpson needs at least 2 panels");
    }
}

const GaussRule& gauss_legendre(int points) {
    static const std::array<GaussRule, kMaxGauss + 1> rules = [] {
        std::array<GaussRule, kMaxGauss + 1> r;
        for (int n = kMinGauss; n <= kMaxGauss; ++n) {
            r[n] = make_gauss_rule(n);
        }
        return r;
    }();
    if (points < kMinGauss || points > kMaxGauss) {
        throw std::invalid_argument("Gauss-Legendre points per panel must be in [2, 16]");
    }
    return rules[points];
}

double integrate(const RealFunction& f, double a, double b, const QuadratureSpec& quad) {
    quad.check();
    if (b == a) {
        return 0.0;
    }
    const double h = (b - a) / quad.panels;
    double sum = 0.0;
    for (int p = 0; p < quad.panels; ++p) {
        const double lo = a + p * h;
        const double hi = (p + 1 == quad.panels) ? b : a + (p + 1) * h;
        sum += integrate_panel(f, lo, hi, quad);
    }
    return sum;
}

double integrate_piecewise(const RealFunction& f, double a, double b,
                           std::span<const double> breakpoints, const QuadratureSpec& quad) {
    if (breakpoints.empty()) {
        return integrate(f, a, b, quad);
    }
    // Drop breakpoints outside (a, b) and merge those closer than a few ulps;
    // sliver sub-intervals only add roundoff.
    const double merge = 64.0 * std::numeric_limits<double>::epsilon() *
                         std::max({std::abs(a), std::abs(b), b - a});
    std::vector<double> cuts;
    cuts.reserve(breakpoints.size() + 2);
    cuts.push_back(a);
    std::vector<double> inner(breakpoints.begin(), breakpoints.end());
    std::sort(inner.begin(), inner.end());
    for (double x : inner) {
        if (x - cuts.back() > merge && b - x > merge) {
            cuts.push_back(x);
        }
    }
    cuts.push_back(b);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        sum += integrate(f, cuts[i], cuts[i + 1], quad);
    }
    return sum;
}

double convolve(const RealFunction& g, const RealFunction& h, double t, const QuadratureSpec& quad,
                std::span<const double> breakpoints) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("convolve: t must be positive");
    }
    return convolve_shifted(g, h, 0.0, t, quad, breakpoints);
}

double convolve_shifted(const RealFunction& g, const RealFunction& h, double t1, double t2,
                        const QuadratureSpec& quad, std::span<const double> breakpoints) {
    if (!(t2 > t1)) {
        throw std::invalid_argument("convolve_shifted: t2 must exceed t1");
    }
    if (t1 < 0.0) {
        throw std::invalid_argument("convolve_shifted: t1 must be non-negative");
    }
    const double tau = t2 - t1;
    const auto integrand = [&](double s) { return g(t1 + s) * h(t2 - s); };
    return integrate_piecewise(integrand, 0.0, tau, breakpoints, quad);
}

}  // namespace convfem
