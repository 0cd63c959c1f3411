#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "convfem/convolution.hpp"
#include "convfem/element.hpp"
#include "convfem/marching.hpp"
#include "meshes.hpp"

namespace convfem {
namespace {

// Element load for f(s) = f0 cos(Omega s), derived by parts like the sine case.
Vec2 cosine_force_closed(const Element& elem, double f0, double omega) {
    const double tau = elem.length;
    const double jump = std::cos(omega * elem.right) - std::cos(omega * elem.left);
    const double c = f0 / (tau * omega * omega);
    return {(f0 / omega) * std::sin(omega * elem.right) + c * jump,
            -(f0 / omega) * std::sin(omega * elem.left) - c * jump};
}

TEST(ShapeFunctions, ValuesAndDerivatives) {
    const Element elem = Element::make(0.0, 0.1);
    auto [a, b] = shape_values(elem, 0.0);
    EXPECT_EQ(a, 1.0);
    EXPECT_EQ(b, 0.0);
    std::tie(a, b) = shape_values(elem, 0.05);
    EXPECT_NEAR(a, 0.5, 1e-15);
    EXPECT_NEAR(b, 0.5, 1e-15);
    std::tie(a, b) = shape_values(elem, 0.1);
    EXPECT_EQ(a, 0.0);
    EXPECT_EQ(b, 1.0);

    const auto [d1, d2] = shape_derivatives(Element::make(2.0, 2.5));
    EXPECT_DOUBLE_EQ(d1, -2.0);
    EXPECT_DOUBLE_EQ(d2, 2.0);

    EXPECT_THROW(shape_values(elem, 0.2), std::invalid_argument);
    EXPECT_THROW(shape_values(elem, -0.01), std::invalid_argument);
    EXPECT_THROW(Element::make(1.0, 1.0), std::invalid_argument);
}

TEST(ShapeFunctions, PartitionOfUnity) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double left = 10 * u(rng);
        const Element elem = Element::make(left, left + 0.01 + u(rng));
        const double s = elem.left + u(rng) * elem.length;
        const auto [a, b] = shape_values(elem, s);
        EXPECT_NEAR(a + b, 1.0, 1e-14);
    }
}

TEST(LocalMatrices, TenthStepExample) {
    const LocalSystem ls = local_matrices(Element::make(0.0, 0.1), 1.0, 9.0);
    EXPECT_NEAR(ls.mass[0][0], 10.0, 1e-12);
    EXPECT_NEAR(ls.mass[0][1], -10.0, 1e-12);
    EXPECT_NEAR(ls.stiffness[0][0], 0.15, 1e-12);
    EXPECT_NEAR(ls.stiffness[0][1], 0.3, 1e-12);
    EXPECT_NEAR(ls.kcal[0][0], 10.15, 1e-12);
    EXPECT_NEAR(ls.kcal[1][1], 10.15, 1e-12);
    EXPECT_NEAR(ls.kcal[0][1], -9.7, 1e-12);
    EXPECT_NEAR(ls.kcal[1][0], -9.7, 1e-12);
    EXPECT_EQ(ls.force, (Vec2{0.0, 0.0}));
}

TEST(LocalMatrices, MassOnlyAndStiffnessOnly) {
    const LocalSystem mass_only = local_matrices(Element::make(0.0, 1.0), 1.0, 0.0);
    EXPECT_EQ(mass_only.kcal, (Mat2{{{1.0, -1.0}, {-1.0, 1.0}}}));
    const LocalSystem stiff_only = local_matrices(Element::make(0.0, 1.0), 0.0, 3.0);
    EXPECT_EQ(stiff_only.kcal, (Mat2{{{0.5, 1.0}, {1.0, 0.5}}}));
}

TEST(LocalMatrices, AgreeWithElementConvolutions) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        const double left = 20 * u(rng);
        const double tau = 0.005 + 0.9 * u(rng);
        const Element elem = Element::make(left, left + tau);
        const double m = 0.1 + 5 * u(rng);
        const double k = 0.1 + 50 * u(rng);
        const LocalSystem ls = local_matrices(elem, m, k);

        const auto shape = [&](int i) {
            return [&, i](double s) {
                const double v = (elem.right - s) / tau;
                return i == 0 ? v : 1.0 - v;
            };
        };
        const auto slope = [&](int i) {
            return [tau, i](double) { return i == 0 ? -1.0 / tau : 1.0 / tau; };
        };
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                const double kk = k * convolve_shifted(shape(i), shape(j), elem.left, elem.right);
                const double mm = m * convolve_shifted(slope(i), slope(j), elem.left, elem.right);
                EXPECT_NEAR(ls.stiffness[i][j], kk, 1e-12 * (1 + std::abs(kk)));
                EXPECT_NEAR(ls.mass[i][j], mm, 1e-12 * (1 + std::abs(mm)));
            }
        }
    }
}

TEST(LocalMatrices, SymmetricAndPersymmetricOnDyadicMeshes) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const Mesh mesh = testing::random_dyadic_palindromic_mesh(rng, 1 + trial % 12);
        for (std::size_t e = 0; e < mesh.element_count(); ++e) {
            const LocalSystem ls = local_matrices(Element::from_mesh(mesh, e), 2.0, 5.0);
            EXPECT_EQ(ls.kcal[0][1], ls.kcal[1][0]);
            EXPECT_EQ(ls.kcal[0][0], ls.kcal[1][1]);
            EXPECT_EQ(ls.mass[0][1], ls.mass[1][0]);
            EXPECT_EQ(ls.stiffness[0][0], ls.stiffness[1][1]);
        }
    }
}

TEST(LocalForce, ZeroForcing) {
    const Vec2 f = local_force(Element::make(0.0, 0.3), Forcing::zero());
    EXPECT_EQ(f, (Vec2{0.0, 0.0}));
    const Vec2 g = local_force_sinusoid_closed(Element::make(0.0, 0.3), 0.0, 2.0);
    EXPECT_EQ(g, (Vec2{0.0, 0.0}));
}

TEST(LocalForce, ConstantForcingSplitsEvenly) {
    const Element elem = Element::make(1.0, 1.4);
    const Vec2 f = local_force(elem, Forcing::pointwise([](double) { return 3.0; }));
    EXPECT_NEAR(f[0], 0.6, 1e-14);
    EXPECT_NEAR(f[1], 0.6, 1e-14);
}

TEST(LocalForce, SinusoidFirstElementValues) {
    const Vec2 f = local_force(Element::make(0.0, 0.1), Forcing::sinusoid(5.0, 3.6));
    EXPECT_NEAR(f[0], 0.0592259906, 1e-9);
    EXPECT_NEAR(f[1], 0.0298061988, 1e-9);
    EXPECT_NEAR(f[0] + f[1], 0.0890321893, 1e-9);
}

TEST(LocalForce, SinusoidClosedFormMatchesQuadrature) {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double left = 10 * u(rng);
        const double tau = 0.01 + 0.49 * u(rng);
        const Element elem = Element::make(left, left + tau);
        const double f0 = -5 + 10 * u(rng);
        const double omega = 20 * (1 - u(rng));  // (0, 20]
        const Vec2 closed = local_force_sinusoid_closed(elem, f0, omega);
        const Vec2 quad =
            local_force_quadrature(elem, Forcing::sinusoid(f0, omega), QuadratureSpec::gauss(8, 8));
        EXPECT_NEAR(closed[0], quad[0], 1e-10);
        EXPECT_NEAR(closed[1], quad[1], 1e-10);
        // F1 + F2 = int f over the element.
        EXPECT_NEAR(closed[0] + closed[1],
                    (f0 / omega) * (std::cos(omega * elem.left) - std::cos(omega * elem.right)),
                    1e-10);
    }
}

TEST(LocalForce, CosineClosedFormMatchesQuadrature) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double left = 10 * u(rng);
        const Element elem = Element::make(left, left + 0.01 + 0.49 * u(rng));
        const double f0 = -5 + 10 * u(rng);
        const double omega = 0.05 + 19.95 * u(rng);
        const Vec2 closed = cosine_force_closed(elem, f0, omega);
        const Vec2 quad = local_force_quadrature(
            elem, Forcing::pointwise([=](double s) { return f0 * std::cos(omega * s); }),
            QuadratureSpec::gauss(8, 8));
        EXPECT_NEAR(closed[0], quad[0], 1e-10);
        EXPECT_NEAR(closed[1], quad[1], 1e-10);
    }
}

TEST(LocalForce, RejectsNonPositiveFrequency) {
    EXPECT_THROW(local_force_sinusoid_closed(Element::make(0.0, 1.0), 1.0, 0.0),
                 std::invalid_argument);
    EXPECT_THROW(local_force_sinusoid_closed(Element::make(0.0, 1.0), 1.0, -2.0),
                 std::invalid_argument);
}

TEST(LocalFunctional, HandValues) {
    const Element elem = Element::make(0.0, 1.0);
    EXPECT_EQ(evaluate_local_functional(elem, {0.0, 0.0}, 1.0, 1.0, Forcing::zero(), 0, 0), 0.0);
    // kcal = [[7/6, -2/3], [-2/3, 7/6]]; u = (1, 1): 1/2 (7/3 - 4/3) = 1/2.
    EXPECT_NEAR(evaluate_local_functional(elem, {1.0, 1.0}, 1.0, 1.0, Forcing::zero(), 0, 0), 0.5,
                1e-15);
    // Dirac terms: -f2 u1 + f1 u2.
    EXPECT_NEAR(evaluate_local_functional(elem, {1.0, 1.0}, 1.0, 1.0, Forcing::zero(), 2.0, 3.0),
                0.5 - 3.0 + 2.0, 1e-15);
}

TEST(LocalFunctional, GradientMatchesFiniteDifferences) {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const Forcing forcing = Forcing::sinusoid(2.0, 1.3);
    for (int trial = 0; trial < 20; ++trial) {
        const Element elem = Element::make(1.0, 1.0 + 0.2 + 0.1 * u(rng));
        const double m = 1.5, k = 4.0;
        const double f1 = u(rng), f2 = u(rng);
        const Vec2 x{u(rng), u(rng)};
        LocalSystem ls = local_matrices(elem, m, k);
        const Vec2 load = local_force(elem, forcing);
        const Vec2 grad{ls.kcal[0][0] * x[0] + ls.kcal[0][1] * x[1] - load[0] - f2,
                        ls.kcal[1][0] * x[0] + ls.kcal[1][1] * x[1] - load[1] + f1};
        const double h = 1e-6;
        for (int i = 0; i < 2; ++i) {
            Vec2 xp = x, xm = x;
            xp[i] += h;
            xm[i] -= h;
            const double fd = (evaluate_local_functional(elem, xp, m, k, forcing, f1, f2) -
                               evaluate_local_functional(elem, xm, m, k, forcing, f1, f2)) /
                              (2 * h);
            EXPECT_NEAR(fd, grad[i], 1e-7);
        }
    }
}

// With f1 = -m V_e and f2 = -m V_{e+1}, the marching step lands on the
// stationary point of the element functional.
TEST(LocalFunctional, StationaryAtMarchingStep) {
    const double m = 1.0, k = 9.0;
    const Forcing forcing = Forcing::sinusoid(5.0, 3.6);
    const OscillatorProblem problem(m, k, 0.3, 2.0, 1.0, forcing);
    const Element elem = Element::make(0.4, 0.5);
    const LocalSystem ls = local_system(elem, problem);
    const StateVector start{0.3, 2.0};
    const StateVector next = step(ls, m, start);
    const Vec2 x{start.displacement, next.displacement};
    const double f1 = -m * start.velocity;
    const double f2 = -m * next.velocity;
    const double h = 1e-5;
    for (int i = 0; i < 2; ++i) {
        Vec2 xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        const double fd = (evaluate_local_functional(elem, xp, m, k, forcing, f1, f2) -
                           evaluate_local_functional(elem, xm, m, k, forcing, f1, f2)) /
                          (2 * h);
        EXPECT_NEAR(fd, 0.0, 1e-8);
    }
}

}  // namespace
}  // namespace convfem
