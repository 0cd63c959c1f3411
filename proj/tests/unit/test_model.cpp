#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "convfem/model.hpp"
#include "meshes.hpp"

namespace convfem {
namespace {

TEST(UniformMesh, TenElementsOnUnitInterval) {
    const Mesh mesh = uniform_mesh(1.0, 10);
    ASSERT_EQ(mesh.nodes().size(), 11u);
    for (std::size_t i = 0; i <= 10; ++i) {
        EXPECT_NEAR(mesh.nodes()[i], 0.1 * i, 1e-15);
    }
    EXPECT_EQ(mesh.nodes().back(), 1.0);
}

TEST(UniformMesh, AllStepsEqual) {
    const Mesh mesh = uniform_mesh(10.0, 1000);
    EXPECT_EQ(mesh.element_count(), 1000u);
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        EXPECT_EQ(mesh.element_length(e), 0.01);
    }
}

TEST(UniformMesh, TwoElements) {
    const Mesh mesh = uniform_mesh(2.0, 2);
    EXPECT_EQ(mesh.nodes(), (std::vector<double>{0.0, 1.0, 2.0}));
    EXPECT_TRUE(validate_mesh(mesh).ok);
}

TEST(UniformMesh, RejectsBadArguments) {
    EXPECT_THROW(uniform_mesh(0.0, 4), std::invalid_argument);
    EXPECT_THROW(uniform_mesh(-1.0, 4), std::invalid_argument);
    EXPECT_THROW(uniform_mesh(1.0, 0), std::invalid_argument);
}

TEST(UniformMesh, AlwaysValid) {
    for (double horizon : {0.3, 1.0, 7.25, 10.0}) {
        for (std::size_t n = 1; n <= 200; ++n) {
            EXPECT_TRUE(validate_mesh(uniform_mesh(horizon, n)).ok) << horizon << " " << n;
        }
    }
}

TEST(ValidateMesh, Examples) {
    EXPECT_TRUE(validate_mesh(Mesh({0.0, 0.1, 0.2})).ok);
    EXPECT_TRUE(validate_mesh(Mesh({0.0, 0.1, 0.3, 0.4})).ok);

    const MeshCheck lopsided = validate_mesh(Mesh({0.0, 0.1, 0.3, 0.5}));
    EXPECT_FALSE(lopsided.ok);
    EXPECT_NE(lopsided.error.find("palindromic"), std::string::npos);

    const MeshCheck backwards = validate_mesh(Mesh({0.0, 0.2, 0.1}));
    EXPECT_FALSE(backwards.ok);
    EXPECT_NE(backwards.error.find("increasing"), std::string::npos);

    EXPECT_FALSE(validate_mesh(Mesh({0.1, 0.2, 0.3})).ok);
    EXPECT_FALSE(validate_mesh(Mesh({0.0})).ok);
    EXPECT_FALSE(validate_mesh(Mesh({0.0, 0.0, 1.0})).ok);
}

TEST(ValidateMesh, OddElementCountWarnsOnly) {
    const MeshCheck odd = validate_mesh(uniform_mesh(1.0, 3));
    EXPECT_TRUE(odd.ok);
    ASSERT_EQ(odd.warnings.size(), 1u);

    const MeshCheck even = validate_mesh(uniform_mesh(1.0, 4));
    EXPECT_TRUE(even.ok);
    EXPECT_TRUE(even.warnings.empty());
}

TEST(ValidateMesh, RequireThrowsMeshError) {
    EXPECT_THROW(require_valid_mesh(Mesh({0.0, 0.2, 0.1})), MeshError);
    EXPECT_NO_THROW(require_valid_mesh(uniform_mesh(3.0, 6)));
}

TEST(ValidateMesh, ReversedLengthsOfPalindromicMeshUnchanged) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 17;
        const Mesh mesh = testing::random_dyadic_palindromic_mesh(rng, n);
        ASSERT_TRUE(validate_mesh(mesh).ok);
        for (std::size_t e = 0; e < n; ++e) {
            EXPECT_EQ(mesh.element_length(e), mesh.element_length(n - 1 - e));
        }
    }
}

TEST(NaturalFrequency, Examples) {
    EXPECT_DOUBLE_EQ(natural_frequency(OscillatorProblem(1, 9, 0, 0, 1)), 3.0);
    EXPECT_DOUBLE_EQ(natural_frequency(OscillatorProblem(1, 1, 0, 0, 1)), 1.0);
    EXPECT_DOUBLE_EQ(natural_frequency(OscillatorProblem(4, 9, 0, 0, 1)), 1.5);
}

TEST(OscillatorProblem, RejectsNonPositiveParameters) {
    EXPECT_THROW(OscillatorProblem(0, 9, 0, 0, 1), std::invalid_argument);
    EXPECT_THROW(OscillatorProblem(1, -9, 0, 0, 1), std::invalid_argument);
    EXPECT_THROW(OscillatorProblem(1, 9, 0, 0, 0), std::invalid_argument);
    EXPECT_THROW(OscillatorProblem(1, 9, NAN, 0, 1), std::invalid_argument);
}

TEST(Forcing, Evaluates) {
    EXPECT_EQ(Forcing::zero()(3.7), 0.0);
    EXPECT_TRUE(Forcing{}.is_zero());
    const Forcing sine = Forcing::sinusoid(5.0, 3.6);
    EXPECT_DOUBLE_EQ(sine(0.7), 5.0 * std::sin(3.6 * 0.7));
    ASSERT_NE(sine.as_sinusoid(), nullptr);
    const Forcing ramp = Forcing::pointwise([](double s) { return 2.0 * s; });
    EXPECT_DOUBLE_EQ(ramp(1.25), 2.5);
    EXPECT_EQ(ramp.as_sinusoid(), nullptr);
    EXPECT_THROW(Forcing::sinusoid(1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(Forcing::pointwise(nullptr), std::invalid_argument);
}

}  // namespace
}  // namespace convfem
