#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qcf/errors.hpp"
#include "qcf/models.hpp"
#include "qcf/quantum_oracle.hpp"
#include "random_models.hpp"

namespace qcf {
namespace {

using binary::flip;
using binary::identity;
using binary::reset0;
using binary::reset1;

const Rational half(1, 2);

TEST(Amplitudes, Validation) {
    EXPECT_THROW(Amplitudes({1.0, 1.0}), ContractError);
    EXPECT_NO_THROW(Amplitudes({Complex(0, 1)}));
    EXPECT_THROW(Amplitudes::basis(2, 2), DomainError);
    EXPECT_NEAR(std::norm(Amplitudes::uniform(3)[2]), 1.0 / 3, 1e-15);
}

TEST(DensityMatrix, Validation) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = 1;
    EXPECT_NO_THROW(DensityMatrix{m});
    m(0, 1) = 0.5;
    EXPECT_THROW(DensityMatrix{m}, ValidationError);  // not Hermitian
    m(1, 0) = 0.5;
    EXPECT_THROW(DensityMatrix{m}, ValidationError);  // Hermitian, but negative eigenvalue
    m = Eigen::MatrixXcd::Identity(2, 2);
    EXPECT_THROW(DensityMatrix{m}, ValidationError);  // trace 2
}

TEST(Oracle, BasisInputsGiveConditionals) {
    const auto mix_r = FunctionDistribution::uniform_over(2, 2, {reset0(), reset1()});
    const auto rho = build_rho_xy(mix_r, Amplitudes::basis(2, 1));
    EXPECT_NEAR(measure(rho, MeasurementEffect::output_equals(2, 2, 0)), 0.5, 1e-12);
    const auto psi = apply_oracle(identity(), Amplitudes::basis(2, 1));
    EXPECT_NEAR(std::abs(psi(3)), 1.0, 1e-15);
}

TEST(Oracle, BellStatistics) {
    auto bell = [](const FunctionDistribution& pF) { return binary_statistics(pF).bell; };
    EXPECT_NEAR(bell(FunctionDistribution::point_mass(identity())), 1.0, 1e-12);
    EXPECT_NEAR(bell(FunctionDistribution::point_mass(flip())), 0.0, 1e-12);
    EXPECT_NEAR(bell(models::uniform_all(2, 2)), 3.0 / 8, 1e-12);
    EXPECT_NEAR(bell(FunctionDistribution::uniform_over(2, 2, {identity(), flip()})), 0.5, 1e-12);
    EXPECT_NEAR(bell(FunctionDistribution::uniform_over(2, 2, {reset0(), reset1()})), 0.25, 1e-12);
    EXPECT_THROW(binary_statistics(models::uniform_all(3, 2)), UnsupportedError);
}

TEST(SolveBinary, Examples) {
    EXPECT_EQ(solve_binary_pF(half, half, Rational(3, 8)), models::uniform_all(2, 2));
    EXPECT_EQ(solve_binary_pF(1.0, 0.0, 1.0), FunctionDistribution::point_mass(identity()));
    EXPECT_EQ(solve_binary_pF(half, half, half), FunctionDistribution::uniform_over(2, 2, {identity(), flip()}));
    EXPECT_EQ(solve_binary_pF(half, half, Rational(1, 4)),
              FunctionDistribution::uniform_over(2, 2, {reset0(), reset1()}));
    // Bell probability 1 is impossible when p(Y=0|do 1) = 1.
    EXPECT_THROW(solve_binary_pF(1.0, 1.0, 1.0), InconsistencyError);
    EXPECT_THROW(solve_binary_pF(Rational(1), Rational(1), Rational(1)), InconsistencyError);
}

TEST(Extraction, Errors) {
    const auto pF = models::uniform_all(2, 2);
    const auto alpha = Amplitudes::basis(2, 0);
    const auto rho = build_rho_xy(pF, alpha);
    EXPECT_THROW(extract_two_way(rho, alpha, 0, 1, 0, 0), ExtractionError);
    const auto uniform = Amplitudes::uniform(2);
    const auto rho_u = build_rho_xy(pF, uniform);
    EXPECT_THROW(extract_two_way(rho_u, uniform, 0, 2, 0, 0), DomainError);
}

TEST(Json, DensityMatrixRoundTrip) {
    std::mt19937_64 rng(3);
    const auto rho = build_rho_xy(testing::random_distribution(rng, 3, 2), Amplitudes::uniform(3));
    const auto back = density_matrix_from_json(to_json(rho));
    EXPECT_LT((back.entries() - rho.entries()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Sampling, ShotCountsAreSeeded) {
    const auto rho = build_rho_xy(models::uniform_all(2, 2), Amplitudes::uniform(2));
    std::mt19937_64 a(42), b(42);
    const auto effect = MeasurementEffect::bell(0);
    const auto hits = sample_measure(rho, effect, 20000, a);
    EXPECT_EQ(hits, sample_measure(rho, effect, 20000, b));
    const double se = std::sqrt(0.375 * 0.625 / 20000);
    EXPECT_NEAR(static_cast<double>(hits) / 20000, 0.375, 5 * se);
}

Complex random_phase_amplitude(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.2, 1.0), phase(0, 2 * M_PI);
    return std::polar(u(rng), phase(rng));
}

class QuantumProperties : public ::testing::TestWithParam<int> {};

TEST_P(QuantumProperties, StateInvariants) {
    std::mt19937_64 rng(3000 + GetParam());
    const std::size_t n_x = 1 + rng() % 3;
    const std::size_t n_y = 1 + rng() % 3;
    const auto p = testing::random_distribution(rng, n_x, n_y);
    const auto q = testing::random_distribution(rng, n_x, n_y);

    std::vector<Complex> raw(n_x);
    double norm = 0;
    for (auto& a : raw) {
        a = random_phase_amplitude(rng);
        norm += std::norm(a);
    }
    for (auto& a : raw) a /= std::sqrt(norm);
    const Amplitudes alpha(raw);

    const auto rho = build_rho_xy(p, alpha);
    const auto& m = rho.entries();
    EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(m.trace().real(), 1.0, 1e-12);
    EXPECT_GE(rho.min_eigenvalue(), -1e-10);

    // Diagonal reproduces |alpha_x|^2 p(y|x).
    for (std::size_t x = 0; x < n_x; ++x) {
        const auto c = conditional(p, x);
        for (std::size_t y = 0; y < n_y; ++y) {
            EXPECT_NEAR(m(x * n_y + y, x * n_y + y).real(), std::norm(alpha[x]) * to_double(c[y]), 1e-12);
        }
    }

    // Round trip through the matrix elements.
    for (std::size_t x = 0; x < n_x; ++x) {
        for (std::size_t xp = 0; xp < n_x; ++xp) {
            if (x == xp) continue;
            for (std::size_t y = 0; y < n_y; ++y) {
                for (std::size_t yp = 0; yp < n_y; ++yp) {
                    const auto exact = joint_counterfactual(p, CounterfactualQuery({{x, y}, {xp, yp}}));
                    EXPECT_NEAR(extract_two_way(rho, alpha, x, xp, y, yp), to_double(exact), 1e-9);
                }
            }
        }
    }

    // Convexity.
    const Rational lambda(1 + static_cast<long>(rng() % 9), 10);
    std::vector<Rational> mixed(p.table_count());
    for (std::size_t i = 0; i < mixed.size(); ++i) mixed[i] = lambda * p.weight(i) + (1 - lambda) * q.weight(i);
    const auto rho_mix = build_rho_xy(FunctionDistribution(n_x, n_y, mixed), alpha);
    const double l = to_double(lambda);
    const Eigen::MatrixXcd combo = l * rho.entries() + (1 - l) * build_rho_xy(q, alpha).entries();
    EXPECT_LT((rho_mix.entries() - combo).cwiseAbs().maxCoeff(), 1e-12);

    // Point masses are pure.
    const auto f = p.table(p.support().front());
    EXPECT_NEAR(build_rho_xy(FunctionDistribution::point_mass(f), alpha).purity(), 1.0, 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Random, QuantumProperties, ::testing::Range(0, 120));

class BinaryInversion : public ::testing::TestWithParam<int> {};

TEST_P(BinaryInversion, SolveInvertsForwardStatistics) {
    std::mt19937_64 rng(4000 + GetParam());
    const auto pF = testing::random_distribution(rng, 2, 2, 20);
    const auto s = binary_statistics(pF);
    const auto solved = solve_binary_pF(s.c00, s.c01, s.bell);
    for (std::uint64_t i = 0; i < 4; ++i) EXPECT_NEAR(to_double(solved.weight(i)), to_double(pF.weight(i)), 1e-9);
    // Exact statistics from the closed forms invert exactly.
    const Rational c00 = pF.weight(0) + pF.weight(1);
    const Rational c01 = pF.weight(0) + pF.weight(2);
    const Rational bell = pF.weight(1) + (pF.weight(0) + pF.weight(3)) / 4;
    EXPECT_EQ(solve_binary_pF(c00, c01, bell), pF);
}

INSTANTIATE_TEST_SUITE_P(Random, BinaryInversion, ::testing::Range(0, 100));

TEST(InformationCeiling, ModelsAAndBShareRho) {
    for (const auto& alpha : {Amplitudes::uniform(3), Amplitudes({Complex(0.6, 0), Complex(0, 0.48), Complex(0.64, 0)})}) {
        const auto a = build_rho_xy(models::uniform_all(3, 3), alpha);
        const auto b = build_rho_xy(models::affine_mod(3), alpha);
        EXPECT_LT((a.entries() - b.entries()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

}  // namespace
}  // namespace qcf
