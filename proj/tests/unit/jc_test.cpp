// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "oracle_files.hpp"

#include <spinent/errors.hpp>
#include <spinent/jc.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace spinent {
namespace {

using std::numbers::pi;

TEST(JCParams, DerivedQuantities) {
    const JCParams p(1.0, 2.5, 0.2, 1);
    EXPECT_DOUBLE_EQ(p.delta(), 0.5);
    EXPECT_DOUBLE_EQ(p.rabi(), 0.4 * std::sqrt(6.0));
    EXPECT_DOUBLE_EQ(p.generalized_rabi(), std::hypot(0.5, 0.4 * std::sqrt(6.0)));
    EXPECT_THROW(JCParams(1.0, 2.0, 0.1, -1), ValidationError);
    EXPECT_THROW(JCParams(std::nan(""), 2.0, 0.1, 0), ValidationError);
    EXPECT_THROW(JCParams(1.0, 2.0, INFINITY, 0), ValidationError);
}

TEST(HamiltonianBlock, LadderAlgebraAndGap) {
    const auto h = hamiltonian_block(JCParams(0.0, 0.0, 1.0, 0)).matrix();
    EXPECT_NEAR(std::abs(h(0, 1) - std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h(0, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h(1, 1)), 0.0, 1e-15);

    EXPECT_EQ(hamiltonian_block(JCParams(1.0, 2.3, 0.0, 4)).matrix()(0, 1), Complex(0.0));

    const JCParams resonant(1.3, 2.6, 0.17, 3);
    const auto e = eigh(hamiltonian_block(resonant));
    EXPECT_NEAR(e.values[1] - e.values[0], resonant.rabi(), 1e-12);
}

TEST(Analytic, InitialStateAndLimits) {
    const JCParams p(1.0, 2.4, 0.3, 2);
    const auto a0 = analytic_state(p, 0.0);
    EXPECT_EQ(a0.c1, Complex(1.0));
    EXPECT_EQ(a0.c2, Complex(0.0));

    for (double t : {0.5, 3.0, 40.0}) EXPECT_EQ(analytic_state(JCParams(1.0, 2.4, 0.0, 2), t).c2, Complex(0.0));

    const JCParams resonant(1.0, 2.0, 0.25, 0);
    EXPECT_NEAR(std::norm(analytic_state(resonant, pi / resonant.rabi()).c2), 1.0, 1e-14);
}

// Frozen scipy expm(-iHt) of the same 2x2 block.
TEST(Analytic, MatchesMatrixExponentialOracle) {
    for (const auto& line : testing::oracle_lines("jc_expm.txt")) {
        std::istringstream in(line);
        double w, w0, g, t, r1, i1, r2, i2;
        int n;
        in >> w >> w0 >> g >> n >> t >> r1 >> i1 >> r2 >> i2;
        const auto a = analytic_state(JCParams(w, w0, g, n), t);
        EXPECT_NEAR(std::abs(a.c1 - Complex(r1, i1)), 0.0, 1e-12) << line;
        EXPECT_NEAR(std::abs(a.c2 - Complex(r2, i2)), 0.0, 1e-12) << line;
    }
}

// The as_printed phase convention keeps populations but not the relative phase.
TEST(Analytic, AsPrintedConventionPopulationsOnly) {
    const JCParams p(1.0, 2.6, 0.2, 1);
    double worst_population = 0.0, worst_phase = 0.0;
    for (double t = 0.0; t < 30.0; t += 0.7) {
        const auto s = analytic_state(p, t);
        const auto q = analytic_state(p, t, PhaseConvention::as_printed);
        worst_population = std::max(worst_population, std::abs(std::norm(s.c2) - std::norm(q.c2)));
        CVector a(2), b(2);
        a << s.c1, s.c2;
        b << q.c1, q.c2;
        worst_phase = std::max(worst_phase, distance_up_to_phase(a, b));
    }
    EXPECT_LT(worst_population, 1e-14);
    EXPECT_GT(worst_phase, 1e-2);
}

TEST(Numeric, NormAndAgreement) {
    const JCParams p(1.0, 2.2, 0.15, 1);
    const auto grid = uniform_grid(0.0, 20.0 / p.g(), 301);
    const auto numeric = evolve_numeric(p, grid);
    const auto exact = analytic_trajectory(p, grid);
    for (std::size_t k = 0; k < numeric.size(); ++k) {
        EXPECT_NEAR(std::norm(numeric.c1[k]) + std::norm(numeric.c2[k]), 1.0, 1e-10);
    }
    EXPECT_LT(max_phase_adjusted_deviation(numeric, exact), 1e-7);
}

// Property: seeded sweep, analytic vs RK4 within 1e-7 modulo phase.
TEST(Numeric, PropertySeededSweep) {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> omega(0.2, 3.0), g(0.01, 0.5), detune(-2.0, 2.0);
    std::uniform_int_distribution<int> photons(0, 6);
    for (int trial = 0; trial < 20; ++trial) {
        const double w = omega(rng);
        const JCParams p(w, 2.0 * w + detune(rng), g(rng), photons(rng));
        const auto grid = uniform_grid(0.0, 20.0 / p.g(), 101);
        EXPECT_LT(max_phase_adjusted_deviation(evolve_numeric(p, grid), analytic_trajectory(p, grid)), 1e-7) << trial;
    }
}

TEST(Numeric, ZeroCouplingAndResonance) {
    const JCParams free(1.0, 2.7, 0.0, 3);
    const auto grid = uniform_grid(0.0, 50.0, 51);
    const auto traj = evolve_numeric(free, grid);
    for (std::size_t k = 0; k < traj.size(); ++k) {
        EXPECT_EQ(std::abs(traj.c2[k]), 0.0);
        EXPECT_LT(traj.entropy[k], 1e-12);
    }

    const JCParams resonant(1.0, 2.0, 0.2, 2);
    const auto rgrid = uniform_grid(0.0, 4.0 * pi / resonant.rabi(), 257);
    const auto r = evolve_numeric(resonant, rgrid);
    for (std::size_t k = 0; k < r.size(); ++k) {
        const double s = std::sin(0.5 * resonant.rabi() * r.times[k]);
        EXPECT_NEAR(std::norm(r.c2[k]), s * s, 1e-8);
    }
}

TEST(Entanglement, MaximalAtQuarterPeriod) {
    const JCParams resonant(1.0, 2.0, 0.3, 1);
    const double t[] = {0.5 * pi / resonant.rabi()};
    EXPECT_NEAR(analytic_trajectory(resonant, t).entropy[0], std::log(2.0), 1e-12);
    const auto grid = uniform_grid(0.0, 100.0, 1001);
    for (double e : analytic_trajectory(JCParams(1.0, 2.3, 0.4, 2), grid).entropy) EXPECT_LE(e, std::log(2.0) + 1e-15);
}

TEST(Numeric, GridValidation) {
    const JCParams p(1.0, 2.0, 0.1, 0);
    const double descending[] = {1.0, 0.5};
    EXPECT_THROW(evolve_numeric(p, descending), ValidationError);
    const double negative[] = {-1.0};
    EXPECT_THROW(evolve_numeric(p, negative), ValidationError);
    EXPECT_THROW(uniform_grid(0.0, 1.0, 1), ValidationError);
    EXPECT_NEAR(default_step(p), 0.01, 1e-15);
}

TEST(Csv, HeaderAndRows) {
    const JCParams p(1.0, 2.0, 0.1, 0);
    const auto grid = uniform_grid(0.0, 1.0, 3);
    const std::string csv = to_csv(analytic_trajectory(p, grid));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,re_c1,im_c1,re_c2,im_c2,p2,entropy");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}

}  // namespace
}  // namespace spinent
