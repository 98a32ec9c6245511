// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <spinent/coupling.hpp>
#include <spinent/entanglement.hpp>
#include <spinent/errors.hpp>
#include <spinent/spatial.hpp>

#include <gtest/gtest.h>

#include <cmath>

namespace spinent {
namespace {

CoupledBasisState spin_state(const char* system, int twice_s, int twice_m) {
    const auto sys = parse_system(system);
    for (auto& s : coupled_eigenbasis(sys, default_scheme(sys)))
        if (s.quantum_numbers.s_total.twice() == twice_s && s.quantum_numbers.m_total.twice() == twice_m) return s;
    throw std::runtime_error("no such state");
}

// Particle entropy for two equal-width packets with overlap s: the symmetric spatial
// part has Schmidt weights (1 +/- s)^2 / (2(1 + s^2)), the antisymmetric one 1/2, 1/2;
// the spin factor adds its own entropy.
double closed_form_entropy(double s, Exchange spatial, double spin_entropy) {
    if (spatial == Exchange::antisymmetric) return std::log(2.0) + spin_entropy;
    const double n = 2.0 * (1.0 + s * s);
    const double p[] = {(1.0 + s) * (1.0 + s) / n, (1.0 - s) * (1.0 - s) / n};
    return shannon_entropy(p) + spin_entropy;
}

const GridSpec kGrid(12.0, 128);  // h = 0.1875, sigma = 1.2 is 6.4 spacings

TEST(Grid, NodesAndValidation) {
    const GridSpec g(1.0, 16);
    EXPECT_DOUBLE_EQ(g.spacing(), 0.125);
    EXPECT_DOUBLE_EQ(g.x(0), -1.0 + 0.0625);
    EXPECT_DOUBLE_EQ(g.x(15), 1.0 - 0.0625);
    EXPECT_THROW(GridSpec(1.0, 15), ValidationError);
    EXPECT_THROW(GridSpec(1.0, 8), ValidationError);
    EXPECT_THROW(GridSpec(-1.0, 16), ValidationError);
}

TEST(Packet, Validation) {
    EXPECT_THROW(GaussianPacket(kGrid, 0.0, 0.5), ValidationError);   // under 3 spacings
    EXPECT_THROW(GaussianPacket(kGrid, 11.8, 1.2), ValidationError);  // at the boundary
    EXPECT_NEAR(GaussianPacket(kGrid, 1.0, 1.2).amplitudes().norm(), 1.0, 1e-15);
}

TEST(Overlap, ClosedForm) {
    const GaussianPacket a(kGrid, -1.2, 1.2), b(kGrid, 1.2, 1.2);
    EXPECT_NEAR(std::abs(overlap(a, a)), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(overlap(a, b)), std::exp(-0.5), 1e-6);  // d = 2 sigma
    const GaussianPacket far_l(kGrid, -8.0, 1.2), far_r(kGrid, 8.0, 1.2);
    EXPECT_LT(std::abs(overlap(far_l, far_r)), 1e-6);
    EXPECT_THROW(overlap(a, GaussianPacket(GridSpec(12.0, 64), 0.0, 1.2)), ValidationError);
}

TEST(TotalState, SamePacketSingletIsLn2) {
    const GaussianPacket phi(kGrid, 0.0, 1.2);
    const auto state = build_total_state(phi, phi, spin_state("e,e", 0, 0), Exchange::symmetric);
    EXPECT_EQ(state.total, Exchange::antisymmetric);
    EXPECT_NEAR(particle_entropy(state), std::log(2.0), 1e-10);
    EXPECT_LT(state.exchange_deviation(), 1e-10);
}

TEST(TotalState, FarPacketsNormalizer) {
    const GaussianPacket a(kGrid, -8.0, 1.2), b(kGrid, 8.0, 1.2);
    const auto spin = spin_state("e,e", 0, 0);
    const auto state = build_total_state(a, b, spin, Exchange::symmetric);
    // Element (x1 = i, up; x2 = j, down) = (a_i b_j + b_i a_j) chi_{up,down} / sqrt(2(1 + s^2)).
    const std::size_t i = 21, j = 106;  // near -8 and +8
    const Complex raw = (a.amplitudes()[i] * b.amplitudes()[j] + b.amplitudes()[i] * a.amplitudes()[j]) * spin.vector[1];
    const std::size_t digits[] = {i, 0, j, 1};
    const Complex got = state.vector[flat_index(state.vector.dims(), digits)];
    EXPECT_NEAR(std::abs(got / raw), 1.0 / std::sqrt(2.0), 1e-6);
}

TEST(TotalState, DegenerateAntisymmetric) {
    const GaussianPacket phi(kGrid, 0.0, 1.2);
    EXPECT_THROW(build_total_state(phi, phi, spin_state("e,e", 2, 2), Exchange::antisymmetric), DegenerateInputError);
}

TEST(TotalState, IncompatiblePairings) {
    const GaussianPacket a(kGrid, -1.0, 1.2), b(kGrid, 1.0, 1.2);
    EXPECT_THROW(build_total_state(a, b, spin_state("e,e", 0, 0), Exchange::antisymmetric), ValidationError);
    EXPECT_THROW(build_total_state(a, b, spin_state("e,e", 2, 0), Exchange::symmetric), ValidationError);
    EXPECT_THROW(build_total_state(a, b, spin_state("p,p", 2, 0), Exchange::symmetric), ValidationError);
    EXPECT_NO_THROW(build_total_state(a, b, spin_state("p,p", 2, 0), Exchange::antisymmetric));
    EXPECT_NO_THROW(build_total_state(a, b, spin_state("p,p", 4, 0), Exchange::symmetric));
}

struct PairingCase {
    const char* system;
    int twice_s, twice_m;
    Exchange spatial;
};

class ScanProperty : public ::testing::TestWithParam<PairingCase> {};

// Property: every constructed state has the required exchange sign; entropies match the closed form.
TEST_P(ScanProperty, ExchangeAndClosedFormEntropy) {
    const auto& c = GetParam();
    const auto spin = spin_state(c.system, c.twice_s, c.twice_m);
    const std::size_t first[] = {0};
    const double spin_entropy = entropy(reduced_density_matrix(spin.vector, first));
    const ScanConfig config{GridSpec(10.0, 64), 1.0, c.spatial};  // sigma = 3.2 spacings
    const std::vector<double> d{0.4, 1.0, 2.0, 3.5, 5.0};
    const auto rows = separation_scan(config, spin, d);
    ASSERT_EQ(rows.size(), d.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        EXPECT_EQ(rows[k].separation, d[k]);
        EXPECT_LT(rows[k].exchange_deviation, 1e-10);
        EXPECT_LT(rows[k].norm_error, 1e-12);
        EXPECT_NEAR(rows[k].entropy, closed_form_entropy(rows[k].overlap_abs, c.spatial, spin_entropy), 1e-9);
        if (k) EXPECT_LT(rows[k].overlap_abs, rows[k - 1].overlap_abs - 1e-10);
    }
}

INSTANTIATE_TEST_SUITE_P(
    Pairings, ScanProperty,
    ::testing::Values(PairingCase{"e,e", 0, 0, Exchange::symmetric}, PairingCase{"e,e", 2, 2, Exchange::antisymmetric},
                      PairingCase{"e,e", 2, 0, Exchange::antisymmetric}, PairingCase{"p,p", 4, 0, Exchange::symmetric},
                      PairingCase{"p,p", 2, 2, Exchange::antisymmetric}, PairingCase{"p,p", 0, 0, Exchange::symmetric}),
    [](const ::testing::TestParamInfo<PairingCase>& info) {
        const auto& c = info.param;
        return std::string(c.system[0] == 'e' ? "electrons" : "photons") + "_S" + std::to_string(c.twice_s) + "_M" +
               std::to_string(c.twice_m) + "_" + to_string(c.spatial);
    });

TEST(Scan, OverlapClosedFormAndRefinement) {
    const auto spin = spin_state("e,e", 0, 0);
    const std::vector<double> d{0.0, 1.0, 2.4, 4.0, 7.0};
    const ScanConfig coarse{GridSpec(12.0, 128), 1.2, Exchange::symmetric};
    const ScanConfig fine{GridSpec(12.0, 256), 1.2, Exchange::symmetric};
    const auto a = separation_scan(coarse, spin, d);
    const auto b = separation_scan(fine, spin, d);
    EXPECT_NEAR(a[0].overlap_abs, 1.0, 1e-14);
    for (std::size_t k = 0; k < d.size(); ++k) {
        EXPECT_NEAR(a[k].overlap_abs, std::exp(-d[k] * d[k] / (8.0 * 1.2 * 1.2)), 1e-6);
        EXPECT_LT(std::abs(a[k].entropy - b[k].entropy), 1e-6);
        EXPECT_LT(std::abs(a[k].overlap_abs - b[k].overlap_abs), 1e-6);
    }
}

TEST(Scan, ValidationNamesSeparation) {
    const auto spin = spin_state("e,e", 0, 0);
    const ScanConfig config{GridSpec(10.0, 64), 1.0, Exchange::symmetric};
    try {
        separation_scan(config, spin, {1.0, 19.5});
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("d = 19.5"), std::string::npos) << e.what();
    }
    EXPECT_THROW(separation_scan(config, spin, {2.0, 1.0}), ValidationError);
    EXPECT_THROW(separation_scan(config, spin, {-1.0}), ValidationError);
    EXPECT_THROW(separation_scan(config, spin, {}), ValidationError);
}

TEST(Scan, CsvAndMetadata) {
    const auto spin = spin_state("e,e", 0, 0);
    const ScanConfig config{GridSpec(10.0, 64), 1.0, Exchange::symmetric};
    const auto rows = separation_scan(config, spin, {0.0, 2.0});
    const auto csv = scan_to_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "d,overlap_abs,entropy");
    const auto meta = scan_metadata(config, spin, rows);
    EXPECT_EQ(meta.at("grid").at("points"), 64);
    EXPECT_EQ(meta.at("spin_state"), "chi(0,0)");
}

}  // namespace
}  // namespace spinent
