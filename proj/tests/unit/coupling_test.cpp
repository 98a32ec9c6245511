// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "oracle_files.hpp"

#include <spinent/coupling.hpp>
#include <spinent/errors.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

namespace spinent {
namespace {

HalfInt h(const std::string& t) { return HalfInt::parse(t); }

std::vector<CoupledBasisState> basis_of(const char* spec) {
    const auto sys = parse_system(spec);
    return coupled_eigenbasis(sys, default_scheme(sys));
}

const CoupledBasisState& find(const std::vector<CoupledBasisState>& basis, const QuantumNumbers& q) {
    for (const auto& s : basis)
        if (s.quantum_numbers == q) return s;
    throw std::runtime_error("state not found: " + q.label());
}

class CoupledBasis : public ::testing::TestWithParam<const char*> {};

TEST_P(CoupledBasis, OrthonormalCompleteAndOrdered) {
    const auto sys = parse_system(GetParam());
    const auto basis = coupled_eigenbasis(sys, default_scheme(sys));
    ASSERT_EQ(basis.size(), total_dimension(dims_of(sys)));
    const CMatrix u = basis_matrix(basis);
    EXPECT_LT((u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff(), 1e-12);
    for (std::size_t k = 1; k < basis.size(); ++k)
        EXPECT_TRUE(basis_order_less(basis[k - 1].quantum_numbers, basis[k].quantum_numbers)) << k;
}

TEST_P(CoupledBasis, EigenvectorInvariants) {
    const auto sys = parse_system(GetParam());
    const auto total = total_spin(sys);
    const std::size_t pair[] = {0, 1};
    const auto s12 = total_spin(sys, pair);
    for (const auto& state : coupled_eigenbasis(sys, default_scheme(sys))) {
        const auto& q = state.quantum_numbers;
        const CVector& v = state.vector.amplitudes();
        const double S = q.s_total.value(), M = q.m_total.value();
        EXPECT_LT((total.squared.apply(v) - S * (S + 1.0) * v).norm(), 1e-10) << q.label();
        EXPECT_LT((total.z.apply(v) - M * v).norm(), 1e-10) << q.label();
        if (q.s_intermediate) {
            const double sp = q.s_intermediate->value();
            EXPECT_LT((s12.squared.apply(v) - sp * (sp + 1.0) * v).norm(), 1e-10) << q.label();
        }
        EXPECT_LT(eigen_residual(state, sys), 1e-10);
    }
}

// Phase convention: the first amplitude of largest modulus in the top state is positive,
// and <M-1|S-|M> > 0 down the ladder.
TEST_P(CoupledBasis, LadderPhaseConvention) {
    const auto sys = parse_system(GetParam());
    const auto total = total_spin(sys);
    const auto basis = coupled_eigenbasis(sys, default_scheme(sys));
    for (const auto& state : basis) {
        auto q = state.quantum_numbers;
        const CVector& v = state.vector.amplitudes();
        if (q.m_total == q.s_total) {
            const double top = v.cwiseAbs().maxCoeff();
            Eigen::Index first = 0;
            while (std::abs(v[first]) < top - 1e-9) ++first;
            EXPECT_GT(v[first].real(), 0.0) << q.label();
            EXPECT_NEAR(v[first].imag(), 0.0, 1e-12) << q.label();
            continue;
        }
        q.m_total = q.m_total + HalfInt::integer(1);
        const CVector& above = find(basis, q).vector.amplitudes();
        const Complex element = v.dot(total.lowering * above);
        EXPECT_GT(element.real(), 0.0) << state.quantum_numbers.label();
        EXPECT_NEAR(element.imag(), 0.0, 1e-12);
    }
}

// Analytic CG construction and simultaneous diagonalization agree up to phase.
TEST_P(CoupledBasis, AgreesWithClebschGordanConstruction) {
    const auto sys = parse_system(GetParam());
    const auto numeric = coupled_eigenbasis(sys, default_scheme(sys));
    const auto cg = clebsch_gordan_basis(sys, default_scheme(sys));
    ASSERT_EQ(cg.size(), numeric.size());
    for (const auto& state : cg) {
        const auto& twin = find(numeric, state.quantum_numbers);
        EXPECT_LT(distance_up_to_phase(twin.vector.amplitudes(), state.vector.amplitudes()), 1e-10)
            << state.quantum_numbers.label();
    }
}

std::string system_name(const ::testing::TestParamInfo<const char*>& info) {
    std::string out;
    for (const char* c = info.param; *c; ++c) out += *c == ',' ? '_' : *c;
    return out;
}

INSTANTIATE_TEST_SUITE_P(Systems, CoupledBasis, ::testing::Values("e,e", "e,e,e", "p,p", "p,p,p", "e,p", "p,e,e"),
                         system_name);

TEST(CoupledBasis, Multiplicities) {
    auto count = [](const std::vector<CoupledBasisState>& b) {
        std::map<std::pair<int, int>, int> out;
        for (const auto& s : b) out[{s.quantum_numbers.s_intermediate ? s.quantum_numbers.s_intermediate->twice() : -1,
                                     s.quantum_numbers.s_total.twice()}]++;
        return out;
    };
    const auto ee = count(basis_of("e,e"));
    EXPECT_EQ(ee.at({-1, 2}), 3);
    EXPECT_EQ(ee.at({-1, 0}), 1);

    const auto eee = count(basis_of("e,e,e"));
    EXPECT_EQ(eee.at({2, 3}), 4);
    EXPECT_EQ(eee.at({2, 1}), 2);
    EXPECT_EQ(eee.at({0, 1}), 2);

    const auto ppp = count(basis_of("p,p,p"));
    EXPECT_EQ(ppp.at({4, 6}), 7);
    EXPECT_EQ(ppp.at({4, 4}), 5);
    EXPECT_EQ(ppp.at({4, 2}), 3);
    EXPECT_EQ(ppp.at({2, 4}), 5);
    EXPECT_EQ(ppp.at({2, 2}), 3);
    EXPECT_EQ(ppp.at({2, 0}), 1);
    EXPECT_EQ(ppp.at({0, 2}), 3);
}

TEST(CoupledBasis, SingletAndPhotonQuintetMiddle) {
    const auto& singlet = find(basis_of("e,e"), {std::nullopt, h("0"), h("0")});
    EXPECT_NEAR(singlet.vector[1].real(), 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(singlet.vector[2].real(), -1.0 / std::sqrt(2.0), 1e-12);

    const auto& chi20 = find(basis_of("p,p"), {std::nullopt, h("2"), h("0")});
    // |1,-1>, |0,0>, |-1,1> are flat indices 2, 4, 6.
    EXPECT_NEAR(chi20.vector[2].real(), 1.0 / std::sqrt(6.0), 1e-12);
    EXPECT_NEAR(chi20.vector[4].real(), 2.0 / std::sqrt(6.0), 1e-12);
    EXPECT_NEAR(chi20.vector[6].real(), 1.0 / std::sqrt(6.0), 1e-12);
}

TEST(CoupledBasis, UnsupportedParticleCounts) {
    EXPECT_THROW(coupled_eigenbasis(parse_system("e"), CouplingScheme::pair_only), ValidationError);
    EXPECT_THROW(coupled_eigenbasis(parse_system("e,e,e,e"), CouplingScheme::pair_then_third), ValidationError);
}

// Frozen sympy states |S' S M> for three identical particles, compared term by term in exact form.
class SympyCoupledStates : public ::testing::TestWithParam<std::pair<const char*, const char*>> {};

TEST_P(SympyCoupledStates, ExactAmplitudesMatch) {
    const auto sys = parse_system(GetParam().first);
    const auto exact = clebsch_gordan_basis_exact(sys, default_scheme(sys));
    std::map<std::string, std::map<std::string, ExactAmplitude>> oracle;
    for (const auto& line : testing::oracle_lines(GetParam().second)) {
        const auto f = testing::fields(line);
        std::istringstream q(f[0]), ms(f[1]), amp(f[2]);
        std::string sp, s, m;
        q >> sp >> s >> m;
        const QuantumNumbers qn{h(sp), h(s), h(m)};
        std::string key;
        for (std::string t; ms >> t;) key += h(t).to_string() + " ";
        int sign = 0;
        std::uint64_t p = 0, r = 1;
        amp >> sign >> p >> r;
        oracle[qn.label()][key] = ExactAmplitude::from_square(p, r, sign);
    }
    ASSERT_EQ(oracle.size(), exact.size());
    for (const auto& state : exact) {
        const auto& want = oracle.at(state.quantum_numbers.label());
        std::size_t nonzero = 0;
        for (std::size_t k = 0; k < state.ms.size(); ++k) {
            if (state.amplitudes[k].is_zero()) continue;
            ++nonzero;
            std::string key;
            for (const auto& m : state.ms[k]) key += m.to_string() + " ";
            ASSERT_TRUE(want.count(key)) << state.quantum_numbers.label() << " " << key;
            EXPECT_EQ(state.amplitudes[k], want.at(key)) << state.quantum_numbers.label() << " " << key;
        }
        EXPECT_EQ(nonzero, want.size()) << state.quantum_numbers.label();
    }
}

INSTANTIATE_TEST_SUITE_P(Oracles, SympyCoupledStates,
                         ::testing::Values(std::make_pair("e,e,e", "coupled_three_electrons.txt"),
                                           std::make_pair("p,p,p", "coupled_three_photons.txt")),
                         [](const auto& info) { return std::string(info.param.first[0] == 'e' ? "electrons" : "photons"); });

}  // namespace
}  // namespace spinent
