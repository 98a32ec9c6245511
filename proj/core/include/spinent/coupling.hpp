// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file coupling.hpp
 * @brief Coupled spin bases for two and three particles.
 *
 * Two routes build the same basis:
 *  - coupled_eigenbasis() diagonalizes S_z, then S^2 inside each M block,
 *    then the pair operator S12^2 inside each (S, M) eigenspace;
 *  - clebsch_gordan_basis() multiplies Clebsch-Gordan coefficients in the
 *    coupling order (1,2) then 3.
 *
 * Phase convention of the diagonalization route: the stretched state M = S
 * of each multiplet has its largest amplitude real positive, and every lower
 * state is fixed by <M-1| S- |M> > 0, so the lowering operator acts with the
 * standard positive coefficient. The Clebsch-Gordan route uses Condon-Shortley
 * phases; the two agree up to one sign per multiplet.
 */

#pragma once

#include <spinent/clebsch.hpp>
#include <spinent/half_int.hpp>
#include <spinent/spin.hpp>
#include <spinent/tensor.hpp>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace spinent {

enum class CouplingScheme { pair_only, pair_then_third };

/// Scheme implied by the particle count (2 -> pair_only, 3 -> pair_then_third).
CouplingScheme default_scheme(const SpinSystem& system);

struct QuantumNumbers {
    std::optional<HalfInt> s_intermediate;  ///< S' of the (1,2) pair; absent for two particles
    HalfInt s_total;
    HalfInt m_total;

    bool operator==(const QuantumNumbers&) const = default;
    /// chi_{S'SM} style label, e.g. "chi(1,3/2,1/2)" or "chi(0,0)".
    std::string label() const;
};

/// Ordering used for bases: S' descending, then S descending, then M descending.
bool basis_order_less(const QuantumNumbers& a, const QuantumNumbers& b);

struct CoupledBasisState {
    QuantumNumbers quantum_numbers;
    StateVector vector;
};

/// Exact expansion of a coupled state over product basis states.
struct ExactCoupledState {
    QuantumNumbers quantum_numbers;
    std::vector<std::vector<HalfInt>> ms;  ///< m values per term, particle order
    std::vector<ExactAmplitude> amplitudes;

    CVector numeric(const SpinSystem& system) const;
};

/// Simultaneous eigenbasis of {S12^2, S^2, S_z}, ordered by basis_order_less.
/// Throws ValidationError for particle counts other than 2 or 3 or a scheme mismatch.
std::vector<CoupledBasisState> coupled_eigenbasis(const SpinSystem& system, CouplingScheme scheme,
                                                  const Tolerances& tol = {});

/// Same basis assembled from products of Clebsch-Gordan coefficients.
std::vector<ExactCoupledState> clebsch_gordan_basis_exact(const SpinSystem& system, CouplingScheme scheme);
std::vector<CoupledBasisState> clebsch_gordan_basis(const SpinSystem& system, CouplingScheme scheme);

/// Largest eigen-relation residual of a state: S^2, S_z and (if labeled) S12^2.
double eigen_residual(const CoupledBasisState& state, const SpinSystem& system);

/// Unitary whose columns are the basis vectors.
CMatrix basis_matrix(const std::vector<CoupledBasisState>& basis);

}  // namespace spinent
