// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spin.hpp
 * @brief Spin operators for arbitrary s, the Cartesian photon frame, and
 *        isotropic spin-spin Hamiltonians. hbar = 1; Condon-Shortley phases.
 */

#pragma once

#include <spinent/half_int.hpp>
#include <spinent/tensor.hpp>

#include <Eigen/Dense>

#include <array>
#include <span>
#include <string>
#include <vector>

namespace spinent {

class SpinSpecies {
public:
    /// Throws ValidationError unless s >= 1/2.
    explicit SpinSpecies(HalfInt s);

    static SpinSpecies electron() { return SpinSpecies(kHalf); }
    static SpinSpecies photon() { return SpinSpecies(HalfInt::integer(1)); }

    HalfInt s() const { return s_; }
    std::size_t dimension() const { return static_cast<std::size_t>(s_.twice() + 1); }
    bool is_fermion() const { return !s_.is_integer(); }
    /// m value of basis slot k (slot 0 is m = +s).
    HalfInt m_of_slot(std::size_t k) const { return s_ - HalfInt::integer(static_cast<int>(k)); }
    /// Throws ValidationError when |m| > s or m - s is not an integer.
    std::size_t slot_of(HalfInt m) const;

    bool operator==(const SpinSpecies&) const = default;

private:
    HalfInt s_;
};

using SpinSystem = std::vector<SpinSpecies>;

Dims dims_of(const SpinSystem& system);

/// "e,e,p" style label; 'e' for s = 1/2, 'p' for s = 1, otherwise "s=3/2".
std::string system_label(const SpinSystem& system);

/// Parses "e,e", "p,p,p", ... Throws ValidationError on anything else.
SpinSystem parse_system(const std::string& text);

class CouplingStrength {
public:
    explicit CouplingStrength(double value);
    double value() const { return value_; }

private:
    double value_;
};

struct SpinMatrices {
    HermitianOperator x;
    HermitianOperator y;
    HermitianOperator z;
    CMatrix raising;
    CMatrix lowering;
};

SpinMatrices spin_matrices(const SpinSpecies& species);

/// Single-photon polarization states: chi_0 = (0,0,1),
/// chi_{+1} = -(1, i, 0)/sqrt2, chi_{-1} = (1, -i, 0)/sqrt2.
struct PolarizationBasis {
    Eigen::Vector3cd chi_zero;
    Eigen::Vector3cd chi_plus;
    Eigen::Vector3cd chi_minus;

    const Eigen::Vector3cd& by_m(int m) const;
};

PolarizationBasis photon_polarization_basis();

/// Cartesian spin-1 generators (S_k)_{ij} = -i eps_{kij}.
std::array<Eigen::Matrix3cd, 3> cartesian_spin_matrices();

/// Unitary taking chi_m to the standard basis vector of slot m (+1, 0, -1 order).
Eigen::Matrix3cd cartesian_to_m_frame();

/// Places a single-particle operator at `site` of the product space.
CMatrix embed(const CMatrix& op, const SpinSystem& system, std::size_t site);

struct TotalSpin {
    HermitianOperator x;
    HermitianOperator y;
    HermitianOperator z;
    HermitianOperator squared;
    CMatrix lowering;
};

/// Total spin of the particles in `sites` (all particles when empty).
TotalSpin total_spin(const SpinSystem& system, std::span<const std::size_t> sites = {});

/// g * sum_{i<j} s_i . s_j over the full product space.
HermitianOperator spin_spin_hamiltonian(const SpinSystem& system, CouplingStrength g);

}  // namespace spinent
