// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file tensor.hpp
 * @brief Dense complex states and operators over labeled product spaces.
 *
 * Basis order: subsystem 0 is the slowest-varying index. Inside a spin
 * factor the magnetic quantum number runs from +s down to -s, so index 0
 * of a spin-1 factor is m = +1.
 *
 * All types are immutable after construction.
 */

#pragma once

#include <spinent/tolerance.hpp>

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace spinent {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Dims = std::vector<std::size_t>;

/// Product of dims; throws CapacityError above `cap` and ValidationError on a zero factor.
std::size_t total_dimension(const Dims& dims, std::size_t cap = kDefaultDimensionCap);

/// Flat index of a multi-index (slowest subsystem first).
std::size_t flat_index(const Dims& dims, std::span<const std::size_t> digits);

/// Multi-index of a flat index.
std::vector<std::size_t> digits_of(const Dims& dims, std::size_t index);

class StateVector {
public:
    /// Requires unit norm within tol.algebraic.
    StateVector(Dims dims, CVector amplitudes, const Tolerances& tol = {});

    /// Scales to unit norm; throws ValidationError on a zero vector.
    static StateVector normalized(Dims dims, CVector amplitudes);

    /// Single basis vector |digits>.
    static StateVector basis(Dims dims, std::span<const std::size_t> digits);

    const Dims& dims() const { return dims_; }
    const CVector& amplitudes() const { return amplitudes_; }
    std::size_t size() const { return static_cast<std::size_t>(amplitudes_.size()); }
    std::size_t subsystems() const { return dims_.size(); }
    Complex operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

private:
    Dims dims_;
    CVector amplitudes_;
};

class HermitianOperator {
public:
    /// Throws ValidationError when `matrix` is not self-adjoint within tol.algebraic
    /// (relative to max(1, max|entry|)).
    HermitianOperator(Dims dims, CMatrix matrix, const Tolerances& tol = {});

    static HermitianOperator identity(Dims dims);

    const Dims& dims() const { return dims_; }
    const CMatrix& matrix() const { return matrix_; }
    std::size_t size() const { return static_cast<std::size_t>(matrix_.rows()); }

    HermitianOperator operator+(const HermitianOperator& other) const;
    HermitianOperator operator-(const HermitianOperator& other) const;
    HermitianOperator operator*(double scale) const;
    /// Product of two operators; only Hermitian when they commute, so it returns a plain matrix.
    CMatrix operator*(const HermitianOperator& other) const { return matrix_ * other.matrix_; }

    CVector apply(const CVector& v) const { return matrix_ * v; }

private:
    Dims dims_;
    CMatrix matrix_;
};

class DensityMatrix {
public:
    /// Checks Hermiticity, unit trace and eigenvalues >= -tol.algebraic.
    DensityMatrix(Dims dims, CMatrix matrix, const Tolerances& tol = {});

    static DensityMatrix from_pure(const StateVector& state);

    const Dims& dims() const { return dims_; }
    const CMatrix& matrix() const { return matrix_; }
    std::size_t size() const { return static_cast<std::size_t>(matrix_.rows()); }

    double trace() const { return matrix_.trace().real(); }
    double purity() const;

private:
    Dims dims_;
    CMatrix matrix_;
};

struct EigenSystem {
    Eigen::VectorXd values;  ///< ascending
    CMatrix vectors;         ///< orthonormal columns matching `values`
};

StateVector kron(const StateVector& a, const StateVector& b, std::size_t cap = kDefaultDimensionCap);
HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b,
                       std::size_t cap = kDefaultDimensionCap);
CMatrix kron(const CMatrix& a, const CMatrix& b);

EigenSystem eigh(const HermitianOperator& h);

/// Reduced state on `keep` (0-based subsystem indices, any order; result follows ascending order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);

/// Reduced state of a pure state without forming the full projector.
DensityMatrix reduced_density_matrix(const StateVector& state, std::span<const std::size_t> keep);

/// Reorders subsystems: result subsystem i is input subsystem perm[i].
StateVector permute_subsystems(const StateVector& state, std::span<const std::size_t> perm);

/// Rotates the global phase so the first amplitude whose modulus is within `tie` of the
/// largest modulus becomes real and positive.
CVector phase_aligned(const CVector& v, double tie = 1e-9);

/// max_i |a_i - e^{i theta} b_i| with theta = arg(<b|a>).
double distance_up_to_phase(const CVector& a, const CVector& b);

/// ||[a, b]||_max
double commutator_norm(const CMatrix& a, const CMatrix& b);

}  // namespace spinent
