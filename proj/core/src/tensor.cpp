// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <spinent/tensor.hpp>

#include <spinent/errors.hpp>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace spinent {

namespace {

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Dims concat(const Dims& a, const Dims& b) {
    Dims out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

void check_length(const Dims& dims, Eigen::Index length) {
    if (total_dimension(dims) != static_cast<std::size_t>(length)) {
        throw ValidationError("amplitude count " + std::to_string(length) +
                              " does not match the product of subsystem dimensions");
    }
}

// Validates a subsystem selection and returns it sorted and deduplicated.
std::vector<std::size_t> normalize_keep(std::span<const std::size_t> keep, std::size_t n) {
    if (keep.empty()) throw ValidationError("partial trace: keep set is empty");
    std::vector<std::size_t> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.back() >= n) {
        throw ValidationError("partial trace: subsystem index " + std::to_string(sorted.back()) +
                              " out of range (have " + std::to_string(n) + ")");
    }
    return sorted;
}

// Splits every flat index into (kept index, traced index).
struct Split {
    Dims keep_dims;
    std::size_t keep_size = 1;
    std::size_t trace_size = 1;
    std::vector<std::size_t> keep_of;
    std::vector<std::size_t> trace_of;
};

Split split_indices(const Dims& dims, const std::vector<std::size_t>& keep) {
    Split s;
    std::vector<bool> kept(dims.size(), false);
    for (auto k : keep) kept[k] = true;
    Dims trace_dims;
    for (std::size_t i = 0; i < dims.size(); ++i) (kept[i] ? s.keep_dims : trace_dims).push_back(dims[i]);
    for (auto d : s.keep_dims) s.keep_size *= d;
    for (auto d : trace_dims) s.trace_size *= d;

    const std::size_t total = s.keep_size * s.trace_size;
    s.keep_of.resize(total);
    s.trace_of.resize(total);
    std::vector<std::size_t> digits(dims.size(), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t k = 0, t = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (kept[i]) k = k * dims[i] + digits[i];
            else t = t * dims[i] + digits[i];
        }
        s.keep_of[flat] = k;
        s.trace_of[flat] = t;
        for (std::size_t i = dims.size(); i-- > 0;) {
            if (++digits[i] < dims[i]) break;
            digits[i] = 0;
        }
    }
    return s;
}

}  // namespace

std::size_t total_dimension(const Dims& dims, std::size_t cap) {
    if (dims.empty()) throw ValidationError("dimension list is empty");
    std::size_t total = 1;
    for (auto d : dims) {
        if (d == 0) throw ValidationError("subsystem dimension must be positive");
        if (total > cap / d) {
            throw CapacityError("product-space dimension exceeds cap " + std::to_string(cap));
        }
        total *= d;
    }
    return total;
}

std::size_t flat_index(const Dims& dims, std::span<const std::size_t> digits) {
    if (digits.size() != dims.size()) throw ValidationError("multi-index rank mismatch");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (digits[i] >= dims[i]) throw ValidationError("multi-index digit out of range");
        flat = flat * dims[i] + digits[i];
    }
    return flat;
}

std::vector<std::size_t> digits_of(const Dims& dims, std::size_t index) {
    std::vector<std::size_t> digits(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
        digits[i] = index % dims[i];
        index /= dims[i];
    }
    return digits;
}

// --- StateVector -------------------------------------------------------------

StateVector::StateVector(Dims dims, CVector amplitudes, const Tolerances& tol)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    check_length(dims_, amplitudes_.size());
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > tol.algebraic) {
        throw ValidationError("state is not normalized (norm " + std::to_string(norm) + ")");
    }
}

StateVector StateVector::normalized(Dims dims, CVector amplitudes) {
    check_length(dims, amplitudes.size());
    const double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw ValidationError("cannot normalize a zero or non-finite amplitude vector");
    }
    amplitudes /= norm;
    return StateVector(std::move(dims), std::move(amplitudes));
}

StateVector StateVector::basis(Dims dims, std::span<const std::size_t> digits) {
    const auto n = total_dimension(dims);
    CVector v = CVector::Zero(static_cast<Eigen::Index>(n));
    v[static_cast<Eigen::Index>(flat_index(dims, digits))] = 1.0;
    return StateVector(std::move(dims), std::move(v));
}

// --- HermitianOperator -------------------------------------------------------

HermitianOperator::HermitianOperator(Dims dims, CMatrix matrix, const Tolerances& tol)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) throw ValidationError("operator matrix is not square");
    check_length(dims_, matrix_.rows());
    const double scale = std::max(1.0, max_abs(matrix_));
    if (max_abs(matrix_ - matrix_.adjoint()) > tol.algebraic * scale) {
        throw ValidationError("operator matrix is not Hermitian");
    }
}

HermitianOperator HermitianOperator::identity(Dims dims) {
    const auto n = static_cast<Eigen::Index>(total_dimension(dims));
    return HermitianOperator(std::move(dims), CMatrix::Identity(n, n));
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
    if (other.dims_ != dims_) throw ValidationError("operator dimension mismatch");
    return HermitianOperator(dims_, matrix_ + other.matrix_);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& other) const {
    if (other.dims_ != dims_) throw ValidationError("operator dimension mismatch");
    return HermitianOperator(dims_, matrix_ - other.matrix_);
}

HermitianOperator HermitianOperator::operator*(double scale) const {
    return HermitianOperator(dims_, matrix_ * scale);
}

// --- DensityMatrix -----------------------------------------------------------

DensityMatrix::DensityMatrix(Dims dims, CMatrix matrix, const Tolerances& tol)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) throw ValidationError("density matrix is not square");
    check_length(dims_, matrix_.rows());
    if (max_abs(matrix_ - matrix_.adjoint()) > tol.algebraic) {
        throw ValidationError("density matrix is not Hermitian");
    }
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > tol.algebraic) {
        throw ValidationError("density matrix trace is " + std::to_string(tr) + ", expected 1");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol.algebraic) {
        throw ValidationError("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& state) {
    const CVector& v = state.amplitudes();
    return DensityMatrix(state.dims(), v * v.adjoint());
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return matrix_.cwiseAbs2().sum();
}

// --- kron --------------------------------------------------------------------

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

StateVector kron(const StateVector& a, const StateVector& b, std::size_t cap) {
    Dims dims = concat(a.dims(), b.dims());
    total_dimension(dims, cap);
    CVector v = Eigen::kroneckerProduct(a.amplitudes(), b.amplitudes()).eval();
    return StateVector::normalized(std::move(dims), std::move(v));
}

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b, std::size_t cap) {
    Dims dims = concat(a.dims(), b.dims());
    total_dimension(dims, cap);
    return HermitianOperator(std::move(dims), kron(a.matrix(), b.matrix()));
}

// --- eigh --------------------------------------------------------------------

EigenSystem eigh(const HermitianOperator& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix());
    if (solver.info() != Eigen::Success) throw ValidationError("Hermitian eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

// --- partial trace -----------------------------------------------------------

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
    const auto sorted = normalize_keep(keep, rho.dims().size());
    const Split s = split_indices(rho.dims(), sorted);

    // Group flat indices by traced index; within a group, position = kept index.
    std::vector<std::vector<std::size_t>> groups(s.trace_size, std::vector<std::size_t>(s.keep_size));
    for (std::size_t flat = 0; flat < s.keep_of.size(); ++flat) groups[s.trace_of[flat]][s.keep_of[flat]] = flat;

    const auto k = static_cast<Eigen::Index>(s.keep_size);
    CMatrix out = CMatrix::Zero(k, k);
    const CMatrix& m = rho.matrix();
    for (const auto& g : groups) {
        for (Eigen::Index i = 0; i < k; ++i) {
            for (Eigen::Index j = 0; j < k; ++j) {
                out(i, j) += m(static_cast<Eigen::Index>(g[static_cast<std::size_t>(i)]),
                               static_cast<Eigen::Index>(g[static_cast<std::size_t>(j)]));
            }
        }
    }
    return DensityMatrix(s.keep_dims, std::move(out));
}

DensityMatrix reduced_density_matrix(const StateVector& state, std::span<const std::size_t> keep) {
    const auto sorted = normalize_keep(keep, state.subsystems());
    const Split s = split_indices(state.dims(), sorted);

    CMatrix block(static_cast<Eigen::Index>(s.keep_size), static_cast<Eigen::Index>(s.trace_size));
    for (std::size_t flat = 0; flat < s.keep_of.size(); ++flat) {
        block(static_cast<Eigen::Index>(s.keep_of[flat]), static_cast<Eigen::Index>(s.trace_of[flat])) =
            state[flat];
    }
    CMatrix rho = block * block.adjoint();
    // Enforce exact Hermiticity against rounding in the product.
    rho = (0.5 * (rho + rho.adjoint())).eval();
    return DensityMatrix(s.keep_dims, std::move(rho));
}

StateVector permute_subsystems(const StateVector& state, std::span<const std::size_t> perm) {
    const Dims& dims = state.dims();
    const std::size_t n = dims.size();
    if (perm.size() != n) throw ValidationError("permutation rank mismatch");
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) throw ValidationError("not a permutation of subsystem indices");
        seen[p] = true;
    }
    Dims out_dims(n);
    for (std::size_t i = 0; i < n; ++i) out_dims[i] = dims[perm[i]];

    CVector out(state.amplitudes().size());
    std::vector<std::size_t> out_digits(n);
    for (std::size_t flat = 0; flat < state.size(); ++flat) {
        const auto digits = digits_of(dims, flat);
        for (std::size_t i = 0; i < n; ++i) out_digits[i] = digits[perm[i]];
        out[static_cast<Eigen::Index>(flat_index(out_dims, out_digits))] = state[flat];
    }
    return StateVector(std::move(out_dims), std::move(out));
}

// --- phase utilities ---------------------------------------------------------

CVector phase_aligned(const CVector& v, double tie) {
    if (v.size() == 0) return v;
    const double largest = v.cwiseAbs().maxCoeff();
    if (largest == 0.0) return v;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) >= largest - tie) {
            const Complex rotation = std::conj(v[i]) / std::abs(v[i]);
            CVector out = v * rotation;
            out[i] = std::abs(v[i]);
            return out;
        }
    }
    return v;
}

double distance_up_to_phase(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) throw ValidationError("vector length mismatch");
    const Complex inner = b.dot(a);  // <b|a>
    const Complex rotation = std::abs(inner) > 0.0 ? inner / std::abs(inner) : Complex{1.0, 0.0};
    return (a - rotation * b).cwiseAbs().maxCoeff();
}

double commutator_norm(const CMatrix& a, const CMatrix& b) {
    return max_abs(a * b - b * a);
}

}  // namespace spinent
