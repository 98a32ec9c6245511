// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file entanglement.hpp
 * @brief Pure-state entanglement: Schmidt data, entropies, per-particle separability.
 *
 * A particle is separable when its reduced purity is at least 1 - threshold.
 * A state counts as entangled (in the sense of the listing labels) when no
 * particle is separable from the rest.
 */

#pragma once

#include <spinent/listing.hpp>
#include <spinent/tensor.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <span>
#include <vector>

namespace spinent {

inline constexpr double kPurityThreshold = 1e-10;

struct SchmidtDecomposition {
    Eigen::VectorXd coefficients;  ///< descending, non-negative
    CMatrix left;                  ///< orthonormal columns over part A
    CMatrix right;                 ///< orthonormal columns over the complement
    Dims left_dims;
    Dims right_dims;

    /// Number of coefficients with c^2 > threshold.
    std::size_t rank(double threshold = kPurityThreshold) const;
    /// Sum_k c_k |left_k> (x) |right_k>, in the (A, complement) subsystem order.
    CVector reconstruct() const;
};

/// Schmidt decomposition across `part_a` | complement. Throws ValidationError on a
/// trivial bipartition (empty or everything).
SchmidtDecomposition schmidt(const StateVector& state, std::span<const std::size_t> part_a);

/// -sum lambda ln lambda over eigenvalues >= 1e-14; ValidationError when an eigenvalue < -1e-10.
double entropy(const DensityMatrix& rho);

/// Same from a probability list (Schmidt coefficients squared).
double shannon_entropy(std::span<const double> probabilities);

struct BipartitionData {
    std::vector<std::size_t> part_a;  ///< 0-based
    std::vector<double> schmidt_coefficients;
    double entropy = 0.0;
};

struct PairData {
    std::size_t first = 0, second = 0;  ///< 0-based
    bool pure = false;                  ///< the remaining particle is separable
    std::optional<bool> entangled;      ///< only defined when the pair state is pure
    std::optional<double> entropy;
};

struct EntanglementReport {
    std::vector<double> purity;   ///< per particle
    std::vector<double> entropy;  ///< per particle, natural log
    std::vector<BipartitionData> bipartitions;
    std::vector<std::size_t> separable_particles;  ///< 0-based
    bool genuinely_multiparticle_entangled = false;
    std::vector<PairData> pairs;  ///< three-particle states only
    std::optional<PaperVerdict> paper_verdict;
    std::optional<bool> paper_label_agreement;

    bool separable(std::size_t particle) const;
};

/// Two- or three-particle report; throws ValidationError for other subsystem counts.
EntanglementReport separability_report(const StateVector& state, std::optional<PaperVerdict> verdict = std::nullopt,
                                       double threshold = kPurityThreshold);

/// Particles are numbered from 1 in the document. `log_base2` rescales entropies for display.
nlohmann::json to_json(const EntanglementReport& report, bool log_base2 = false);

}  // namespace spinent
