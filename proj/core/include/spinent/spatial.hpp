// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spatial.hpp
 * @brief Two identical particles with a 1D Gaussian spatial factor and a coupled spin state.
 *
 * Width convention: amplitude ~ exp(-(x - x0)^2 / (4 sigma^2)), so |phi|^2 has
 * variance sigma^2 and two equal-width packets a distance d apart overlap by
 * exp(-d^2 / (8 sigma^2)).
 *
 * Per-particle subsystem order in a TotalState: (grid, spin) for particle 1,
 * then (grid, spin) for particle 2.
 */

#pragma once

#include <spinent/coupling.hpp>
#include <spinent/tensor.hpp>
#include <spinent/tolerance.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace spinent {

class GridSpec {
public:
    /// Points x_k = -L + (k + 1/2) h, h = 2L/N. Requires L > 0, N >= 16 and even.
    GridSpec(double half_width, std::size_t points);

    double half_width() const { return half_width_; }
    std::size_t points() const { return points_; }
    double spacing() const { return 2.0 * half_width_ / static_cast<double>(points_); }
    double x(std::size_t k) const { return -half_width_ + (static_cast<double>(k) + 0.5) * spacing(); }

    bool operator==(const GridSpec&) const = default;

private:
    double half_width_;
    std::size_t points_;
};

class GaussianPacket {
public:
    /// Throws ValidationError when sigma < 3 spacings or the center lies within
    /// 3 spacings of the boundary.
    GaussianPacket(const GridSpec& grid, double center, double sigma);

    const GridSpec& grid() const { return grid_; }
    double center() const { return center_; }
    double sigma() const { return sigma_; }
    /// Unit-norm discrete amplitudes (sqrt(h) * phi(x_k), renormalized).
    const CVector& amplitudes() const { return amplitudes_; }

private:
    GridSpec grid_;
    double center_;
    double sigma_;
    CVector amplitudes_;
};

enum class Exchange { symmetric, antisymmetric };

std::string to_string(Exchange e);
Exchange parse_exchange(const std::string& text);

struct TotalState {
    StateVector vector;  ///< dims {N, d_spin, N, d_spin}
    Exchange spatial;
    Exchange spin;
    Exchange total;

    /// max |P psi - (+/-) psi| with P swapping the two (grid, spin) factors.
    double exchange_deviation() const;
};

/// <a|b> on a shared grid; ValidationError when the grids differ.
Complex overlap(const GaussianPacket& a, const GaussianPacket& b);

/// Exchange sign of a two-particle spin state; ValidationError when it has none.
Exchange spin_exchange(const StateVector& spin, double tol = 1e-10);

/// (phi1 phi2 +/- phi2 phi1)/sqrt(2(1 +/- |<phi1|phi2>|^2)) (x) spin.
/// Fermions need an antisymmetric total, bosons a symmetric one; other pairings throw
/// ValidationError. An antisymmetric spatial part with 1 - |overlap|^2 < 1e-8 throws
/// DegenerateInputError.
TotalState build_total_state(const GaussianPacket& phi1, const GaussianPacket& phi2, const CoupledBasisState& spin,
                             Exchange spatial);

/// Entropy of one particle's (grid, spin) factor.
double particle_entropy(const TotalState& state);

struct ScanRow {
    double separation = 0.0;
    double overlap_abs = 0.0;
    double entropy = 0.0;
    double exchange_deviation = 0.0;
    double norm_error = 0.0;
};

struct ScanConfig {
    GridSpec grid{10.0, 128};
    double sigma = 1.0;
    Exchange spatial = Exchange::symmetric;
};

/// One row per separation; packets centered at -d/2 and +d/2. Separations must be
/// non-negative and strictly ascending. Rows are computed concurrently.
std::vector<ScanRow> separation_scan(const ScanConfig& config, const CoupledBasisState& spin,
                                     const std::vector<double>& separations);

/// Columns d, overlap_abs, entropy.
std::string scan_to_csv(const std::vector<ScanRow>& rows);

/// Grid and convention metadata for the CSV sidecar.
nlohmann::json scan_metadata(const ScanConfig& config, const CoupledBasisState& spin,
                             const std::vector<ScanRow>& rows);

}  // namespace spinent
