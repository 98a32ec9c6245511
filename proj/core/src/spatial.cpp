// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <spinent/spatial.hpp>

#include <spinent/entanglement.hpp>
#include <spinent/errors.hpp>
#include <spinent/format.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <thread>

namespace spinent {

namespace {

int sign_of(Exchange e) { return e == Exchange::symmetric ? 1 : -1; }

std::string with_article(Exchange e) { return e == Exchange::symmetric ? "a symmetric" : "an antisymmetric"; }

std::string describe(double v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

}  // namespace

GridSpec::GridSpec(double half_width, std::size_t points) : half_width_(half_width), points_(points) {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) throw ValidationError("grid half-width must be positive");
    if (points < 16 || points % 2 != 0) throw ValidationError("grid needs an even number of points >= 16");
}

GaussianPacket::GaussianPacket(const GridSpec& grid, double center, double sigma)
    : grid_(grid), center_(center), sigma_(sigma) {
    const double h = grid.spacing();
    if (!std::isfinite(sigma) || sigma < 3.0 * h) {
        throw ValidationError("packet width " + describe(sigma) + " is below 3 grid spacings (" + describe(3.0 * h) + ")");
    }
    if (!std::isfinite(center) || std::abs(center) > grid.half_width() - 3.0 * h) {
        throw ValidationError("packet center " + describe(center) + " is within 3 spacings of the grid boundary");
    }
    amplitudes_.resize(static_cast<Eigen::Index>(grid.points()));
    for (std::size_t k = 0; k < grid.points(); ++k) {
        const double u = grid.x(k) - center;
        amplitudes_[static_cast<Eigen::Index>(k)] = std::sqrt(h) * std::exp(-u * u / (4.0 * sigma * sigma));
    }
    amplitudes_.normalize();
}

std::string to_string(Exchange e) { return e == Exchange::symmetric ? "symmetric" : "antisymmetric"; }

Exchange parse_exchange(const std::string& text) {
    if (text == "symmetric" || text == "sym" || text == "S") return Exchange::symmetric;
    if (text == "antisymmetric" || text == "anti" || text == "A") return Exchange::antisymmetric;
    throw ValidationError("symmetry must be 'symmetric' or 'antisymmetric', got '" + text + "'");
}

double TotalState::exchange_deviation() const {
    const std::size_t perm[] = {2, 3, 0, 1};
    const StateVector swapped = permute_subsystems(vector, perm);
    return (swapped.amplitudes() - static_cast<double>(sign_of(total)) * vector.amplitudes()).cwiseAbs().maxCoeff();
}

Complex overlap(const GaussianPacket& a, const GaussianPacket& b) {
    if (!(a.grid() == b.grid())) throw ValidationError("packets live on different grids");
    return a.amplitudes().dot(b.amplitudes());
}

Exchange spin_exchange(const StateVector& spin, double tol) {
    if (spin.subsystems() != 2 || spin.dims()[0] != spin.dims()[1]) {
        throw ValidationError("spin state must belong to two identical particles");
    }
    const std::size_t perm[] = {1, 0};
    const CVector swapped = permute_subsystems(spin, perm).amplitudes();
    if ((swapped - spin.amplitudes()).cwiseAbs().maxCoeff() <= tol) return Exchange::symmetric;
    if ((swapped + spin.amplitudes()).cwiseAbs().maxCoeff() <= tol) return Exchange::antisymmetric;
    throw ValidationError("spin state has no definite exchange symmetry");
}

TotalState build_total_state(const GaussianPacket& phi1, const GaussianPacket& phi2, const CoupledBasisState& spin,
                             Exchange spatial) {
    const Exchange spin_sym = spin_exchange(spin.vector);
    const std::size_t ds = spin.vector.dims()[0];
    const bool fermions = ds % 2 == 0;  // d = 2s + 1 is even for half-integer s
    const Exchange required = fermions ? Exchange::antisymmetric : Exchange::symmetric;
    const Exchange total = sign_of(spatial) * sign_of(spin_sym) > 0 ? Exchange::symmetric : Exchange::antisymmetric;
    if (total != required) {
        throw ValidationError(std::string("incompatible symmetry pairing: ") + (fermions ? "fermions" : "bosons") +
                              " need " + with_article(required) + " total state (space (x) spin), but " +
                              with_article(spatial) + " spatial part with " + with_article(spin_sym) + " spin state " +
                              spin.quantum_numbers.label() + " is " + to_string(total));
    }

    const Complex s = overlap(phi1, phi2);
    const double sign = sign_of(spatial);
    const double norm_sq = 2.0 * (1.0 + sign * std::norm(s));
    if (spatial == Exchange::antisymmetric && 1.0 - std::norm(s) < 1e-8) {
        throw DegenerateInputError("antisymmetric spatial part vanishes: the packets coincide (|overlap|^2 = " +
                                   describe(std::norm(s)) + ")");
    }
    const double inv = 1.0 / std::sqrt(norm_sq);

    const auto n = static_cast<Eigen::Index>(phi1.grid().points());
    const auto d = static_cast<Eigen::Index>(ds);
    const CVector& a = phi1.amplitudes();
    const CVector& b = phi2.amplitudes();
    const CVector& chi = spin.vector.amplitudes();
    CVector out(n * d * n * d);
    for (Eigen::Index x1 = 0; x1 < n; ++x1) {
        for (Eigen::Index s1 = 0; s1 < d; ++s1) {
            for (Eigen::Index x2 = 0; x2 < n; ++x2) {
                const Complex space = inv * (a[x1] * b[x2] + sign * b[x1] * a[x2]);
                for (Eigen::Index s2 = 0; s2 < d; ++s2) {
                    out[((x1 * d + s1) * n + x2) * d + s2] = space * chi[s1 * d + s2];
                }
            }
        }
    }
    Dims dims{static_cast<std::size_t>(n), ds, static_cast<std::size_t>(n), ds};
    return TotalState{StateVector(std::move(dims), std::move(out), Tolerances{1e-10, 1e-9}), spatial, spin_sym, total};
}

double particle_entropy(const TotalState& state) {
    const std::size_t keep[] = {0, 1};
    return entropy(reduced_density_matrix(state.vector, keep));
}

std::vector<ScanRow> separation_scan(const ScanConfig& config, const CoupledBasisState& spin,
                                     const std::vector<double>& separations) {
    if (separations.empty()) throw ValidationError("separation list is empty");
    for (std::size_t k = 0; k < separations.size(); ++k) {
        if (!std::isfinite(separations[k]) || separations[k] < 0.0) {
            throw ValidationError("separation d = " + describe(separations[k]) + " must be finite and >= 0");
        }
        if (k && !(separations[k] > separations[k - 1])) {
            throw ValidationError("separations must be strictly ascending (d = " + describe(separations[k]) + ")");
        }
    }
    // Validate every row before starting work so errors name the first offending d.
    for (double d : separations) {
        try {
            GaussianPacket(config.grid, 0.5 * d, config.sigma);
        } catch (const ValidationError& e) {
            throw ValidationError("separation d = " + describe(d) + ": " + e.what());
        }
    }

    auto row = [&](double d) {
        const GaussianPacket left(config.grid, -0.5 * d, config.sigma);
        const GaussianPacket right(config.grid, 0.5 * d, config.sigma);
        const TotalState state = build_total_state(left, right, spin, config.spatial);
        return ScanRow{d, std::abs(overlap(left, right)), particle_entropy(state), state.exchange_deviation(),
                       std::abs(state.vector.amplitudes().norm() - 1.0)};
    };

    std::vector<ScanRow> rows(separations.size());
    const std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < separations.size(); start += workers) {
        const std::size_t stop = std::min(separations.size(), start + workers);
        std::vector<std::future<ScanRow>> pending;
        for (std::size_t k = start; k < stop; ++k) pending.push_back(std::async(std::launch::async, row, separations[k]));
        for (std::size_t k = start; k < stop; ++k) rows[k] = pending[k - start].get();
    }
    return rows;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << "d,overlap_abs,entropy\n";
    for (const auto& r : rows) {
        out << format_double(r.separation) << ',' << format_double(r.overlap_abs) << ',' << format_double(r.entropy)
            << '\n';
    }
    return out.str();
}

nlohmann::json scan_metadata(const ScanConfig& config, const CoupledBasisState& spin,
                             const std::vector<ScanRow>& rows) {
    double worst_exchange = 0.0, worst_norm = 0.0;
    for (const auto& r : rows) {
        worst_exchange = std::max(worst_exchange, r.exchange_deviation);
        worst_norm = std::max(worst_norm, r.norm_error);
    }
    return {
        {"grid",
         {{"points", config.grid.points()},
          {"half_width", config.grid.half_width()},
          {"spacing", config.grid.spacing()},
          {"nodes", "x_k = -L + (k + 1/2) h"}}},
        {"packet",
         {{"sigma", config.sigma},
          {"width_convention", "amplitude ~ exp(-(x - x0)^2 / (4 sigma^2)); |phi|^2 variance sigma^2"},
          {"centers", "-d/2 and +d/2"},
          {"overlap_closed_form", "exp(-d^2 / (8 sigma^2))"}}},
        {"spin_state", spin.quantum_numbers.label()},
        {"spin_dimension", spin.vector.dims()[0]},
        {"spatial_symmetry", to_string(config.spatial)},
        {"entropy", "von Neumann entropy (nats) of one particle's (grid, spin) factor"},
        {"max_exchange_deviation", worst_exchange},
        {"max_norm_error", worst_norm},
        {"rows", rows.size()},
    };
}

}  // namespace spinent
