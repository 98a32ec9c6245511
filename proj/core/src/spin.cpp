// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <spinent/spin.hpp>

#include <spinent/errors.hpp>

#include <cmath>
#include <sstream>

namespace spinent {

SpinSpecies::SpinSpecies(HalfInt s) : s_(s) {
    if (s.twice() < 1) throw ValidationError("spin must be at least 1/2, got " + s.to_string());
}

std::size_t SpinSpecies::slot_of(HalfInt m) const {
    const int offset = s_.twice() - m.twice();
    if (offset < 0 || offset > 2 * s_.twice() || offset % 2 != 0) {
        throw ValidationError("m = " + m.to_string() + " is not allowed for s = " + s_.to_string());
    }
    return static_cast<std::size_t>(offset / 2);
}

Dims dims_of(const SpinSystem& system) {
    Dims dims;
    dims.reserve(system.size());
    for (const auto& sp : system) dims.push_back(sp.dimension());
    return dims;
}

std::string system_label(const SpinSystem& system) {
    std::string out;
    for (std::size_t i = 0; i < system.size(); ++i) {
        if (i) out += ',';
        const int twice = system[i].s().twice();
        if (twice == 1) out += 'e';
        else if (twice == 2) out += 'p';
        else out += "s=" + system[i].s().to_string();
    }
    return out;
}

SpinSystem parse_system(const std::string& text) {
    SpinSystem system;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "e") system.push_back(SpinSpecies::electron());
        else if (item == "p") system.push_back(SpinSpecies::photon());
        else throw ValidationError("unknown particle '" + item + "' in system '" + text + "' (use e or p)");
    }
    if (system.empty()) throw ValidationError("empty particle system");
    return system;
}

CouplingStrength::CouplingStrength(double value) : value_(value) {
    if (!std::isfinite(value)) throw ValidationError("coupling strength must be finite");
}

SpinMatrices spin_matrices(const SpinSpecies& species) {
    const auto d = static_cast<Eigen::Index>(species.dimension());
    const double s = species.s().value();
    CMatrix raising = CMatrix::Zero(d, d);
    CMatrix z = CMatrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        const double m = s - static_cast<double>(k);
        z(k, k) = m;
        // S+ |m> = sqrt(s(s+1) - m(m+1)) |m+1>, and m+1 sits in slot k-1.
        if (k > 0) raising(k - 1, k) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
    }
    CMatrix lowering = raising.adjoint();
    const Complex i{0.0, 1.0};
    Dims dims{species.dimension()};
    return SpinMatrices{
        HermitianOperator(dims, 0.5 * (raising + lowering)),
        HermitianOperator(dims, (raising - lowering) / (2.0 * i)),
        HermitianOperator(dims, z),
        std::move(raising),
        std::move(lowering),
    };
}

const Eigen::Vector3cd& PolarizationBasis::by_m(int m) const {
    switch (m) {
        case 1: return chi_plus;
        case 0: return chi_zero;
        case -1: return chi_minus;
        default: throw ValidationError("photon polarization m must be -1, 0 or 1");
    }
}

PolarizationBasis photon_polarization_basis() {
    const Complex i{0.0, 1.0};
    const double r = 1.0 / std::sqrt(2.0);
    PolarizationBasis b;
    b.chi_zero << 0.0, 0.0, 1.0;
    b.chi_plus << -r, -r * i, 0.0;
    b.chi_minus << r, -r * i, 0.0;
    return b;
}

std::array<Eigen::Matrix3cd, 3> cartesian_spin_matrices() {
    const Complex i{0.0, 1.0};
    std::array<Eigen::Matrix3cd, 3> s;
    for (int k = 0; k < 3; ++k) {
        s[static_cast<std::size_t>(k)].setZero();
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                // Levi-Civita eps_{kab}.
                const int eps = (k - a) * (a - b) * (b - k) / 2;
                s[static_cast<std::size_t>(k)](a, b) = -i * static_cast<double>(eps);
            }
        }
    }
    return s;
}

Eigen::Matrix3cd cartesian_to_m_frame() {
    const auto basis = photon_polarization_basis();
    Eigen::Matrix3cd u;
    u.row(0) = basis.chi_plus.adjoint();
    u.row(1) = basis.chi_zero.adjoint();
    u.row(2) = basis.chi_minus.adjoint();
    return u;
}

CMatrix embed(const CMatrix& op, const SpinSystem& system, std::size_t site) {
    if (site >= system.size()) throw ValidationError("site index out of range");
    if (static_cast<std::size_t>(op.rows()) != system[site].dimension()) {
        throw ValidationError("operator dimension does not match the species at this site");
    }
    CMatrix out = CMatrix::Identity(1, 1);
    for (std::size_t k = 0; k < system.size(); ++k) {
        const auto d = static_cast<Eigen::Index>(system[k].dimension());
        out = kron(out, k == site ? op : CMatrix::Identity(d, d));
    }
    return out;
}

TotalSpin total_spin(const SpinSystem& system, std::span<const std::size_t> sites) {
    if (system.empty()) throw ValidationError("empty particle system");
    std::vector<std::size_t> chosen(sites.begin(), sites.end());
    if (chosen.empty()) {
        for (std::size_t k = 0; k < system.size(); ++k) chosen.push_back(k);
    }
    const Dims dims = dims_of(system);
    const auto n = static_cast<Eigen::Index>(total_dimension(dims));
    CMatrix x = CMatrix::Zero(n, n), y = CMatrix::Zero(n, n), z = CMatrix::Zero(n, n);
    CMatrix lowering = CMatrix::Zero(n, n);
    for (auto site : chosen) {
        const auto m = spin_matrices(system.at(site));
        x += embed(m.x.matrix(), system, site);
        y += embed(m.y.matrix(), system, site);
        z += embed(m.z.matrix(), system, site);
        lowering += embed(m.lowering, system, site);
    }
    CMatrix squared = x * x + y * y + z * z;
    squared = (0.5 * (squared + squared.adjoint())).eval();
    return TotalSpin{HermitianOperator(dims, x), HermitianOperator(dims, y), HermitianOperator(dims, z),
                     HermitianOperator(dims, squared), std::move(lowering)};
}

HermitianOperator spin_spin_hamiltonian(const SpinSystem& system, CouplingStrength g) {
    if (system.size() < 2) throw ValidationError("spin-spin Hamiltonian needs at least two particles");
    const Dims dims = dims_of(system);
    const auto n = static_cast<Eigen::Index>(total_dimension(dims));
    std::vector<SpinMatrices> local;
    local.reserve(system.size());
    for (const auto& sp : system) local.push_back(spin_matrices(sp));

    CMatrix h = CMatrix::Zero(n, n);
    for (std::size_t i = 0; i < system.size(); ++i) {
        for (std::size_t j = i + 1; j < system.size(); ++j) {
            h += embed(local[i].x.matrix(), system, i) * embed(local[j].x.matrix(), system, j);
            h += embed(local[i].y.matrix(), system, i) * embed(local[j].y.matrix(), system, j);
            h += embed(local[i].z.matrix(), system, i) * embed(local[j].z.matrix(), system, j);
        }
    }
    h *= g.value();
    h = (0.5 * (h + h.adjoint())).eval();
    return HermitianOperator(dims, std::move(h));
}

}  // namespace spinent
