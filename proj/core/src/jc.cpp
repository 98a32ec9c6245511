// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <spinent/jc.hpp>

#include <spinent/entanglement.hpp>
#include <spinent/errors.hpp>
#include <spinent/format.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spinent {

JCParams::JCParams(double omega, double omega0, double g, int n) : omega_(omega), omega0_(omega0), g_(g), n_(n) {
    if (!std::isfinite(omega) || !std::isfinite(omega0)) throw ValidationError("JC frequencies must be finite");
    if (!std::isfinite(g)) throw ValidationError("JC coupling g must be finite");
    if (n < 0) throw ValidationError("initial photon number n must be non-negative");
}

double JCParams::rabi() const { return 2.0 * g_ * std::sqrt((n_ + 1.0) * (n_ + 2.0)); }

double JCParams::generalized_rabi() const { return std::hypot(delta(), rabi()); }

JCAmplitudes analytic_state(const JCParams& p, double t, PhaseConvention convention) {
    if (!std::isfinite(t)) throw ValidationError("time must be finite");
    const Complex i{0.0, 1.0};
    const double big_omega = p.generalized_rabi();
    const double mean_energy = p.omega() * (p.n() + 1.0);
    const double c = std::cos(0.5 * big_omega * t);
    const double s = std::sin(0.5 * big_omega * t);
    // Omega = 0 only when g = 0 and delta = 0; the limits are c1 = phase, c2 = 0.
    const double d_ratio = big_omega > 0.0 ? p.delta() / big_omega : 0.0;
    const double r_ratio = big_omega > 0.0 ? p.rabi() / big_omega : 0.0;

    const Complex lead = std::exp(-i * mean_energy * t);
    if (convention == PhaseConvention::as_printed) {
        return {lead * (c + i * d_ratio * s), -i * std::exp(i * mean_energy * t) * r_ratio * s};
    }
    return {lead * (c - i * d_ratio * s), lead * (-i * r_ratio * s)};
}

HermitianOperator hamiltonian_block(const JCParams& p) {
    const double n = p.n();
    CMatrix h(2, 2);
    h(0, 0) = p.omega() * n + 0.5 * p.omega0();
    h(1, 1) = p.omega() * (n + 2.0) - 0.5 * p.omega0();
    h(0, 1) = h(1, 0) = p.g() * std::sqrt((n + 1.0) * (n + 2.0));
    return HermitianOperator({2}, h);
}

double default_step(const JCParams& p) {
    return 0.01 / std::max({std::abs(p.rabi()), std::abs(p.delta()), std::abs(p.omega()), 1.0});
}

JCTrajectory evolve_numeric(const JCParams& p, std::span<const double> times, double max_step) {
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!std::isfinite(times[k]) || times[k] < 0.0) throw ValidationError("time grid must be finite and >= 0");
        if (k && !(times[k] > times[k - 1])) throw ValidationError("time grid must be strictly ascending");
    }
    const double h_max = max_step > 0.0 ? max_step : default_step(p);

    // Integrate the traceless part; the trace only contributes the phase exp(-i E t),
    // applied exactly at each sample.
    const Eigen::Matrix2cd full = hamiltonian_block(p).matrix();
    const double mean_energy = 0.5 * full.trace().real();
    const Complex i{0.0, 1.0};
    const Eigen::Matrix2cd gen = -i * (full - mean_energy * Eigen::Matrix2cd::Identity());

    auto rk4 = [&gen](const Eigen::Vector2cd& y, double dt) {
        const Eigen::Vector2cd k1 = gen * y;
        const Eigen::Vector2cd k2 = gen * (y + 0.5 * dt * k1);
        const Eigen::Vector2cd k3 = gen * (y + 0.5 * dt * k2);
        const Eigen::Vector2cd k4 = gen * (y + dt * k3);
        return Eigen::Vector2cd(y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
    };

    JCTrajectory out;
    Eigen::Vector2cd y(1.0, 0.0);
    double t = 0.0;
    for (double target : times) {
        const double span = target - t;
        if (span > 0.0) {
            const auto steps = static_cast<std::size_t>(std::ceil(span / h_max));
            const double dt = span / static_cast<double>(steps);
            for (std::size_t k = 0; k < steps; ++k) y = rk4(y, dt);
        }
        t = target;
        const Complex phase = std::exp(-i * mean_energy * t);
        out.times.push_back(t);
        out.c1.push_back(phase * y[0]);
        out.c2.push_back(phase * y[1]);
    }
    out.entropy = entanglement_trajectory(out);
    return out;
}

JCTrajectory analytic_trajectory(const JCParams& p, std::span<const double> times, PhaseConvention convention) {
    JCTrajectory out;
    for (double t : times) {
        const auto a = analytic_state(p, t, convention);
        out.times.push_back(t);
        out.c1.push_back(a.c1);
        out.c2.push_back(a.c2);
    }
    out.entropy = entanglement_trajectory(out);
    return out;
}

std::vector<double> entanglement_trajectory(const JCTrajectory& trajectory) {
    std::vector<double> out;
    out.reserve(trajectory.size());
    for (std::size_t k = 0; k < trajectory.size(); ++k) {
        const double p[2] = {std::norm(trajectory.c1[k]), std::norm(trajectory.c2[k])};
        out.push_back(shannon_entropy(p));
    }
    return out;
}

double max_phase_adjusted_deviation(const JCTrajectory& a, const JCTrajectory& b) {
    if (a.size() != b.size()) throw ValidationError("trajectories have different lengths");
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        CVector va(2), vb(2);
        va << a.c1[k], a.c2[k];
        vb << b.c1[k], b.c2[k];
        worst = std::max(worst, distance_up_to_phase(va, vb));
    }
    return worst;
}

std::vector<double> uniform_grid(double t0, double t1, std::size_t count) {
    if (count < 2 || !(t1 > t0)) throw ValidationError("grid needs count >= 2 and t1 > t0");
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) out[k] = t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(count - 1);
    return out;
}

std::string to_csv(const JCTrajectory& trajectory) {
    std::ostringstream out;
    out << "t,re_c1,im_c1,re_c2,im_c2,p2,entropy\n";
    for (std::size_t k = 0; k < trajectory.size(); ++k) {
        out << format_double(trajectory.times[k]) << ',' << format_double(trajectory.c1[k].real()) << ','
            << format_double(trajectory.c1[k].imag()) << ',' << format_double(trajectory.c2[k].real()) << ','
            << format_double(trajectory.c2[k].imag()) << ',' << format_double(std::norm(trajectory.c2[k])) << ','
            << format_double(trajectory.entropy[k]) << '\n';
    }
    return out.str();
}

}  // namespace spinent
