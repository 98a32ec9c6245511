// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file jc.hpp
 * @brief Two-photon Jaynes-Cummings model in the invariant subspace {|a,n>, |b,n+2>}.
 *
 * H = w a+a + (w0/2) sz + g (a+^2 s- + a^2 s+), hbar = 1. Starting from |a,n>
 * the state stays in span{|a,n>, |b,n+2>}, so the 2x2 block is exact.
 *
 *   detuning        delta  = w0 - 2w
 *   Rabi frequency  w1     = 2 g sqrt((n+1)(n+2))
 *   generalized     Omega  = sqrt(delta^2 + w1^2)
 */

#pragma once

#include <spinent/tensor.hpp>

#include <span>
#include <string>
#include <vector>

namespace spinent {

class JCParams {
public:
    /// Throws ValidationError on non-finite frequencies/coupling or n < 0.
    JCParams(double omega, double omega0, double g, int n);

    double omega() const { return omega_; }
    double omega0() const { return omega0_; }
    double g() const { return g_; }
    int n() const { return n_; }

    double delta() const { return omega0_ - 2.0 * omega_; }
    double rabi() const;
    double generalized_rabi() const;

private:
    double omega_, omega0_, g_;
    int n_;
};

/// `schrodinger`: exact solution of i dc/dt = H c.
/// `as_printed`: the listed closed forms, whose c1 bracket carries
/// +i delta and whose c2 carries exp(+i w (n+1) t). Populations agree with the
/// Schrodinger form; the relative phase of c1 and c2 does not.
enum class PhaseConvention { schrodinger, as_printed };

struct JCAmplitudes {
    Complex c1;
    Complex c2;
};

JCAmplitudes analytic_state(const JCParams& params, double t,
                            PhaseConvention convention = PhaseConvention::schrodinger);

/// 2x2 block in the basis {|a,n>, |b,n+2>}.
HermitianOperator hamiltonian_block(const JCParams& params);

struct JCTrajectory {
    std::vector<double> times;
    std::vector<Complex> c1;
    std::vector<Complex> c2;
    std::vector<double> entropy;

    std::size_t size() const { return times.size(); }
};

/// Default RK4 step: 0.01 / max(w1, |delta|, w, 1).
double default_step(const JCParams& params);

/// Fixed-step RK4 integration sampled at `times` (ascending, starting anywhere >= 0 from |a,n> at t=0).
/// `max_step` <= 0 selects default_step(). Throws ValidationError for a non-ascending grid.
JCTrajectory evolve_numeric(const JCParams& params, std::span<const double> times, double max_step = 0.0);

/// Closed-form amplitudes on a grid.
JCTrajectory analytic_trajectory(const JCParams& params, std::span<const double> times,
                                 PhaseConvention convention = PhaseConvention::schrodinger);

/// Atom-field entanglement entropy -|c1|^2 ln|c1|^2 - |c2|^2 ln|c2|^2 per sample.
std::vector<double> entanglement_trajectory(const JCTrajectory& trajectory);

/// max over samples of the amplitude deviation after removing one global phase per sample.
double max_phase_adjusted_deviation(const JCTrajectory& a, const JCTrajectory& b);

/// count points evenly spaced over [t0, t1].
std::vector<double> uniform_grid(double t0, double t1, std::size_t count);

/// Columns t, re_c1, im_c1, re_c2, im_c2, p2, entropy.
std::string to_csv(const JCTrajectory& trajectory);

}  // namespace spinent
