// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file errata.hpp
 * @brief Compares transcribed listings against the computed coupled basis.
 *
 * Verdicts, from best to worst:
 *  - exact_match: listed amplitudes equal the Condon-Shortley oracle as listed;
 *  - global_phase_match: equal to the computed state up to one global phase;
 *  - normalization_defect: right direction, but the listed squares do not sum to 1;
 *  - amplitude_mismatch: the direction differs from the computed state.
 * Listings whose quantum numbers do not occur are `unmatched`; computed
 * states without any listing are reported as `paper_missing`.
 */

#pragma once

#include <spinent/clebsch.hpp>
#include <spinent/coupling.hpp>
#include <spinent/listing.hpp>
#include <spinent/tolerance.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace spinent {

enum class ErrataVerdict {
    exact_match,
    global_phase_match,
    normalization_defect,
    amplitude_mismatch,
    unmatched,
    paper_missing,
};

std::string to_string(ErrataVerdict v);

/// True for verdicts whose listing describes the right state (exact, phase, normalization).
bool direction_consistent(ErrataVerdict v);

struct CorrectedTerm {
    std::vector<HalfInt> ms;
    ExactAmplitude amplitude;
};

struct ErrataEntry {
    std::string listing_id;  ///< empty for paper_missing
    QuantumNumbers quantum_numbers;
    ErrataVerdict verdict = ErrataVerdict::unmatched;
    double max_deviation = 0.0;  ///< normalized listing vs computed state, modulo global phase
    double listed_norm_squared = 0.0;
    std::vector<std::string> notes;
    std::vector<CorrectedTerm> corrected;  ///< Condon-Shortley oracle amplitudes
};

/// An operator identity stated alongside the listings, checked numerically with g = 1.
struct IdentityCheck {
    std::string id;
    std::string statement;
    double max_deviation = 0.0;
    bool holds = false;
    std::string note;
};

struct ErrataReport {
    std::string system;
    std::string listing_set;
    std::vector<ErrataEntry> entries;  ///< listings in file order, then paper_missing states
    std::vector<IdentityCheck> identities;

    std::size_t count(ErrataVerdict v) const;
    const ErrataEntry* find(const std::string& listing_id) const;
};

ErrataReport match_paper_listing(const SpinSystem& system, const std::vector<CoupledBasisState>& computed,
                                 const ListingSet& listings, const Tolerances& tol = {});

/// Spin-square identities for the system (e.g. s1.s2 = (S^2 - 3/2)/2 for two electrons).
std::vector<IdentityCheck> hamiltonian_identity_checks(const SpinSystem& system);

nlohmann::json to_json(const ErrataReport& report);
std::string to_text(const ErrataReport& report);

}  // namespace spinent
