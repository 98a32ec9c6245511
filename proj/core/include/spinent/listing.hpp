// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file listing.hpp
 * @brief Transcribed state tables ("listings") in a plain-text format.
 *
 * One amplitude per line:
 *
 *     listing_id S' S M_s | m1 m2 [m3] | coeff_num coeff_den_sqrt sign
 *
 * The amplitude is sign * coeff_num / sqrt(coeff_den_sqrt). S' is '-' for
 * two-particle states. Lines starting with '#' are comments, except
 * directives:
 *
 *     #! system e,e,e
 *     #! verdict eq25 entangled|not-entangled|ambiguous
 *
 * Listings are kept exactly as transcribed, inconsistencies included.
 */

#pragma once

#include <spinent/coupling.hpp>
#include <spinent/spin.hpp>
#include <spinent/tensor.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinent {

struct ListingTerm {
    std::vector<HalfInt> ms;
    std::uint64_t numerator = 0;
    std::uint64_t radicand = 1;
    int sign = 1;

    double value() const;
};

struct PaperListing {
    std::string id;
    QuantumNumbers quantum_numbers;
    std::vector<ListingTerm> terms;

    double norm_squared() const;
    /// Amplitudes over the product basis, not normalized.
    CVector raw_amplitudes(const SpinSystem& system) const;
    /// Normalized state; throws ValidationError when all amplitudes vanish.
    StateVector state(const SpinSystem& system) const;
};

enum class PaperVerdict { entangled, not_entangled, ambiguous };

std::string to_string(PaperVerdict v);

struct ListingSet {
    std::string name;  ///< e.g. "three_photons"
    SpinSystem system;
    std::vector<PaperListing> listings;  ///< file order
    std::map<std::string, PaperVerdict> verdicts;

    const PaperListing* find(std::string_view id) const;
    std::optional<PaperVerdict> verdict(std::string_view id) const;
};

/// Parses one listing file. Throws ValidationError with the offending line number.
ListingSet parse_listing_set(std::string_view text, std::string name = {});

/// Serializes one amplitude line in the listing format.
std::string format_listing_line(const std::string& id, const QuantumNumbers& q, const std::vector<HalfInt>& ms,
                                std::uint64_t numerator, std::uint64_t radicand, int sign);

/// Listings compiled into the library: two_electrons, three_electrons, two_photons, three_photons.
const std::vector<ListingSet>& builtin_listing_sets();

/// Built-in set for a system, or nullptr.
const ListingSet* builtin_listing_set(const SpinSystem& system);

struct ListingRef {
    const ListingSet* set = nullptr;
    const PaperListing* listing = nullptr;
};

/// Looks up a listing id across the built-in sets.
std::optional<ListingRef> find_builtin_listing(std::string_view id);

}  // namespace spinent
