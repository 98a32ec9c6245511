// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <spinent/half_int.hpp>

#include <cstdint>
#include <string>

namespace spinent {

/// sign * numerator / sqrt(radicand), kept in the canonical form with the
/// smallest numerator for which the radicand is an integer.
struct ExactAmplitude {
    int sign = 0;  ///< -1, 0 or +1
    std::uint64_t numerator = 0;
    std::uint64_t radicand = 1;

    /// Canonical amplitude with square p/q and the given sign.
    static ExactAmplitude from_square(std::uint64_t p, std::uint64_t q, int sign);

    double value() const;
    bool is_zero() const { return sign == 0; }
    /// "+2/sqrt(6)", "-1/sqrt(2)", "+1", "0"
    std::string to_string() const;

    ExactAmplitude operator*(const ExactAmplitude& other) const;
    bool operator==(const ExactAmplitude&) const = default;
};

/// <j1 m1; j2 m2 | J M> in the Condon-Shortley convention.
/// Returns exact zero whenever a selection rule fails; throws ValidationError for negative j.
ExactAmplitude clebsch_gordan_exact(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

inline double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
    return clebsch_gordan_exact(j1, m1, j2, m2, J, M).value();
}

/// Triangle rule |j1 - j2| <= J <= j1 + j2 with j1 + j2 + J integer.
bool triangle(HalfInt j1, HalfInt j2, HalfInt J);

}  // namespace spinent
