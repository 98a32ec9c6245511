// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

namespace spinent {

struct Tolerances {
    double physics = 1e-10;    ///< eigen-relations, state comparisons
    double algebraic = 1e-12;  ///< norms, traces, Hermiticity
};

/// Upper bound on the product of subsystem dimensions.
inline constexpr std::size_t kDefaultDimensionCap = std::size_t{1} << 20;

}  // namespace spinent
