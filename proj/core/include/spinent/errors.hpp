// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace spinent {

/// Input failed a documented precondition.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Product-space dimension exceeds the configured cap.
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// Construction would produce the zero vector (e.g. antisymmetrizing identical packets).
class DegenerateInputError : public ValidationError {
public:
    explicit DegenerateInputError(const std::string& what) : ValidationError(what) {}
};

}  // namespace spinent
