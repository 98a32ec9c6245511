// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace spinent {

/// Half-integer stored as twice its value, so 3/2 is kept as 3.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
    static constexpr HalfInt integer(int value) { return HalfInt(2 * value); }

    /// Parses "1", "-1", "1/2", "-3/2", "+1/2". Anything else throws ValidationError.
    static HalfInt parse(std::string_view text);

    /// Converts a double that is within 1e-9 of a half-integer; throws otherwise.
    static HalfInt from_double(double value);

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
    constexpr auto operator<=>(const HalfInt&) const = default;

    /// "3/2", "-1/2", "1", "0".
    std::string to_string() const;

private:
    constexpr explicit HalfInt(int twice) : twice_(twice) {}
    int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

}  // namespace spinent
