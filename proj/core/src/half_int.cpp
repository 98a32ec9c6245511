// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <spinent/half_int.hpp>

#include <spinent/errors.hpp>

#include <charconv>
#include <cmath>
#include <string>

namespace spinent {

namespace {

int parse_int(std::string_view text, std::string_view whole) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ValidationError("not a half-integer: '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return integer(parse_int(text, text));
    const int num = parse_int(text.substr(0, slash), text);
    const int den = parse_int(text.substr(slash + 1), text);
    if (den != 2 || num % 2 == 0) throw ValidationError("not a half-integer: '" + std::string(text) + "'");
    return from_twice(num);
}

HalfInt HalfInt::from_double(double value) {
    const double twice = 2.0 * value;
    const double rounded = std::round(twice);
    if (!std::isfinite(value) || std::abs(twice - rounded) > 2e-9) {
        throw ValidationError("not a half-integer: " + std::to_string(value));
    }
    return from_twice(static_cast<int>(rounded));
}

std::string HalfInt::to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

}  // namespace spinent
