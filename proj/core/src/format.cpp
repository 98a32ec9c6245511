// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <spinent/format.hpp>

#include <cstdio>

namespace spinent {

std::string format_double(double value) {
    if (value == 0.0) value = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", value);
    return buf;
}

}  // namespace spinent
