// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <spinent/tensor.hpp>
#include <spinent/spin.hpp>

#include <iosfwd>
#include <string_view>

namespace spinent::cli {

enum ExitCode : int { kOk = 0, kCrossCheckFailed = 1, kUsage = 2 };

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Amplitude file: optional "#! system e,e" directive, then one line per product state
///   m1 m2 [m3] | re [im]
/// Missing product states are zero. `fallback` is used when no directive is present.
StateVector parse_amplitude_file(std::string_view text, const SpinSystem* fallback);

}  // namespace spinent::cli
