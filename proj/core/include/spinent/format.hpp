// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace spinent {

/// Fixed scientific notation with 17 significant digits ("-1.2345678901234567e-01").
/// Negative zero prints as positive zero so outputs stay byte-stable.
std::string format_double(double value);

}  // namespace spinent
