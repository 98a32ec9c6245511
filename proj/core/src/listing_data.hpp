// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string_view>

namespace spinent::detail {

struct EmbeddedListing {
    std::string_view name;
    std::string_view text;
};

// Defined in the build-generated listing_data.cpp (see core/cmake/embed_listings.cmake).
extern const EmbeddedListing kEmbeddedListings[];
extern const std::size_t kEmbeddedListingCount;

}  // namespace spinent::detail
