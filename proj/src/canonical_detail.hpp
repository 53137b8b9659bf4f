#pragma once

#include <cstdint>

namespace tourney::detail {

// is_canonical on raw out-masks, skipping tournament validation.
bool identity_is_max_code(const std::uint64_t* out, int n);

}  // namespace tourney::detail
