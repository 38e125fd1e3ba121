#pragma once

#include <cstdint>

#include "scforge/lifting.hpp"

namespace scforge {

// Exhaustive count of (4, 4(gamma-2)) UASs/UTSs in the lifted graph: 4-VN
// subsets whose pairwise shared-CN graph is exactly a 4-cycle (consecutive
// pairs share one CN each, diagonal pairs share none). Requires girth >= 6
// and refuses codes containing a 4-cycle.
std::int64_t brute_force_lifted_count(const LiftedCode& code, std::int64_t guard = 4'000'000);

} // namespace scforge
