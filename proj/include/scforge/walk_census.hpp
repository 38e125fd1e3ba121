#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "scforge/params.hpp"
#include "scforge/patterns.hpp"
#include "scforge/protograph.hpp"

namespace scforge {

// Exhaustive cycle-8 candidate census of an SC protograph, by direct
// enumeration of closed length-8 walks (no immediate backtracking),
// canonicalized up to rotation by one (CN,VN) step and reflection. Walks are
// grouped into pattern instances by their edge set; the per-instance walk
// multiplicity must equal zeta of the pattern.
struct WalkCensusResult {
    std::array<std::int64_t, kNumPatterns + 1> instances{}; // [1..9]
    std::array<std::int64_t, kNumPatterns + 1> walks{};
    Half weighted{};
    bool multiplicities_ok = true;
    bool spans_ok = true; // no instance spans more than 2m+1 replicas
    // instance counts bucketed by span (index k) restricted to leftmost
    // replica 1, and by leftmost replica (any span)
    std::array<std::vector<std::int64_t>, kNumPatterns + 1> span_start1;   // [ell][k]
    std::array<std::vector<std::int64_t>, kNumPatterns + 1> by_leftmost;   // [ell][rho]
    // by (leftmost, span) for shift-invariance checks
    std::array<std::vector<std::int64_t>, kNumPatterns + 1> by_leftmost_span; // [ell][rho*(maxspan+1)+k]
    int max_span = 0;
};

WalkCensusResult brute_force_candidate_census(const SCProtograph& sc,
                                              std::int64_t walk_guard = 200'000'000);

} // namespace scforge
