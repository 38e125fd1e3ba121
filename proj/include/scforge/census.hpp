#pragma once

#include <array>
#include <cstdint>

#include "scforge/overlap.hpp"
#include "scforge/params.hpp"
#include "scforge/patterns.hpp"

namespace scforge {

// Closed-form pattern census of the SC protograph as a function of the
// overlap parameters.
//
// pattern_span_count(ell, k, ...) is the number of instances of pattern ell
// that start at the first replica and span k consecutive replicas; it is
// independent of L. pattern_total applies the (L-k+1)^+ start weights, which
// is exact for every L >= 1 (the clamp only matters below the spans the
// printed formulas assume).

std::int64_t pattern_span_count(int ell, int k, const OverlapParams& t, const CodeParams& p);

std::int64_t pattern_total(int ell, const OverlapParams& t, const CodeParams& p);

struct PatternCensus {
    std::array<std::int64_t, kNumPatterns + 1> total{}; // [1..9]
    Half f_sum{};
};

PatternCensus census(const OverlapParams& t, const CodeParams& p);

inline Half weighted_sum(const OverlapParams& t, const CodeParams& p) { return census(t, p).f_sum; }

inline std::int64_t positive_part(std::int64_t x) { return x > 0 ? x : 0; }

} // namespace scforge
