#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "scforge/census.hpp"
#include "scforge/overlap.hpp"
#include "scforge/params.hpp"
#include "scforge/partition.hpp"

namespace scforge {

// Balanced-partitioning constraint plus realizability of the overlap
// parameters by some partition. Realizability is automatic for parameters
// derived from a column-type distribution.
bool check_constraints(const OverlapParams& t, const CodeParams& p);

// Balance alone, evaluated on a distribution (the solver's hot path).
bool balanced(const ColumnTypeDistribution& dist, const CodeParams& p);

struct OOSolution {
    OverlapParams t_star;
    Half f_star{};
    PartitionMatrix partition;
    ColumnTypeDistribution distribution;
    std::string strategy;        // "exhaustive" | "local-search"
    std::int64_t visited = 0;    // distributions evaluated
    int restarts = 0;
    bool optimal = false;        // true only for a completed exhaustive scan
};

// Exhaustive scan over balanced column-type distributions, deterministic
// lex-least tie-break. Throws GuardExceeded when the composition space
// C(kappa + T - 1, T - 1) exceeds the guard.
OOSolution solve_exhaustive(const CodeParams& p, std::int64_t space_guard = 10'000'000);

// Steepest-descent moves (shift one column between two types) from random
// balanced starts. budget = maximum accepted moves per restart; budget 0
// returns the first seeded start unchanged.
OOSolution solve_local(const CodeParams& p, std::uint64_t seed, int restarts, std::int64_t budget);

// Size of the exhaustive search space for the guard decision.
long long exhaustive_space(const CodeParams& p);

} // namespace scforge
