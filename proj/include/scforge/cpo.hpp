#pragma once

#include <cstdint>
#include <vector>

#include "scforge/lifting.hpp"
#include "scforge/params.hpp"
#include "scforge/partition.hpp"

namespace scforge {

struct CpoConfig {
    int subset_size = 3;          // circulants re-drawn per proposal, annealed near stagnation
    std::int64_t budget = 20'000; // proposal iterations (accepted or not)
    std::int64_t target = 0;      // stop when f_sc <= target
    std::uint64_t seed = 1;
};

// Weight of active candidates spanning k replicas of the window; the caller
// halves it for P1.
inline double weight_of_span(int k, const CodeParams& p) {
    return static_cast<double>(p.L - k + 1) / (p.xi() - k + 1);
}

struct CpoTraceEntry {
    std::int64_t iteration = 0;
    std::vector<std::int32_t> circulants; // flattened i*kappa+j
    std::vector<std::int32_t> powers;     // proposed values
    std::int64_t f_sc = 0;                // value after the decision
    bool accepted = false;
};

struct CpoState {
    CirculantPowers powers;
    std::int64_t f_sc = 0;
    std::int64_t f_sc_initial = 0;
    std::vector<std::int64_t> psi;        // gamma*kappa, scaled by psi_scale
    std::vector<std::int64_t> psi_window; // window entries, scaled by psi_scale
    std::int64_t psi_scale = 1;
    std::vector<CpoTraceEntry> trace;
    std::uint64_t seed = 0;
    std::int64_t iterations = 0;
    bool reached_target = false;
};

// Exact psi accumulation over active candidates: values are returned as
// integers scaled by `scale` = 2 * lcm(1..xi) so the span weights
// (L-k+1)/(xi-k+1), halved for P1, stay exact.
void accumulate_psi(const CandidateSet& set, const std::vector<std::uint8_t>& active,
                    long long L, std::vector<std::int64_t>& psi_window,
                    std::vector<std::int64_t>& psi, std::int64_t& scale);

CpoState run_cpo(const PartitionMatrix& part, const CodeParams& p, const CpoConfig& cfg);

} // namespace scforge
