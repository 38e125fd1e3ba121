#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "scforge/kernels/activity.hpp"
#include "scforge/params.hpp"
#include "scforge/window.hpp"

namespace scforge {

// A cycle-8 candidate: a canonical traversal c1-v1-c2-v2-c3-v3-c4-v4 of a
// pattern instance in the window. It lifts to z (z/2 for P1) cycles of
// length 8 iff the alternating power sum over its edges vanishes mod z; a
// diagonal VN pair (v1,v3) or (v2,v4) becomes adjacent in the lift iff some
// window CN outside the pattern closes the corresponding length-6 condition.
struct Candidate {
    std::array<std::int16_t, 8> nodes; // c1,v1,c2,v2,c3,v3,c4,v4 (window ids)
    std::int8_t pattern = 0;
    std::int8_t span = 0;
    std::int8_t leftmost = 0;
    std::int32_t conn_begin = 0, conn_end = 0; // into CandidateSet::conns
};

struct Connection {
    std::int32_t cand = 0;
    std::int8_t diag = 0; // 0: (v1,v3), 1: (v2,v4)
};

struct CandidateSet {
    Window win;
    int z = 0;
    std::vector<Candidate> cands; // P1 candidates grouped at the tail
    std::int32_t p1_begin = 0;
    std::vector<Connection> conns;

    // power conditions, index-aligned with cands / conns
    kernels::ConditionBatch eq8;      // candidates (P1 entries biased by -z/2 at eval time)
    kernels::ConditionBatch eq6;      // internal connections
    kernels::ConditionBatch eq4;      // deduplicated protograph 4-cycles
    std::int32_t sentinel = 0;        // zero entry appended to the power table

    // residue -> ids of candidates / connections / 4-cycles whose condition
    // reads that power entry (for incremental recounts)
    std::vector<std::vector<std::int32_t>> cands_by_residue;
    std::vector<std::vector<std::int32_t>> conns_by_residue;
    std::vector<std::vector<std::int32_t>> fours_by_residue;

    // distinct window entries of each candidate, flattened (for psi)
    std::vector<std::int32_t> entry_index; // window entry = row*cols+col
    std::vector<std::int32_t> entry_begin; // per candidate, size cands+1

    int table_size() const { return win.gamma * win.kappa + 1; }
};

CandidateSet enumerate_candidates(const PartitionMatrix& part, const CodeParams& p,
                                  bool with_incidence = true);

} // namespace scforge
