#pragma once

#include "scforge/params.hpp"
#include "scforge/partition.hpp"

namespace scforge::testing {

inline CodeParams make_params(int gamma, int kappa, int m, long long L, int z) {
    CodeParams p;
    p.gamma = gamma;
    p.kappa = kappa;
    p.m = m;
    p.L = L;
    p.z = z;
    return p;
}

// The gamma=3, kappa=7, m=1 reference partition with overlap vector
// [3 3 4 0 1 2 0]. The column arrangement is calibrated so that SCB powers
// give the published lifted count 6,500 (the lex-least such arrangement);
// other arrangements of the same column types realize the same overlap
// vector but different lifted counts.
inline PartitionMatrix example1_partition() {
    PartitionMatrix pm;
    pm.gamma = 3;
    pm.kappa = 7;
    pm.m = 1;
    pm.assign = {0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0};
    return pm;
}

} // namespace scforge::testing
