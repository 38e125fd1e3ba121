#pragma once

#include <cstdint>
#include <vector>

#include "scforge/params.hpp"
#include "scforge/partition.hpp"

namespace scforge {

// Working window: the non-zero part of the first xi = 2m+1 replicas of the
// SC protograph, of size (xi+m)*gamma x xi*kappa. Circulant powers of a
// window entry are inherited from its residue: f'(i',j') = f(i'%gamma, j'%kappa).
struct Window {
    int gamma = 0, kappa = 0, m = 0, xi = 0;
    int rows = 0, cols = 0;
    std::vector<std::vector<std::int16_t>> row_adj; // columns per row
    std::vector<std::vector<std::int16_t>> col_adj; // rows per column
    std::vector<std::uint32_t> col_mask;            // row set per column

    bool has(int r, int c) const { return (col_mask[c] >> r) & 1u; }
    int replica_of_col(int c) const { return c / kappa + 1; }
    std::int32_t residue(int r, int c) const { return (r % gamma) * kappa + (c % kappa); }
};

Window build_window(const PartitionMatrix& part, const CodeParams& p);

} // namespace scforge
