#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "scforge/params.hpp"
#include "scforge/partition.hpp"

namespace scforge {

// Overlap parameters t_S of the stacked replica [H_0^T ... H_m^T]^T: for a
// set S of stacked-replica rows, t_S is the number of columns with 1's in
// every row of S. Stored densely, indexed by row-set bitmask; sets touching
// rows outside the replica or containing two rows with equal residue mod
// gamma are zero by construction.
struct OverlapParams {
    int gamma = 0, m = 0;
    std::vector<std::int64_t> t; // size 1 << rows()

    int rows() const { return (m + 1) * gamma; }

    std::int64_t of_mask(std::uint32_t mask) const { return t[mask]; }

    // t for explicit (possibly shifted) row indices; any index outside
    // [0, rows()) makes the parameter 0.
    std::int64_t lookup(std::span<const int> idx) const {
        std::uint32_t mask = 0;
        for (int i : idx) {
            if (i < 0 || i >= rows()) return 0;
            mask |= 1u << i;
        }
        return t[mask];
    }
    std::int64_t lookup(std::initializer_list<int> idx) const {
        return lookup(std::span<const int>(idx.begin(), idx.size()));
    }

    void reset(int gamma_, int m_);
    void fill_from_distribution(const ColumnTypeDistribution& dist);

private:
    std::vector<std::uint32_t> touched_; // masks set by the last fill
};

OverlapParams overlap_params(const PartitionMatrix& part);

inline std::int64_t t_lookup(const OverlapParams& t, std::span<const int> idx) { return t.lookup(idx); }

// |O_ind| = (m+1)^gamma - 1.
long long independent_param_count(int gamma, int m);

// Recover the (unique) column-type histogram from overlap parameters. The
// degree-gamma parameters pin each type count; throws if the remaining
// parameters are inconsistent with any partition.
ColumnTypeDistribution distribution_from_overlaps(const OverlapParams& t, const CodeParams& p);

// Convenience for tests and the CLI: the independent-parameter vector for
// m=1, gamma=3 ordering [t0 t1 t2 t01 t02 t12 t012]; general ordering is all
// residue-distinct subsets of {0..m*gamma-1} by (size, lexicographic).
std::vector<std::uint32_t> independent_param_masks(int gamma, int m);

} // namespace scforge
