#pragma once

#include <cstdint>
#include <vector>

#include "scforge/params.hpp"

namespace scforge {

// Component assignment of each circulant of H: entry (i,j) names the
// component matrix H_y, 0 <= y <= m, that receives circulant (i,j).
struct PartitionMatrix {
    int gamma = 0, kappa = 0, m = 0;
    std::vector<std::uint8_t> assign; // gamma * kappa entries in [0, m]

    std::uint8_t at(int i, int j) const { return assign[static_cast<size_t>(i) * kappa + j]; }
    std::uint8_t& at(int i, int j) { return assign[static_cast<size_t>(i) * kappa + j]; }
};

// Histogram over column types. A column type is the assignment vector
// a = (a_0, ..., a_{gamma-1}) of its gamma circulants; types are indexed by
// sum a_i * (m+1)^(gamma-1-i), i.e. ascending lexicographic order of a.
struct ColumnTypeDistribution {
    int gamma = 0, m = 0;
    std::vector<int> counts; // size (m+1)^gamma

    int type_count() const { return static_cast<int>(counts.size()); }
    int mass() const;

    static long long num_types(int gamma, int m); // (m+1)^gamma, guarded
};

// Decode type id into the assignment vector a (a_0 first).
std::vector<int> type_vector(int type, int gamma, int m);

// Columns are assigned types in ascending lexicographic order of a, ties
// broken by column index.
PartitionMatrix partition_from_distribution(const ColumnTypeDistribution& dist, const CodeParams& p);

// Inverse of the above up to column order.
ColumnTypeDistribution column_type_histogram(const PartitionMatrix& part);

// Contiguous cutting-vector partitioning (m = 1): circulant (i,j) goes to
// H_0 iff j < zeta_i, else H_1. `mirror` swaps the two components.
PartitionMatrix cv_partition(const std::vector<int>& zeta, const CodeParams& p, bool mirror = false);

// All circulants in H_0.
PartitionMatrix uncoupled_partition(const CodeParams& p);

} // namespace scforge
