#pragma once

#include <cstdint>
#include <vector>

#include "scforge/params.hpp"
#include "scforge/partition.hpp"

namespace scforge {

// Dense protograph of the coupled code: gamma*(L+m) x kappa*L binary matrix,
// replica rho (1-based) occupying column block rho-1 with the stacked
// component matrices at vertical offset gamma*(rho-1).
struct SCProtograph {
    int gamma = 0, kappa = 0, m = 0;
    long long L = 0;
    std::vector<std::uint8_t> bits; // rows() * cols()

    long long rows() const { return static_cast<long long>(gamma) * (L + m); }
    long long cols() const { return static_cast<long long>(kappa) * L; }
    std::uint8_t at(long long r, long long c) const { return bits[r * cols() + c]; }
    int replica_of_col(long long c) const { return static_cast<int>(c / kappa) + 1; }
};

SCProtograph build_sc_protograph(const PartitionMatrix& part, long long L);

} // namespace scforge
