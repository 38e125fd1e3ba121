#include "scforge/partition.hpp"

#include <numeric>

namespace scforge {

int ColumnTypeDistribution::mass() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

long long ColumnTypeDistribution::num_types(int gamma, int m) {
    long long n = 1;
    for (int i = 0; i < gamma; ++i) {
        n *= (m + 1);
        if (n > 1'000'000) throw GuardExceeded("(m+1)^gamma type space too large");
    }
    return n;
}

std::vector<int> type_vector(int type, int gamma, int m) {
    std::vector<int> a(gamma);
    for (int i = gamma - 1; i >= 0; --i) {
        a[i] = type % (m + 1);
        type /= (m + 1);
    }
    return a;
}

PartitionMatrix partition_from_distribution(const ColumnTypeDistribution& dist, const CodeParams& p) {
    if (dist.gamma != p.gamma || dist.m != p.m)
        throw ConfigError("distribution shape does not match code parameters");
    if (dist.mass() != p.kappa)
        throw ConfigError("distribution mass must equal kappa");

    PartitionMatrix part;
    part.gamma = p.gamma;
    part.kappa = p.kappa;
    part.m = p.m;
    part.assign.assign(static_cast<size_t>(p.gamma) * p.kappa, 0);

    int col = 0;
    for (int type = 0; type < dist.type_count(); ++type) {
        if (dist.counts[type] < 0) throw ConfigError("negative type count");
        const std::vector<int> a = type_vector(type, p.gamma, p.m);
        for (int n = 0; n < dist.counts[type]; ++n, ++col)
            for (int i = 0; i < p.gamma; ++i)
                part.at(i, col) = static_cast<std::uint8_t>(a[i]);
    }
    return part;
}

ColumnTypeDistribution column_type_histogram(const PartitionMatrix& part) {
    ColumnTypeDistribution dist;
    dist.gamma = part.gamma;
    dist.m = part.m;
    dist.counts.assign(static_cast<size_t>(ColumnTypeDistribution::num_types(part.gamma, part.m)), 0);
    for (int j = 0; j < part.kappa; ++j) {
        int type = 0;
        for (int i = 0; i < part.gamma; ++i) type = type * (part.m + 1) + part.at(i, j);
        ++dist.counts[type];
    }
    return dist;
}

PartitionMatrix cv_partition(const std::vector<int>& zeta, const CodeParams& p, bool mirror) {
    if (p.m != 1) throw ConfigError("cutting-vector partitioning requires m = 1");
    if (static_cast<int>(zeta.size()) != p.gamma)
        throw ConfigError("cutting vector must have gamma entries");
    for (int i = 0; i < p.gamma; ++i) {
        if (zeta[i] < 0 || zeta[i] > p.kappa)
            throw ConfigError("cutting vector entries must lie in [0, kappa]");
        if (i > 0 && zeta[i - 1] >= zeta[i])
            throw ConfigError("cutting vector must be strictly ascending");
    }

    PartitionMatrix part;
    part.gamma = p.gamma;
    part.kappa = p.kappa;
    part.m = p.m;
    part.assign.assign(static_cast<size_t>(p.gamma) * p.kappa, 0);
    for (int i = 0; i < p.gamma; ++i)
        for (int j = 0; j < p.kappa; ++j) {
            bool below = j < zeta[i];
            part.at(i, j) = static_cast<std::uint8_t>((below != mirror) ? 0 : 1);
        }
    return part;
}

PartitionMatrix uncoupled_partition(const CodeParams& p) {
    PartitionMatrix part;
    part.gamma = p.gamma;
    part.kappa = p.kappa;
    part.m = p.m;
    part.assign.assign(static_cast<size_t>(p.gamma) * p.kappa, 0);
    return part;
}

} // namespace scforge
