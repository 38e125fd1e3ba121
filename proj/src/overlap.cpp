#include "scforge/overlap.hpp"

#include <algorithm>

namespace scforge {

void OverlapParams::reset(int gamma_, int m_) {
    gamma = gamma_;
    m = m_;
    if (rows() > 20) throw GuardExceeded("(m+1)*gamma above 20 is not supported");
    t.assign(static_cast<size_t>(1) << rows(), 0);
    touched_.clear();
}

void OverlapParams::fill_from_distribution(const ColumnTypeDistribution& dist) {
    if (t.empty() || gamma != dist.gamma || m != dist.m) {
        reset(dist.gamma, dist.m);
    } else {
        for (std::uint32_t mask : touched_) t[mask] = 0;
        t[0] = 0;
        touched_.clear();
    }
    // Column of type a has 1's at stacked rows {a_i*gamma + i}; every subset
    // of that gamma-bit mask gains one count. t[0] ends up equal to kappa.
    for (int type = 0; type < dist.type_count(); ++type) {
        const int n = dist.counts[type];
        if (n == 0) continue;
        std::uint32_t cover = 0;
        int ty = type;
        for (int i = dist.gamma - 1; i >= 0; --i) {
            int y = ty % (dist.m + 1);
            ty /= (dist.m + 1);
            cover |= 1u << (y * dist.gamma + i);
        }
        std::uint32_t sub = cover;
        while (true) {
            if (t[sub] == 0 && sub != 0) touched_.push_back(sub);
            t[sub] += n;
            if (sub == 0) break;
            sub = (sub - 1) & cover;
        }
    }
}

OverlapParams overlap_params(const PartitionMatrix& part) {
    OverlapParams t;
    t.fill_from_distribution(column_type_histogram(part));
    return t;
}

long long independent_param_count(int gamma, int m) {
    if (gamma < 1 || m < 0) throw ConfigError("independent_param_count: gamma >= 1, m >= 0");
    long long n = 1;
    for (int i = 0; i < gamma; ++i) {
        n *= (m + 1);
        if (n > (1LL << 40)) throw GuardExceeded("independent_param_count overflow guard");
    }
    return n - 1;
}

ColumnTypeDistribution distribution_from_overlaps(const OverlapParams& t, const CodeParams& p) {
    if (t.gamma != p.gamma || t.m != p.m)
        throw ConfigError("overlap table shape does not match code parameters");
    ColumnTypeDistribution dist;
    dist.gamma = p.gamma;
    dist.m = p.m;
    dist.counts.assign(static_cast<size_t>(ColumnTypeDistribution::num_types(p.gamma, p.m)), 0);

    long long total = 0;
    for (int type = 0; type < dist.type_count(); ++type) {
        std::uint32_t cover = 0;
        int ty = type;
        for (int i = p.gamma - 1; i >= 0; --i) {
            int y = ty % (p.m + 1);
            ty /= (p.m + 1);
            cover |= 1u << (y * p.gamma + i);
        }
        // A column's stacked support has exactly one row per residue, so the
        // degree-gamma parameter of the full cover set counts exactly the
        // columns of this type.
        std::int64_t n = t.of_mask(cover);
        if (n < 0) throw ConfigError("negative overlap parameter");
        dist.counts[type] = static_cast<int>(n);
        total += n;
    }
    if (total != p.kappa)
        throw ConfigError("overlap parameters are not realizable: degree-gamma "
                          "counts do not sum to kappa");
    // Consistency of the lower-degree parameters.
    OverlapParams back;
    back.fill_from_distribution(dist);
    if (back.t != t.t)
        throw ConfigError("overlap parameters are not realizable by any partition");
    return dist;
}

std::vector<std::uint32_t> independent_param_masks(int gamma, int m) {
    const int top = m * gamma; // indices 0 .. m*gamma - 1
    std::vector<std::uint32_t> out;
    std::vector<std::uint32_t> cur, next;
    cur.push_back(0);
    for (int size = 1; size <= gamma; ++size) {
        next.clear();
        for (std::uint32_t base : cur) {
            int maxbit = base ? (31 - __builtin_clz(base)) : -1;
            for (int b = maxbit + 1; b < top; ++b) {
                std::uint32_t mask = base | (1u << b);
                bool ok = true;
                for (int q = 0; ok && q < top; ++q)
                    if ((mask >> q) & 1u)
                        for (int r = q + 1; r < top; ++r)
                            if (((mask >> r) & 1u) && (q % gamma) == (r % gamma)) { ok = false; break; }
                if (ok) next.push_back(mask);
            }
        }
        std::sort(next.begin(), next.end(), [](std::uint32_t a, std::uint32_t b) {
            // lexicographic by ascending member list
            std::uint32_t x = a, y = b;
            while (x && y) {
                int ax = __builtin_ctz(x), by = __builtin_ctz(y);
                if (ax != by) return ax < by;
                x &= x - 1;
                y &= y - 1;
            }
            return x == 0 && y != 0;
        });
        out.insert(out.end(), next.begin(), next.end());
        cur = next;
    }
    return out;
}

} // namespace scforge
