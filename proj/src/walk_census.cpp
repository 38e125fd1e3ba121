#include "scforge/walk_census.hpp"

#include <algorithm>
#include <map>

namespace scforge {

namespace {

using Walk = std::array<std::int16_t, 8>; // c1,v1,c2,v2,c3,v3,c4,v4

Walk rotate(const Walk& w) {
    return {w[2], w[3], w[4], w[5], w[6], w[7], w[0], w[1]};
}

Walk reflect(const Walk& w) {
    // reverse traversal starting from the same CN: c1,v4,c4,v3,c3,v2,c2,v1
    return {w[0], w[7], w[6], w[5], w[4], w[3], w[2], w[1]};
}

bool is_canonical(const Walk& w) {
    Walk r = w;
    for (int spin = 0; spin < 2; ++spin) {
        Walk q = spin ? reflect(w) : w;
        for (int rot = 0; rot < 4; ++rot) {
            if (rot || spin) {
                if (q < r) return false;
            }
            q = rotate(q);
        }
    }
    return true;
}

} // namespace

WalkCensusResult brute_force_candidate_census(const SCProtograph& sc, std::int64_t walk_guard) {
    const int rows = static_cast<int>(sc.rows());
    const int cols = static_cast<int>(sc.cols());
    if (rows > 4000 || cols > 4000) throw GuardExceeded("protograph too large for walk census");

    std::vector<std::vector<std::int16_t>> row_adj(rows), col_adj(cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (sc.at(r, c)) {
                row_adj[r].push_back(static_cast<std::int16_t>(c));
                col_adj[c].push_back(static_cast<std::int16_t>(r));
            }

    WalkCensusResult out;
    out.max_span = std::min<long long>(sc.L, 2LL * sc.m + 1);
    for (int ell = 1; ell <= 9; ++ell) {
        out.span_start1[ell].assign(out.max_span + 1, 0);
        out.by_leftmost[ell].assign(sc.L + 1, 0);
        out.by_leftmost_span[ell].assign((sc.L + 1) * (out.max_span + 1), 0);
    }

    // canonical walk -> (pattern, instance edge-set key)
    std::map<std::vector<std::int32_t>, std::pair<int, std::int64_t>> by_instance;
    std::int64_t visited = 0;

    for (int c1 = 0; c1 < rows; ++c1)
        for (std::int16_t v1 : row_adj[c1])
            for (std::int16_t c2 : col_adj[v1]) {
                if (c2 <= c1) continue; // c1 is the minimum CN of a canonical walk
                for (std::int16_t v2 : row_adj[c2]) {
                    if (v2 == v1) continue;
                    for (std::int16_t c3 : col_adj[v2]) {
                        if (c3 == c2 || c3 < c1) continue;
                        for (std::int16_t v3 : row_adj[c3]) {
                            if (v3 == v2) continue;
                            for (std::int16_t c4 : col_adj[v3]) {
                                if (c4 == c3 || c4 == c1 || c4 < c1) continue;
                                for (std::int16_t v4 : row_adj[c4]) {
                                    if (v4 == v3 || v4 == v1) continue;
                                    if (!sc.at(c1, v4)) continue;
                                    if (++visited > walk_guard)
                                        throw GuardExceeded("walk census guard exceeded");
                                    Walk w{static_cast<std::int16_t>(c1), v1, c2, v2, c3, v3, c4, v4};
                                    if (!is_canonical(w)) continue;

                                    std::array<std::int16_t, 4> cn{w[0], w[2], w[4], w[6]};
                                    std::array<std::int16_t, 4> vn{w[1], w[3], w[5], w[7]};
                                    std::sort(cn.begin(), cn.end());
                                    std::sort(vn.begin(), vn.end());
                                    int ncn = 1, nvn = 1;
                                    for (int i = 1; i < 4; ++i) {
                                        ncn += cn[i] != cn[i - 1];
                                        nvn += vn[i] != vn[i - 1];
                                    }
                                    int ell = pattern_from_dims(ncn, nvn);

                                    std::vector<std::int32_t> key;
                                    for (int i = 0; i < 4; ++i) {
                                        key.push_back(w[2 * i] * cols + w[2 * i + 1]);
                                        key.push_back(w[(2 * i + 2) % 8] * cols + w[2 * i + 1]);
                                    }
                                    std::sort(key.begin(), key.end());
                                    key.erase(std::unique(key.begin(), key.end()), key.end());
                                    auto& slot = by_instance[key];
                                    slot.first = ell;
                                    slot.second += 1;
                                    ++out.walks[ell];
                                }
                            }
                        }
                    }
                }
            }

    for (auto& [key, pc] : by_instance) {
        const int ell = pc.first;
        ++out.instances[ell];
        if (pc.second != zeta(ell)) out.multiplicities_ok = false;
        int lo = sc.L + 1, hi = 0;
        for (std::int32_t e : key) {
            int rho = sc.replica_of_col(e % cols);
            lo = std::min(lo, rho);
            hi = std::max(hi, rho);
        }
        int span = hi - lo + 1;
        ++out.by_leftmost[ell][lo];
        if (span > out.max_span) {
            out.spans_ok = false;
        } else {
            ++out.by_leftmost_span[ell][lo * (out.max_span + 1) + span];
            if (lo == 1) ++out.span_start1[ell][span];
        }
    }
    for (int ell = 1; ell <= 9; ++ell)
        out.weighted += Half{beta(ell).twice * out.instances[ell]};
    return out;
}

} // namespace scforge
