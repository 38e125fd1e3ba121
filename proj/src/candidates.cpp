#include "scforge/candidates.hpp"

#include <algorithm>
#include <set>

#include "scforge/patterns.hpp"

namespace scforge {

namespace {

using Walk = std::array<std::int16_t, 8>;

Walk rotate(const Walk& w) { return {w[2], w[3], w[4], w[5], w[6], w[7], w[0], w[1]}; }
Walk reflect(const Walk& w) { return {w[0], w[7], w[6], w[5], w[4], w[3], w[2], w[1]}; }

bool is_canonical(const Walk& w) {
    for (int spin = 0; spin < 2; ++spin) {
        Walk q = spin ? reflect(w) : w;
        for (int rot = 0; rot < 4; ++rot) {
            if ((rot || spin) && q < w) return false;
            q = rotate(q);
        }
    }
    return true;
}

} // namespace

CandidateSet enumerate_candidates(const PartitionMatrix& part, const CodeParams& p,
                                  bool with_incidence) {
    CandidateSet set;
    set.win = build_window(part, p);
    set.z = p.z;
    const Window& w = set.win;
    set.sentinel = w.gamma * w.kappa;

    std::vector<Candidate> main, p1;
    main.reserve(1 << 12);

    for (int c1 = 0; c1 < w.rows; ++c1)
        for (std::int16_t v1 : w.row_adj[c1])
            for (std::int16_t c2 : w.col_adj[v1]) {
                if (c2 <= c1) continue;
                for (std::int16_t v2 : w.row_adj[c2]) {
                    if (v2 == v1) continue;
                    for (std::int16_t c3 : w.col_adj[v2]) {
                        if (c3 == c2 || c3 < c1) continue;
                        for (std::int16_t v3 : w.row_adj[c3]) {
                            if (v3 == v2) continue;
                            for (std::int16_t c4 : w.col_adj[v3]) {
                                if (c4 == c3 || c4 == c1 || c4 < c1) continue;
                                for (std::int16_t v4 : w.row_adj[c4]) {
                                    if (v4 == v3 || v4 == v1) continue;
                                    if (!w.has(c1, v4)) continue;
                                    Walk walk{static_cast<std::int16_t>(c1), v1, c2, v2,
                                              c3,                            v3, c4, v4};
                                    if (!is_canonical(walk)) continue;

                                    Candidate cand;
                                    cand.nodes = walk;
                                    std::array<std::int16_t, 4> cn{walk[0], walk[2], walk[4], walk[6]};
                                    std::array<std::int16_t, 4> vn{walk[1], walk[3], walk[5], walk[7]};
                                    std::sort(cn.begin(), cn.end());
                                    std::sort(vn.begin(), vn.end());
                                    int ncn = 1, nvn = 1;
                                    for (int i = 1; i < 4; ++i) {
                                        ncn += cn[i] != cn[i - 1];
                                        nvn += vn[i] != vn[i - 1];
                                    }
                                    cand.pattern = static_cast<std::int8_t>(pattern_from_dims(ncn, nvn));
                                    int lo = w.xi + 1, hi = 0;
                                    for (int i = 0; i < 4; ++i) {
                                        int rho = w.replica_of_col(walk[2 * i + 1]);
                                        lo = std::min(lo, rho);
                                        hi = std::max(hi, rho);
                                    }
                                    cand.leftmost = static_cast<std::int8_t>(lo);
                                    cand.span = static_cast<std::int8_t>(hi - lo + 1);
                                    (cand.pattern == 1 ? p1 : main).push_back(cand);
                                }
                            }
                        }
                    }
                }
            }

    set.p1_begin = static_cast<std::int32_t>(main.size());
    set.cands = std::move(main);
    set.cands.insert(set.cands.end(), p1.begin(), p1.end());

    const int n = static_cast<int>(set.cands.size());
    set.eq8.reserve(n);
    set.eq8.table_size = set.table_size();
    set.eq6.table_size = set.table_size();
    set.eq4.table_size = set.table_size();
    set.entry_begin.reserve(n + 1);
    set.entry_begin.push_back(0);

    auto res = [&](int r, int c) { return w.residue(r, c); };

    for (int id = 0; id < n; ++id) {
        Candidate& cand = set.cands[id];
        const auto& nd = cand.nodes;
        const int c1 = nd[0], v1 = nd[1], c2 = nd[2], v2 = nd[3];
        const int c3 = nd[4], v3 = nd[5], c4 = nd[6], v4 = nd[7];

        if (cand.pattern == 1) {
            // lift gives length-8 cycles iff the 4-cycle offset is z/2
            std::int32_t plus[4] = {res(c1, v1), res(c2, v2)};
            std::int32_t minus[4] = {res(c2, v1), res(c1, v2)};
            set.eq8.push(plus, 2, minus, 2, set.sentinel);
        } else {
            std::int32_t plus[4] = {res(c1, v1), res(c2, v2), res(c3, v3), res(c4, v4)};
            std::int32_t minus[4] = {res(c2, v1), res(c3, v2), res(c4, v3), res(c1, v4)};
            set.eq8.push(plus, 4, minus, 4, set.sentinel);
        }

        // internal connection CNs: adjacent to both diagonal VNs, outside the
        // pattern's own CNs
        cand.conn_begin = static_cast<std::int32_t>(set.conns.size());
        if (eta(cand.pattern) > 0) {
            std::uint32_t own = (1u << c1) | (1u << c2) | (1u << c3) | (1u << c4);
            if (v1 != v3) {
                std::uint32_t common = w.col_mask[v1] & w.col_mask[v3] & ~own;
                for (std::uint32_t ms = common; ms; ms &= ms - 1) {
                    int c5 = __builtin_ctz(ms);
                    std::int32_t plus[4] = {res(c2, v2), res(c3, v3), res(c5, v1)};
                    std::int32_t minus[4] = {res(c2, v1), res(c3, v2), res(c5, v3)};
                    set.eq6.push(plus, 3, minus, 3, set.sentinel);
                    set.conns.push_back({id, 0});
                }
            }
            if (v2 != v4) {
                std::uint32_t common = w.col_mask[v2] & w.col_mask[v4] & ~own;
                for (std::uint32_t ms = common; ms; ms &= ms - 1) {
                    int c6 = __builtin_ctz(ms);
                    std::int32_t plus[4] = {res(c3, v3), res(c4, v4), res(c6, v2)};
                    std::int32_t minus[4] = {res(c3, v2), res(c4, v3), res(c6, v4)};
                    set.eq6.push(plus, 3, minus, 3, set.sentinel);
                    set.conns.push_back({id, 1});
                }
            }
        }
        cand.conn_end = static_cast<std::int32_t>(set.conns.size());

        // distinct window entries (for psi accumulation)
        std::array<std::int32_t, 8> entries{};
        int ne = 0;
        for (int i = 0; i < 4; ++i) {
            int cn_a = nd[2 * i], vn = nd[2 * i + 1], cn_b = nd[(2 * i + 2) % 8];
            entries[ne++] = cn_a * w.cols + vn;
            entries[ne++] = cn_b * w.cols + vn;
        }
        std::sort(entries.begin(), entries.begin() + ne);
        ne = static_cast<int>(std::unique(entries.begin(), entries.begin() + ne) - entries.begin());
        for (int i = 0; i < ne; ++i) set.entry_index.push_back(entries[i]);
        set.entry_begin.push_back(static_cast<std::int32_t>(set.entry_index.size()));
    }

    // protograph 4-cycles, deduplicated by residue class
    std::set<std::array<std::int16_t, 4>> seen;
    for (int ca = 0; ca < w.cols; ++ca)
        for (int cb = ca + 1; cb < w.cols; ++cb) {
            std::uint32_t common = w.col_mask[ca] & w.col_mask[cb];
            if (__builtin_popcount(common) < 2) continue;
            std::vector<int> rowsc;
            for (std::uint32_t ms = common; ms; ms &= ms - 1) rowsc.push_back(__builtin_ctz(ms));
            for (size_t a = 0; a < rowsc.size(); ++a)
                for (size_t b = a + 1; b < rowsc.size(); ++b) {
                    int ra = rowsc[a] % w.gamma, rb = rowsc[b] % w.gamma;
                    int ja = ca % w.kappa, jb = cb % w.kappa;
                    std::array<std::int16_t, 4> key{
                        static_cast<std::int16_t>(std::min(ra, rb)),
                        static_cast<std::int16_t>(std::max(ra, rb)),
                        static_cast<std::int16_t>(std::min(ja, jb)),
                        static_cast<std::int16_t>(std::max(ja, jb))};
                    if (!seen.insert(key).second) continue;
                    std::int32_t plus[4] = {ra * w.kappa + ja, rb * w.kappa + jb};
                    std::int32_t minus[4] = {ra * w.kappa + jb, rb * w.kappa + ja};
                    set.eq4.push(plus, 2, minus, 2, set.sentinel);
                }
        }

    if (with_incidence) {
        const int nres = w.gamma * w.kappa;
        set.cands_by_residue.assign(nres, {});
        set.fours_by_residue.assign(nres, {});
        std::vector<std::int32_t> scratch;
        for (int id = 0; id < n; ++id) {
            scratch.clear();
            for (int sl = 0; sl < 4; ++sl) {
                scratch.push_back(set.eq8.plus[sl][id]);
                scratch.push_back(set.eq8.minus[sl][id]);
            }
            for (int j = set.cands[id].conn_begin; j < set.cands[id].conn_end; ++j)
                for (int sl = 0; sl < 4; ++sl) {
                    scratch.push_back(set.eq6.plus[sl][j]);
                    scratch.push_back(set.eq6.minus[sl][j]);
                }
            std::sort(scratch.begin(), scratch.end());
            scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
            for (std::int32_t r : scratch)
                if (r != set.sentinel) set.cands_by_residue[r].push_back(id);
        }
        for (int j = 0; j < set.eq4.count; ++j) {
            scratch.clear();
            for (int sl = 0; sl < 4; ++sl) {
                scratch.push_back(set.eq4.plus[sl][j]);
                scratch.push_back(set.eq4.minus[sl][j]);
            }
            std::sort(scratch.begin(), scratch.end());
            scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
            for (std::int32_t r : scratch)
                if (r != set.sentinel) set.fours_by_residue[r].push_back(j);
        }
    }
    return set;
}

} // namespace scforge
