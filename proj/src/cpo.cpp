#include "scforge/cpo.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "scforge/kernels/activity.hpp"
#include "scforge/patterns.hpp"

namespace scforge {

void accumulate_psi(const CandidateSet& set, const std::vector<std::uint8_t>& active,
                    long long L, std::vector<std::int64_t>& psi_window,
                    std::vector<std::int64_t>& psi, std::int64_t& scale) {
    const Window& w = set.win;
    std::int64_t lcm = 1;
    for (int k = 1; k <= w.xi; ++k) lcm = std::lcm<std::int64_t>(lcm, w.xi - k + 1);
    scale = 2 * lcm;

    psi_window.assign(static_cast<size_t>(w.rows) * w.cols, 0);
    psi.assign(static_cast<size_t>(w.gamma) * w.kappa, 0);
    for (size_t id = 0; id < set.cands.size(); ++id) {
        if (!active[id]) continue;
        const Candidate& c = set.cands[id];
        const std::int64_t num = (L - c.span + 1) * (lcm / (w.xi - c.span + 1)) *
                                 (c.pattern == 1 ? 1 : 2);
        for (int e = set.entry_begin[id]; e < set.entry_begin[id + 1]; ++e)
            psi_window[set.entry_index[e]] += num;
    }
    for (int r = 0; r < w.rows; ++r)
        for (int cidx : w.row_adj[r])
            psi[(r % w.gamma) * w.kappa + (cidx % w.kappa)] +=
                psi_window[static_cast<size_t>(r) * w.cols + cidx];
}

namespace {

// Incrementally maintained activity state for the proposal loop.
struct Evaluator {
    const CandidateSet& set;
    const CodeParams& p;
    std::vector<std::int32_t> table; // gamma*kappa + sentinel
    std::vector<std::uint8_t> eq8ok, conn_ok, active, connected, four;
    std::int64_t f_sc = 0, forty = 0, girth_violations = 0;

    Evaluator(const CandidateSet& s, const CirculantPowers& powers, const CodeParams& params)
        : set(s), p(params) {
        table = powers.table();
        ActivityResult r = evaluate_activity(set, powers, p.L);
        eq8ok = std::move(r.eq8ok);
        conn_ok = std::move(r.conn_ok);
        active = std::move(r.active);
        f_sc = r.f_sc;
        forty = r.forty;
        girth_violations = r.girth_violations;
        connected.assign(set.cands.size(), 0);
        for (size_t j = 0; j < set.conns.size(); ++j)
            if (conn_ok[j]) connected[set.conns[j].cand] |= set.conns[j].diag ? 2 : 1;
        four.assign(set.eq4.count, 0);
        const std::vector<std::int32_t> t = table;
        for (int j = 0; j < set.eq4.count; ++j)
            four[j] = kernels::condition_holds(set.eq4, j, t.data(), set.z, 0);
    }

    std::int64_t weight(const Candidate& c) const {
        if (c.leftmost != 1) return 0;
        return (p.L - c.span + 1) * (c.pattern == 1 ? set.z / 2 : set.z);
    }

    // Recompute one candidate from the current table; returns new state.
    void recompute_candidate(int id, std::uint8_t& eq8, std::uint8_t& conn) const {
        const Candidate& c = set.cands[id];
        if (c.pattern == 1) {
            eq8 = (set.z % 2 == 0) &&
                  kernels::condition_holds(set.eq8, id, table.data(), set.z, -set.z / 2);
        } else {
            eq8 = kernels::condition_holds(set.eq8, id, table.data(), set.z, 0);
        }
        conn = 0;
        if (eq8)
            for (int j = c.conn_begin; j < c.conn_end; ++j)
                if (kernels::condition_holds(set.eq6, j, table.data(), set.z, 0))
                    conn |= set.conns[j].diag ? 2 : 1;
    }

    struct Scratch {
        std::vector<std::int32_t> cand_ids, four_ids; // fixed per subset
        std::vector<std::uint8_t> eq8, conn, four;
        std::int64_t f_sc = 0, forty = 0, girth = 0;
        std::vector<std::int32_t> old_vals;
        std::vector<std::uint8_t> seen_cand, seen_four;
    };

    // The affected condition sets depend only on the selected circulants;
    // compute them once per subset and reuse across proposals.
    void set_subset(const std::vector<std::int32_t>& residues, Scratch& s) const {
        if (s.seen_cand.size() != set.cands.size()) s.seen_cand.assign(set.cands.size(), 0);
        if (s.seen_four.size() != static_cast<size_t>(set.eq4.count))
            s.seen_four.assign(set.eq4.count, 0);
        for (std::int32_t id : s.cand_ids) s.seen_cand[id] = 0;
        for (std::int32_t id : s.four_ids) s.seen_four[id] = 0;
        s.cand_ids.clear();
        s.four_ids.clear();
        for (std::int32_t r : residues) {
            for (std::int32_t id : set.cands_by_residue[r])
                if (!s.seen_cand[id]) {
                    s.seen_cand[id] = 1;
                    s.cand_ids.push_back(id);
                }
            for (std::int32_t id : set.fours_by_residue[r])
                if (!s.seen_four[id]) {
                    s.seen_four[id] = 1;
                    s.four_ids.push_back(id);
                }
        }
        s.eq8.resize(s.cand_ids.size());
        s.conn.resize(s.cand_ids.size());
        s.four.resize(s.four_ids.size());
    }

    // Apply a proposal speculatively; fills scratch with the new states of
    // the affected candidates and the resulting totals.
    void propose(const std::vector<std::int32_t>& residues, const std::vector<std::int32_t>& vals,
                 Scratch& s) {
        s.old_vals.clear();
        for (size_t i = 0; i < residues.size(); ++i) {
            s.old_vals.push_back(table[residues[i]]);
            table[residues[i]] = vals[i];
        }
        s.f_sc = f_sc;
        s.forty = forty;
        s.girth = girth_violations;
        for (size_t i = 0; i < s.cand_ids.size(); ++i) {
            const int id = s.cand_ids[i];
            recompute_candidate(id, s.eq8[i], s.conn[i]);
            const bool was_active = active[id];
            const bool was_forty = eq8ok[id] && connected[id] == 3;
            const bool now_active = s.eq8[i] && s.conn[i] == 0;
            const bool now_forty = s.eq8[i] && s.conn[i] == 3;
            if (was_active != now_active)
                s.f_sc += (now_active ? 1 : -1) * weight(set.cands[id]);
            s.forty += int(now_forty) - int(was_forty);
        }
        for (size_t i = 0; i < s.four_ids.size(); ++i) {
            const int j = s.four_ids[i];
            s.four[i] = kernels::condition_holds(set.eq4, j, table.data(), set.z, 0);
            s.girth += int(s.four[i]) - int(four[j]);
        }
    }

    void rollback(const std::vector<std::int32_t>& residues, const Scratch& s) {
        for (size_t i = 0; i < residues.size(); ++i) table[residues[i]] = s.old_vals[i];
    }

    void commit(const Scratch& s) {
        for (size_t i = 0; i < s.cand_ids.size(); ++i) {
            const int id = s.cand_ids[i];
            eq8ok[id] = s.eq8[i];
            connected[id] = s.conn[i];
            active[id] = s.eq8[i] && s.conn[i] == 0;
            // keep per-connection flags in sync for completeness
            for (int j = set.cands[id].conn_begin; j < set.cands[id].conn_end; ++j)
                conn_ok[j] = kernels::condition_holds(set.eq6, j, table.data(), set.z, 0);
        }
        for (size_t i = 0; i < s.four_ids.size(); ++i) four[s.four_ids[i]] = s.four[i];
        f_sc = s.f_sc;
        forty = s.forty;
        girth_violations = s.girth;
    }
};

} // namespace

CpoState run_cpo(const PartitionMatrix& part, const CodeParams& p, const CpoConfig& cfg) {
    p.validate();
    if (p.L < p.xi()) throw ConfigError("run_cpo requires L >= 2m+1");

    CandidateSet set = enumerate_candidates(part, p, /*with_incidence=*/true);
    CirculantPowers powers = scb_powers(p);

    CpoState st;
    st.seed = cfg.seed;
    st.powers = powers;

    Evaluator ev(set, powers, p);
    if (ev.girth_violations != 0)
        throw ConfigError("initial powers violate the no-4-cycle requirement");
    st.f_sc_initial = st.f_sc = ev.f_sc;

    std::mt19937_64 rng(cfg.seed);
    const int nres = p.gamma * p.kappa;
    std::vector<int> order(nres);
    Evaluator::Scratch scratch;
    std::vector<std::int32_t> residues, vals;

    std::int64_t stagnation = 0;
    for (std::int64_t iter = 0; iter < cfg.budget; ++iter) {
        if (st.f_sc <= cfg.target) {
            st.reached_target = true;
            break;
        }
        if (stagnation >= 1000) break;

        // Steps 11-14: psi ranking of the 1's of the base matrix
        accumulate_psi(set, ev.active, p.L, st.psi_window, st.psi, st.psi_scale);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (st.psi[a] != st.psi[b]) return st.psi[a] > st.psi[b];
            return a < b;
        });

        int subset = cfg.subset_size;
        if (stagnation >= 100) subset = std::max(1, cfg.subset_size - 1);
        if (stagnation >= 200) subset = 1;
        subset = std::min(subset, nres);

        residues.assign(order.begin(), order.begin() + subset);
        ev.set_subset(residues, scratch);

        bool accepted = false;
        const std::int64_t tries = 8LL * p.z;
        for (std::int64_t t = 0; t < tries; ++t) {
            vals.clear();
            for (std::int32_t r : residues) {
                std::int32_t nv;
                if (stagnation >= 200) {
                    // near stagnation nudge the current power by +-1
                    nv = static_cast<std::int32_t>(
                        (ev.table[r] + (rng() & 1 ? 1 : p.z - 1)) % p.z);
                } else {
                    nv = static_cast<std::int32_t>(rng() % p.z);
                }
                vals.push_back(nv);
            }
            ev.propose(residues, vals, scratch);
            const bool ok = scratch.f_sc < st.f_sc && scratch.girth == 0 &&
                            (p.gamma != 3 || scratch.forty == 0);
            if (ok) {
                ev.commit(scratch);
                st.f_sc = ev.f_sc;
                accepted = true;
                break;
            }
            ev.rollback(residues, scratch);
        }

        CpoTraceEntry te;
        te.iteration = iter;
        te.circulants = residues;
        te.powers = vals;
        te.f_sc = st.f_sc;
        te.accepted = accepted;
        st.trace.push_back(std::move(te));
        st.iterations = iter + 1;
        stagnation = accepted ? 0 : stagnation + 1;
    }

    for (int i = 0; i < nres; ++i) st.powers.f[i] = ev.table[i];
    accumulate_psi(set, ev.active, p.L, st.psi_window, st.psi, st.psi_scale);
    if (st.f_sc <= cfg.target) st.reached_target = true;
    return st;
}

} // namespace scforge
