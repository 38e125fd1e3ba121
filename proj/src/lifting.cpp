#include "scforge/lifting.hpp"

#include <algorithm>

#include "scforge/kernels/activity.hpp"
#include "scforge/patterns.hpp"
#include "scforge/threads.hpp"

namespace scforge {

CirculantPowers scb_powers(const CodeParams& p) {
    CirculantPowers f;
    f.gamma = p.gamma;
    f.kappa = p.kappa;
    f.f.resize(static_cast<size_t>(p.gamma) * p.kappa);
    for (int i = 0; i < p.gamma; ++i)
        for (int j = 0; j < p.kappa; ++j)
            f.at(i, j) = static_cast<std::int32_t>((1LL * i * i % p.z) * (2 * j) % p.z);
    return f;
}

namespace {

void run_batch(const kernels::ConditionBatch& b, const std::int32_t* table, int z, int bias,
               int first, int last, std::uint8_t* out) {
    kernels::EvalFn fn = (z <= (1 << 19)) ? kernels::active_eval() : kernels::scalar_eval();
    const int n = last - first;
    const int workers = worker_count();
    if (n < (1 << 16) || workers <= 1) {
        fn(b, table, z, bias, first, last, out);
        return;
    }
    const int chunk = (n + workers - 1) / workers;
    parallel_for(workers, [&](int w) {
        const int lo = first + w * chunk;
        const int hi = std::min(last, lo + chunk);
        if (lo < hi) fn(b, table, z, bias, lo, hi, out);
    });
}

} // namespace

ActivityResult evaluate_activity(const CandidateSet& set, const CirculantPowers& powers,
                                 long long L) {
    const int n = static_cast<int>(set.cands.size());
    const int z = set.z;
    ActivityResult r;
    r.eq8ok.assign(n, 0);
    r.conn_ok.assign(set.conns.size(), 0);
    r.active.assign(n, 0);

    const std::vector<std::int32_t> table = powers.table();

    run_batch(set.eq8, table.data(), z, 0, 0, set.p1_begin, r.eq8ok.data());
    if (z % 2 == 0)
        run_batch(set.eq8, table.data(), z, -z / 2, set.p1_begin, n, r.eq8ok.data());
    if (!set.conns.empty())
        run_batch(set.eq6, table.data(), z, 0, 0, set.eq6.count, r.conn_ok.data());

    std::vector<std::uint8_t> connected(n, 0); // bit0: (v1,v3), bit1: (v2,v4)
    for (int j = 0; j < static_cast<int>(set.conns.size()); ++j)
        if (r.conn_ok[j]) connected[set.conns[j].cand] |= set.conns[j].diag ? 2 : 1;

    for (int id = 0; id < n; ++id) {
        if (!r.eq8ok[id]) continue;
        const Candidate& c = set.cands[id];
        if (connected[id] == 0) {
            r.active[id] = 1;
            if (c.leftmost == 1) {
                long long w = L - c.span + 1;
                if (w > 0) r.f_sc += w * (c.pattern == 1 ? z / 2 : z);
            }
        } else if (connected[id] == 3) {
            ++r.forty;
        }
    }

    if (set.eq4.count) {
        std::vector<std::uint8_t> four(set.eq4.count, 0);
        run_batch(set.eq4, table.data(), z, 0, 0, set.eq4.count, four.data());
        for (std::uint8_t v : four) r.girth_violations += v;
    }
    return r;
}

bool is_active(const CandidateSet& set, int id, const CirculantPowers& powers) {
    const std::vector<std::int32_t> table = powers.table();
    const Candidate& c = set.cands[id];
    const int bias = (c.pattern == 1) ? -set.z / 2 : 0;
    if (c.pattern == 1 && set.z % 2) return false;
    if (!kernels::condition_holds(set.eq8, id, table.data(), set.z, bias)) return false;
    for (int j = c.conn_begin; j < c.conn_end; ++j)
        if (kernels::condition_holds(set.eq6, j, table.data(), set.z, 0)) return false;
    return true;
}

std::int64_t count_f_sc(const CandidateSet& set, const CirculantPowers& powers, long long L) {
    if (L < set.win.xi) throw ConfigError("count_f_sc requires L >= 2m+1");
    return evaluate_activity(set, powers, L).f_sc;
}

std::int64_t count_f_sc(const PartitionMatrix& part, const CirculantPowers& powers,
                        const CodeParams& p) {
    CandidateSet set = enumerate_candidates(part, p, /*with_incidence=*/false);
    return count_f_sc(set, powers, p.L);
}

bool girth_ok(const CandidateSet& set, const CirculantPowers& powers) {
    const std::vector<std::int32_t> table = powers.table();
    for (int j = 0; j < set.eq4.count; ++j)
        if (kernels::condition_holds(set.eq4, j, table.data(), set.z, 0)) return false;
    return true;
}

bool girth_ok(const PartitionMatrix& part, const CirculantPowers& powers, const CodeParams& p) {
    CandidateSet set = enumerate_candidates(part, p, /*with_incidence=*/false);
    return girth_ok(set, powers);
}

std::int64_t count_40_uas(const PartitionMatrix& part, const CirculantPowers& powers,
                          const CodeParams& p) {
    if (p.gamma != 3) throw ConfigError("count_40_uas applies to gamma = 3 only");
    CandidateSet set = enumerate_candidates(part, p, /*with_incidence=*/false);
    return evaluate_activity(set, powers, p.L).forty;
}

LiftedCode assemble_parity_matrix(const PartitionMatrix& part, const CirculantPowers& powers,
                                  const CodeParams& p) {
    LiftedCode code;
    code.p = p;
    code.partition = part;
    code.powers = powers;
    code.rows = static_cast<std::int64_t>(p.gamma) * p.z * (p.L + p.m);
    code.cols = static_cast<std::int64_t>(p.kappa) * p.z * p.L;
    if (code.cols > 2'000'000) throw GuardExceeded("lifted matrix too large to assemble");
    code.col_rows.resize(static_cast<size_t>(code.cols));
    for (long long rho = 1; rho <= p.L; ++rho)
        for (int j = 0; j < p.kappa; ++j)
            for (int phi = 0; phi < p.z; ++phi) {
                const std::int64_t col = ((rho - 1) * p.kappa + j) * p.z + phi;
                auto& rows = code.col_rows[static_cast<size_t>(col)];
                rows.reserve(p.gamma);
                for (int i = 0; i < p.gamma; ++i) {
                    // sigma^f has a 1 at (row, col) iff row = col + f (mod z)
                    const int rphase = (phi + powers.at(i, j)) % p.z;
                    const std::int64_t row =
                        ((rho - 1 + part.at(i, j)) * static_cast<std::int64_t>(p.gamma) + i) * p.z +
                        rphase;
                    rows.push_back(static_cast<std::int32_t>(row));
                }
                std::sort(rows.begin(), rows.end());
            }
    return code;
}

} // namespace scforge
