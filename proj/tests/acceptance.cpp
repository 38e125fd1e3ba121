// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Findings that are reported rather than
// gated (co-optimal partitions with different lifted counts, stretch
// targets) are printed as NOTE lines.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "scforge/census.hpp"
#include "scforge/cpo.hpp"
#include "scforge/lifted_oracle.hpp"
#include "scforge/lifting.hpp"
#include "scforge/oo.hpp"
#include "scforge/protograph.hpp"
#include "scforge/report.hpp"
#include "scforge/walk_census.hpp"

using namespace scforge;
using scforge::testing::example1_partition;
using scforge::testing::make_params;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, bool pass, const std::string& what, double secs) {
    std::printf("[%s] criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                secs);
    std::fflush(stdout);
    if (!pass) ++failures;
}

void note(const std::string& what) {
    std::printf("[NOTE] %s\n", what.c_str());
    std::fflush(stdout);
}

PartitionMatrix uncoupled(int gamma, int kappa, int m) {
    PartitionMatrix part;
    part.gamma = gamma;
    part.kappa = kappa;
    part.m = m;
    part.assign.assign(static_cast<size_t>(gamma) * kappa, 0);
    return part;
}

void criterion_1_2_uncoupled_tables() {
    const int ks[4] = {7, 11, 13, 17}, zs[4] = {13, 23, 29, 37};
    const std::int64_t t1[4] = {32370, 254610, 540850, 1700890};
    const std::int64_t t2[4] = {131820, 1034310, 2193850, 7081430};
    {
        Timer t;
        bool ok = true;
        std::ostringstream msg;
        msg << "uncoupled (4,4) UAS counts, gamma=3, L=10:";
        for (int i = 0; i < 4; ++i) {
            auto p = make_params(3, ks[i], 1, 10, zs[i]);
            auto f = count_f_sc(uncoupled(3, ks[i], 1), scb_powers(p), p);
            ok = ok && f == t1[i];
            msg << " " << f << (f == t1[i] ? "=ok" : "=MISMATCH");
        }
        report(1, ok, msg.str(), t.seconds());
    }
    {
        Timer t;
        bool ok = true;
        std::ostringstream msg;
        msg << "uncoupled (4,8) UTS counts, gamma=4, L=10:";
        for (int i = 0; i < 4; ++i) {
            auto p = make_params(4, ks[i], 1, 10, zs[i]);
            auto f = count_f_sc(uncoupled(4, ks[i], 1), scb_powers(p), p);
            ok = ok && f == t2[i];
            msg << " " << f << (f == t2[i] ? "=ok" : "=MISMATCH");
        }
        report(2, ok, msg.str(), t.seconds());
    }
}

void criterion_3_oo() {
    Timer t;
    auto p = make_params(3, 7, 1, 10, 13);
    auto sol = solve_exhaustive(p);
    bool ok = sol.f_star.rounded() == 5170;
    // the published optimal vector must be co-optimal
    auto tref = overlap_params(example1_partition());
    ok = ok && weighted_sum(tref, p) == sol.f_star;
    auto masks = independent_param_masks(3, 1);
    std::vector<std::int64_t> vec;
    for (auto msk : masks) vec.push_back(tref.of_mask(msk));
    ok = ok && vec == std::vector<std::int64_t>{3, 3, 4, 0, 1, 2, 0};
    std::ostringstream msg;
    msg << "exhaustive OO on gamma=3 kappa=7 m=1 L=10: F*_sum rounded = "
        << sol.f_star.rounded() << ", published vector co-optimal";
    report(3, ok, msg.str(), t.seconds());
}

void criterion_4_oo_scb_counts() {
    Timer t;
    auto p = make_params(3, 7, 1, 10, 13);
    auto f = count_f_sc(example1_partition(), scb_powers(p), p);
    report(4, f == 6500,
           "reference partition under SCB powers: F_SC = " + std::to_string(f) + " (expect 6500)",
           t.seconds());

    // remaining m=1 entries: checked against this artifact's own optima;
    // a mismatch is a finding, not a failure (co-optimal t* differ in
    // lifted count)
    const int ks[3] = {11, 13, 17}, zs[3] = {23, 29, 37};
    const std::int64_t tab[3] = {53130, 123395, 440818};
    for (int i = 0; i < 3; ++i) {
        auto pi = make_params(3, ks[i], 1, 10, zs[i]);
        auto sol = solve_exhaustive(pi);
        auto fi = count_f_sc(sol.partition, scb_powers(pi), pi);
        std::ostringstream msg;
        msg << "kappa=" << ks[i] << " OO+SCB: this artifact " << fi << " vs table " << tab[i]
            << (fi == tab[i] ? " (match)" : " (co-optimal partition differs; reported, not failed)");
        note(msg.str());
    }
}

void criterion_5_cv() {
    Timer t;
    bool ok = true;
    std::ostringstream msg;
    {
        auto p = make_params(3, 19, 1, 5, 46);
        auto f = count_f_sc(cv_partition({4, 9, 15}, p), scb_powers(p), p);
        auto fu = count_f_sc(uncoupled(3, 19, 1), scb_powers(p), p);
        ok = ok && f == 845434 && fu == 2425120;
        msg << "cv [4 9 15]: " << f << " (expect 845434), uncoupled " << fu
            << " (expect 2425120);";
    }
    {
        auto p = make_params(4, 17, 1, 6, 37);
        auto f = count_f_sc(cv_partition({3, 7, 11, 14}, p), scb_powers(p), p);
        auto fu = count_f_sc(uncoupled(4, 17, 1), scb_powers(p), p);
        ok = ok && f == 1589816 && fu == 4248858;
        msg << " cv [3 7 11 14]: " << f << " (expect 1589816), uncoupled " << fu
            << " (expect 4248858)";
    }
    report(5, ok, msg.str(), t.seconds());

    // the cv-baseline scan over all 1140 ascending vectors lands on the
    // published optimal cutting vector (demonstration, not a gate)
    Timer ts;
    RunConfig cfg;
    cfg.mode = "cv-baseline";
    cfg.params = make_params(3, 19, 1, 5, 46);
    cfg.out_dir = "";
    auto rep = run(cfg);
    std::ostringstream sm;
    sm << "cv-baseline scan best vector [";
    for (size_t i = 0; i < rep.cv.size(); ++i) sm << rep.cv[i] << (i + 1 < rep.cv.size() ? " " : "");
    sm << "] with F_SC " << rep.f_sc_before << " ("
       << (rep.cv == std::vector<int>{4, 9, 15} && rep.f_sc_before == 845434
               ? "matches the published optimum"
               : "differs from the published optimum")
       << ", " << static_cast<int>(ts.seconds()) << "s)";
    note(sm.str());
}

void criterion_6_cpo() {
    Timer t;
    auto p = make_params(3, 7, 1, 10, 13);
    CpoConfig cfg; // default budget and subset size
    cfg.seed = 4;
    auto st = run_cpo(example1_partition(), p, cfg);
    bool ok = st.f_sc_initial == 6500 && st.f_sc <= 2875;
    std::ostringstream msg;
    msg << "CPO from the reference partition, seed " << cfg.seed << ": 6500 -> " << st.f_sc
        << " (require <= 2875)";
    report(6, ok, msg.str(), t.seconds());
    if (st.f_sc <= 2613)
        note("stretch target met: final count " + std::to_string(st.f_sc) +
             " matches or beats the published 2613");
    else
        note("stretch target 2613 not reached at this seed (got " + std::to_string(st.f_sc) + ")");
    // seed sensitivity of the heuristic, for the record
    std::ostringstream sweep;
    sweep << "CPO seed sweep (seeds 1..8):";
    for (int s = 1; s <= 8; ++s) {
        CpoConfig c2 = cfg;
        c2.seed = s;
        sweep << " " << run_cpo(example1_partition(), p, c2).f_sc;
    }
    note(sweep.str());
}

void criterion_7_census_oracle() {
    Timer t;
    std::mt19937_64 rng(0xC0FFEE);
    int done = 0;
    bool ok = true;
    while (done < 100) {
        const int gamma = 3 + int(rng() % 2);
        const int kappa = 2 + int(rng() % 5);
        const int m = int(rng() % 3);
        const long long L = 2 * m + 1 + int(rng() % 2);
        auto p = make_params(gamma, kappa, m, L, kappa + 1);
        PartitionMatrix part = uncoupled(gamma, kappa, m);
        for (auto& a : part.assign) a = static_cast<std::uint8_t>(rng() % (m + 1));
        auto tt = overlap_params(part);
        auto oracle = brute_force_candidate_census(build_sc_protograph(part, L));
        ok = ok && oracle.multiplicities_ok && oracle.spans_ok;
        Half f{};
        for (int ell = 1; ell <= 9; ++ell) {
            auto total = pattern_total(ell, tt, p);
            if (total != oracle.instances[ell]) ok = false;
            f += Half{beta(ell).twice * total};
        }
        if (!(f == oracle.weighted)) ok = false;
        ++done;
    }
    report(7, ok, "closed-form census equals walk enumeration on 100 random instances",
           t.seconds());
}

void criterion_8_lifted_oracle() {
    Timer t;
    std::mt19937_64 rng(0xBEEF);
    int done = 0;
    bool ok = true;
    while (done < 50) {
        const int gamma = 3 + int(rng() % 2);
        const int kappa = 3 + int(rng() % 3); // 3..5
        const int z = kappa < 5 ? (rng() % 2 ? 5 : 7) : 7;
        const int m = 1;
        const long long L = 3 + int(rng() % 3);
        auto p = make_params(gamma, kappa, m, L, z);
        PartitionMatrix part = uncoupled(gamma, kappa, m);
        for (auto& a : part.assign) a = static_cast<std::uint8_t>(rng() % (m + 1));
        CirculantPowers f;
        f.gamma = gamma;
        f.kappa = kappa;
        f.f.resize(static_cast<size_t>(gamma) * kappa);
        for (auto& v : f.f) v = static_cast<std::int32_t>(rng() % z);
        if (!girth_ok(part, f, p)) continue;
        auto window_count = count_f_sc(part, f, p);
        auto oracle = brute_force_lifted_count(assemble_parity_matrix(part, f, p));
        if (window_count != oracle) ok = false;
        ++done;
    }
    report(8, ok, "window-based lifted count equals brute force on 50 girth-6 instances",
           t.seconds());
}

void criterion_9_invariants() {
    Timer t;
    bool ok = true;

    // constants
    const int zexp[10] = {0, 1, 3, 3, 6, 6, 1, 2, 2, 1};
    const int eexp[10] = {0, 0, 1, 0, 2, 0, 1, 2, 1, 2};
    for (int ell = 1; ell <= 9; ++ell) {
        ok = ok && zeta(ell) == zexp[ell] && eta(ell) == eexp[ell];
        ok = ok && beta(ell).twice == (ell == 1 ? 1 : 2 * zeta(ell));
        ok = ok && chi(ell, 1) == ((ell == 8 || ell == 9) ? 3 : 2);
    }

    // block-diagonal law
    {
        auto p = make_params(3, 7, 1, 10, 13);
        auto f10 = count_f_sc(uncoupled(3, 7, 1), scb_powers(p), p);
        auto p1 = make_params(3, 7, 0, 1, 13);
        auto f1 = count_f_sc(uncoupled(3, 7, 0), scb_powers(p1), p1);
        ok = ok && f10 == 10 * f1;
    }

    // CPO trace: strictly decreasing, girth-preserving, (4,0)-free
    {
        auto p = make_params(3, 7, 1, 10, 13);
        CpoConfig cfg;
        cfg.budget = 400;
        cfg.seed = 5;
        auto st = run_cpo(example1_partition(), p, cfg);
        std::int64_t last = st.f_sc_initial;
        CirculantPowers f = scb_powers(p);
        for (const auto& te : st.trace) {
            if (!te.accepted) continue;
            ok = ok && te.f_sc < last;
            last = te.f_sc;
            for (size_t i = 0; i < te.circulants.size(); ++i)
                f.f[te.circulants[i]] = te.powers[i];
            ok = ok && girth_ok(example1_partition(), f, p);
            ok = ok && count_40_uas(example1_partition(), f, p) == 0;
            ok = ok && count_f_sc(example1_partition(), f, p) == te.f_sc;
        }
    }

    // identical seeds produce byte-identical reports
    {
        RunConfig cfg;
        cfg.mode = "full";
        cfg.params = make_params(3, 5, 1, 4, 7);
        cfg.seed = 123;
        cfg.cpo_budget = 100;
        cfg.out_dir = ""; // no artifacts, compare in-memory serializations
        auto a = run(cfg);
        auto b = run(cfg);
        ok = ok && a.to_json_text() == b.to_json_text();
        ok = ok && a.to_table_text() == b.to_table_text();
    }

    report(9, ok, "constants, block-diagonal law, CPO trace invariants, reproducibility",
           t.seconds());
}

} // namespace

int main() {
    std::printf("%s acceptance suite\n", kToolVersion);
    criterion_1_2_uncoupled_tables();
    criterion_3_oo();
    criterion_4_oo_scb_counts();
    criterion_5_cv();
    criterion_6_cpo();
    criterion_7_census_oracle();
    criterion_8_lifted_oracle();
    criterion_9_invariants();
    note("criterion 10: frame-error-rate simulations and SNR gains are excluded; "
         "the table counts above are the quantitative surface");
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
