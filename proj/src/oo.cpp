#include "scforge/oo.hpp"

#include <algorithm>
#include <random>

#include "scforge/threads.hpp"

namespace scforge {

namespace {

// Circulants each type contributes to each component matrix.
std::vector<std::array<int, 8>> component_load_table(int gamma, int m) {
    const long long T = ColumnTypeDistribution::num_types(gamma, m);
    std::vector<std::array<int, 8>> load(T);
    for (int type = 0; type < T; ++type) {
        load[type].fill(0);
        for (int y : type_vector(type, gamma, m)) ++load[type][y];
    }
    return load;
}

bool balanced_loads(const std::array<long long, 8>& comp, int m, long long total) {
    const long long lo = total / (m + 1);
    const long long hi = (total + m) / (m + 1);
    for (int y = 0; y <= m; ++y)
        if (comp[y] < lo || comp[y] > hi) return false;
    return true;
}

} // namespace

bool balanced(const ColumnTypeDistribution& dist, const CodeParams& p) {
    auto load = component_load_table(p.gamma, p.m);
    std::array<long long, 8> comp{};
    for (int type = 0; type < dist.type_count(); ++type)
        for (int y = 0; y <= p.m; ++y)
            comp[y] += static_cast<long long>(dist.counts[type]) * load[type][y];
    return balanced_loads(comp, p.m, static_cast<long long>(p.gamma) * p.kappa);
}

bool check_constraints(const OverlapParams& t, const CodeParams& p) {
    ColumnTypeDistribution dist;
    try {
        dist = distribution_from_overlaps(t, p);
    } catch (const ConfigError&) {
        return false;
    }
    return balanced(dist, p);
}

long long exhaustive_space(const CodeParams& p) {
    const long long T = ColumnTypeDistribution::num_types(p.gamma, p.m);
    long long n = p.kappa + T - 1, k = T - 1;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r < 0 || r > (1LL << 60)) return 1LL << 60;
    }
    return r;
}

OOSolution solve_exhaustive(const CodeParams& p, std::int64_t space_guard) {
    p.validate();
    if (exhaustive_space(p) > space_guard)
        throw GuardExceeded("exhaustive OO space exceeds guard; use local search");

    const int T = static_cast<int>(ColumnTypeDistribution::num_types(p.gamma, p.m));
    const auto load = component_load_table(p.gamma, p.m);
    const long long total = static_cast<long long>(p.gamma) * p.kappa;

    struct Best {
        Half f{std::int64_t{1} << 62};
        std::vector<int> counts;
        std::int64_t visited = 0;
    };

    // Shard on the first type count; enumeration inside a shard is in lex
    // order, so the first minimum found is the lex-least one.
    std::vector<Best> best(p.kappa + 1);
    parallel_for(p.kappa + 1, [&](int first) {
        Best& b = best[first];
        ColumnTypeDistribution dist;
        dist.gamma = p.gamma;
        dist.m = p.m;
        dist.counts.assign(T, 0);
        dist.counts[0] = first;
        OverlapParams t;
        t.reset(p.gamma, p.m);

        std::array<long long, 8> comp{};
        for (int y = 0; y <= p.m; ++y) comp[y] = static_cast<long long>(first) * load[0][y];

        auto rec = [&](auto&& self, int type, int left) -> void {
            if (type == T - 1) {
                dist.counts[type] = left;
                for (int y = 0; y <= p.m; ++y) comp[y] += static_cast<long long>(left) * load[type][y];
                if (balanced_loads(comp, p.m, total)) {
                    ++b.visited;
                    t.fill_from_distribution(dist);
                    Half f = weighted_sum(t, p);
                    if (f < b.f) {
                        b.f = f;
                        b.counts = dist.counts;
                    }
                }
                for (int y = 0; y <= p.m; ++y) comp[y] -= static_cast<long long>(left) * load[type][y];
                dist.counts[type] = 0;
                return;
            }
            for (int n = 0; n <= left; ++n) {
                dist.counts[type] = n;
                for (int y = 0; y <= p.m; ++y) comp[y] += static_cast<long long>(n) * load[type][y];
                self(self, type + 1, left - n);
                for (int y = 0; y <= p.m; ++y) comp[y] -= static_cast<long long>(n) * load[type][y];
            }
            dist.counts[type] = 0;
        };
        if (T == 1) {
            if (first == p.kappa) {
                ++b.visited;
                t.fill_from_distribution(dist);
                b.f = weighted_sum(t, p);
                b.counts = dist.counts;
            }
        } else {
            rec(rec, 1, p.kappa - first);
        }
    });

    OOSolution sol;
    sol.strategy = "exhaustive";
    sol.optimal = true;
    Half bf{std::int64_t{1} << 62};
    std::vector<int> bc;
    for (const auto& b : best) {
        sol.visited += b.visited;
        if (!b.counts.empty() && (b.f < bf || (b.f == bf && b.counts < bc))) {
            bf = b.f;
            bc = b.counts;
        }
    }
    if (bc.empty()) throw ConfigError("no balanced distribution exists for these parameters");
    sol.distribution = ColumnTypeDistribution{p.gamma, p.m, bc};
    sol.partition = partition_from_distribution(sol.distribution, p);
    sol.t_star = overlap_params(sol.partition);
    sol.f_star = bf;
    return sol;
}

namespace {

ColumnTypeDistribution random_balanced_start(const CodeParams& p, std::mt19937_64& rng) {
    const int T = static_cast<int>(ColumnTypeDistribution::num_types(p.gamma, p.m));
    const auto load = component_load_table(p.gamma, p.m);
    const long long total = static_cast<long long>(p.gamma) * p.kappa;
    ColumnTypeDistribution dist;
    dist.gamma = p.gamma;
    dist.m = p.m;
    for (int attempt = 0; attempt < 20000; ++attempt) {
        dist.counts.assign(T, 0);
        std::array<long long, 8> comp{};
        for (int j = 0; j < p.kappa; ++j) {
            // prefer the component currently furthest below its quota
            int bestType = -1;
            long long bestScore = (1LL << 62);
            for (int probe = 0; probe < 8; ++probe) {
                int ty = static_cast<int>(rng() % T);
                long long score = 0;
                for (int y = 0; y <= p.m; ++y) score += (comp[y] + load[ty][y]) * (comp[y] + load[ty][y]);
                if (score < bestScore) {
                    bestScore = score;
                    bestType = ty;
                }
            }
            ++dist.counts[bestType];
            for (int y = 0; y <= p.m; ++y) comp[y] += load[bestType][y];
        }
        if (balanced_loads(comp, p.m, total)) return dist;
    }
    throw ConfigError("could not seed a balanced distribution");
}

} // namespace

OOSolution solve_local(const CodeParams& p, std::uint64_t seed, int restarts, std::int64_t budget) {
    p.validate();
    const int T = static_cast<int>(ColumnTypeDistribution::num_types(p.gamma, p.m));

    std::mt19937_64 rng(seed);
    OOSolution sol;
    sol.strategy = "local-search";
    sol.restarts = restarts;

    Half bestF{std::int64_t{1} << 62};
    ColumnTypeDistribution bestDist;

    OverlapParams t;
    t.reset(p.gamma, p.m);
    for (int r = 0; r < std::max(1, restarts); ++r) {
        ColumnTypeDistribution cur = random_balanced_start(p, rng);
        t.fill_from_distribution(cur);
        Half curF = weighted_sum(t, p);
        ++sol.visited;
        for (std::int64_t step = 0; step < budget; ++step) {
            Half moveF = curF;
            int moveFrom = -1, moveTo = -1;
            for (int from = 0; from < T; ++from) {
                if (cur.counts[from] == 0) continue;
                for (int to = 0; to < T; ++to) {
                    if (to == from) continue;
                    --cur.counts[from];
                    ++cur.counts[to];
                    if (balanced(cur, p)) {
                        t.fill_from_distribution(cur);
                        Half f = weighted_sum(t, p);
                        ++sol.visited;
                        if (f < moveF) { // ties keep the first (lex-least) move
                            moveF = f;
                            moveFrom = from;
                            moveTo = to;
                        }
                    }
                    ++cur.counts[from];
                    --cur.counts[to];
                }
            }
            if (moveFrom < 0 || !(moveF < curF)) break; // local minimum
            --cur.counts[moveFrom];
            ++cur.counts[moveTo];
            curF = moveF;
        }
        if (curF < bestF || (curF == bestF && (bestDist.counts.empty() || cur.counts < bestDist.counts))) {
            bestF = curF;
            bestDist = cur;
        }
        if (budget == 0) break; // zero budget: report the seeded start
    }

    sol.distribution = bestDist;
    sol.partition = partition_from_distribution(sol.distribution, p);
    sol.t_star = overlap_params(sol.partition);
    sol.f_star = bestF;
    return sol;
}

} // namespace scforge
