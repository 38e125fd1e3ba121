#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scforge/overlap.hpp"
#include "scforge/params.hpp"
#include "scforge/partition.hpp"
#include "scforge/protograph.hpp"

using namespace scforge;

namespace {

CodeParams params(int gamma, int kappa, int m, long long L = 1, int z = 0) {
    CodeParams p;
    p.gamma = gamma;
    p.kappa = kappa;
    p.m = m;
    p.L = L;
    p.z = z ? z : kappa + 1;
    return p;
}

ColumnTypeDistribution dist_of(const CodeParams& p, std::initializer_list<std::pair<int, int>> nz) {
    ColumnTypeDistribution d;
    d.gamma = p.gamma;
    d.m = p.m;
    d.counts.assign(ColumnTypeDistribution::num_types(p.gamma, p.m), 0);
    for (auto [type, n] : nz) d.counts[type] = n;
    return d;
}

PartitionMatrix random_partition(const CodeParams& p, std::mt19937_64& rng) {
    PartitionMatrix part;
    part.gamma = p.gamma;
    part.kappa = p.kappa;
    part.m = p.m;
    part.assign.resize(static_cast<size_t>(p.gamma) * p.kappa);
    for (auto& a : part.assign) a = static_cast<std::uint8_t>(rng() % (p.m + 1));
    return part;
}

} // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(params(2, 7, 1).validate(), ConfigError);
    CHECK_THROWS_WITH_AS(params(2, 7, 1).validate(),
                         doctest::Contains("gamma=2"), ConfigError);
    CHECK_THROWS_AS(params(3, 7, 1, 1, 7).validate(), ConfigError); // z <= kappa
    CHECK_NOTHROW(params(3, 7, 1, 10, 13).validate());
}

TEST_CASE("partition_from_distribution basic examples") {
    // all circulants in H_0
    auto p = params(3, 2, 1);
    auto part = partition_from_distribution(dist_of(p, {{0, 2}}), p);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) CHECK(part.at(i, j) == 0);

    // one column of type (0,1,0), one of type (1,0,1)
    auto part2 = partition_from_distribution(dist_of(p, {{0b010, 1}, {0b101, 1}}), p);
    CHECK(part2.at(0, 0) == 0);
    CHECK(part2.at(1, 0) == 1);
    CHECK(part2.at(2, 0) == 0);
    CHECK(part2.at(0, 1) == 1);
    CHECK(part2.at(1, 1) == 0);
    CHECK(part2.at(2, 1) == 1);

    CHECK_THROWS_AS(partition_from_distribution(dist_of(p, {{0, 1}}), p), ConfigError);
}

TEST_CASE("histogram round-trips the distribution") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        auto p = params(3 + int(rng() % 2), 2 + int(rng() % 5), int(rng() % 3));
        auto part = random_partition(p, rng);
        auto hist = column_type_histogram(part);
        auto sorted = partition_from_distribution(hist, p);
        CHECK(column_type_histogram(sorted).counts == hist.counts);
        CHECK(hist.mass() == p.kappa);
    }
}

TEST_CASE("overlap parameters of the uncoupled assignment") {
    auto p = params(3, 7, 1);
    auto t = overlap_params(uncoupled_partition(p));
    for (int i = 0; i < 3; ++i) CHECK(t.lookup({i}) == 7);
    CHECK(t.lookup({0, 1}) == 7);
    CHECK(t.lookup({0, 2}) == 7);
    CHECK(t.lookup({1, 2}) == 7);
    CHECK(t.lookup({0, 1, 2}) == 7);
    for (int i = 3; i < 6; ++i) CHECK(t.lookup({i}) == 0);
    CHECK(t.lookup({0, 4}) == 0);
}

TEST_CASE("overlap parameters of the kappa=7 reference partition") {
    // t = [3 3 4 0 1 2 0] in the independent-parameter order
    auto p = params(3, 7, 1);
    // exact-coverage counts derived from that vector
    auto part = partition_from_distribution(
        dist_of(p, {{0b010, 1}, {0b011, 2}, {0b100, 2}, {0b101, 1}, {0b110, 1}}), p);
    auto t = overlap_params(part);
    CHECK(t.lookup({0}) == 3);
    CHECK(t.lookup({1}) == 3);
    CHECK(t.lookup({2}) == 4);
    CHECK(t.lookup({0, 1}) == 0);
    CHECK(t.lookup({0, 2}) == 1);
    CHECK(t.lookup({1, 2}) == 2);
    CHECK(t.lookup({0, 1, 2}) == 0);

    auto masks = independent_param_masks(3, 1);
    std::vector<std::int64_t> vec;
    for (auto msk : masks) vec.push_back(t.of_mask(msk));
    CHECK(vec == std::vector<std::int64_t>{3, 3, 4, 0, 1, 2, 0});
}

TEST_CASE("degree-1 parameters sum to gamma*kappa") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 30; ++rep) {
        auto p = params(3 + int(rng() % 2), 1 + int(rng() % 7), int(rng() % 3));
        auto t = overlap_params(random_partition(p, rng));
        std::int64_t sum = 0;
        for (int i = 0; i < t.rows(); ++i) sum += t.lookup({i});
        CHECK(sum == static_cast<std::int64_t>(p.gamma) * p.kappa);
    }
}

TEST_CASE("overlap monotonicity and congruence zeros") {
    std::mt19937_64 rng(3);
    auto p = params(3, 5, 2);
    auto t = overlap_params(random_partition(p, rng));
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.rows(); ++j) {
            if (i == j) continue;
            CHECK(t.lookup({i, j}) <= t.lookup({i}));
            if (i % 3 == j % 3) CHECK(t.lookup({i, j}) == 0);
        }
    // out-of-range lookups vanish
    CHECK(t.lookup({-3, 1}) == 0);
    CHECK(t.lookup({0, t.rows()}) == 0);
}

TEST_CASE("SC protograph shapes and block-diagonal m=0") {
    auto p0 = params(3, 4, 0);
    auto part0 = uncoupled_partition(p0);
    auto sc = build_sc_protograph(part0, 3);
    CHECK(sc.rows() == 9);
    CHECK(sc.cols() == 12);
    for (long long r = 0; r < sc.rows(); ++r)
        for (long long c = 0; c < sc.cols(); ++c) {
            bool inside = (r / 3) == (c / 4);
            CHECK(sc.at(r, c) == (inside ? 1 : 0));
        }

    auto p1 = params(3, 2, 1);
    auto sc1 = build_sc_protograph(uncoupled_partition(p1), 2);
    CHECK(sc1.rows() == 9);
    CHECK(sc1.cols() == 4);
}

TEST_CASE("interior row weights match component row weights") {
    std::mt19937_64 rng(5);
    auto p = params(3, 5, 1);
    auto part = random_partition(p, rng);
    auto sc = build_sc_protograph(part, 6);
    // row weight of H_y^p row i
    auto comp_weight = [&](int y, int i) {
        int w = 0;
        for (int j = 0; j < p.kappa; ++j) w += part.at(i, j) == y;
        return w;
    };
    for (long long r = 0; r < sc.rows(); ++r) {
        int w = 0;
        for (long long c = 0; c < sc.cols(); ++c) w += sc.at(r, c);
        int i = static_cast<int>(r % p.gamma);
        long long block = r / p.gamma;
        int expect = 0;
        for (int y = 0; y <= p.m; ++y) {
            long long rho = block - y + 1; // replica containing H_y at this block row
            if (rho >= 1 && rho <= sc.L) expect += comp_weight(y, i);
        }
        CHECK(w == expect);
    }
}

TEST_CASE("cutting-vector partitioning") {
    auto p = params(3, 19, 1, 5, 46);
    CHECK_THROWS_AS(cv_partition({4, 9}, p), ConfigError);
    CHECK_THROWS_AS(cv_partition({9, 9, 15}, p), ConfigError);
    CHECK_THROWS_AS(cv_partition({-1, 9, 15}, p), ConfigError);
    CHECK_THROWS_AS(cv_partition({4, 9, 20}, p), ConfigError);
    CHECK_THROWS_AS(cv_partition({19, 19, 19}, p), ConfigError);

    auto part = cv_partition({4, 9, 15}, p);
    int in_h0 = 0;
    for (auto a : part.assign) in_h0 += a == 0;
    CHECK(in_h0 == 28);

    auto p9 = params(4, 17, 1, 6, 37);
    auto part9 = cv_partition({3, 7, 11, 14}, p9);
    int in_h0_9 = 0;
    for (auto a : part9.assign) in_h0_9 += a == 0;
    CHECK(in_h0_9 == 35);

    auto mirrored = cv_partition({4, 9, 15}, p, /*mirror=*/true);
    for (size_t i = 0; i < part.assign.size(); ++i)
        CHECK(part.assign[i] + mirrored.assign[i] == 1);
}

TEST_CASE("independent parameter count") {
    CHECK(independent_param_count(3, 1) == 7);
    CHECK(independent_param_count(3, 2) == 26);
    CHECK(independent_param_count(4, 1) == 15);
    CHECK(independent_param_masks(3, 1).size() == 7);
    CHECK(independent_param_masks(3, 2).size() == 26);
    CHECK(independent_param_masks(4, 1).size() == 15);
}

TEST_CASE("distribution recovery from overlaps") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        auto p = params(3, 6, 1);
        auto part = random_partition(p, rng);
        auto t = overlap_params(part);
        auto dist = distribution_from_overlaps(t, p);
        CHECK(dist.counts == column_type_histogram(part).counts);
    }
}
