#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scforge/params.hpp"
#include "scforge/partition.hpp"
#include "scforge/patterns.hpp"

namespace scforge {

struct RunConfig {
    int schema = 1;
    std::string mode; // oo | cpo | full | census | uncoupled | cv-baseline
    CodeParams params;
    std::uint64_t seed = 1;

    // oo options
    std::string oo_strategy = "auto"; // auto | exhaustive | local
    std::int64_t oo_guard = 10'000'000;
    int oo_restarts = 8;
    std::int64_t oo_budget = 1000;

    // cpo options
    int cpo_subset = 3;
    std::int64_t cpo_budget = 20'000;
    std::int64_t cpo_target = 0;

    // partition source for census/cpo modes: oo | uncoupled | cv | explicit
    std::string partition_source = "oo";
    std::vector<int> cv;                    // when source == "cv"
    std::vector<std::vector<int>> assign;   // when source == "explicit"
    bool cv_mirror = false;

    std::string out_dir = ".";
    std::vector<std::string> formats = {"report-json"};

    static RunConfig from_json_text(const std::string& text);
};

struct DesignReport {
    int schema = 1;
    std::string tool_version;
    std::string mode;
    CodeParams params;
    std::uint64_t seed = 0;

    std::vector<std::vector<int>> partition; // gamma x kappa component ids
    std::vector<std::vector<int>> powers;    // gamma x kappa circulant powers

    // protograph census
    std::vector<std::int64_t> t_star;            // independent params, (size, lex) order
    std::array<std::int64_t, kNumPatterns + 1> pattern_totals{};
    std::int64_t f_sum_twice = 0;
    std::int64_t f_sum_rounded = 0;

    std::int64_t f_sc_before = -1; // SCB powers
    std::int64_t f_sc_after = -1;  // after CPO (or -1 when no CPO ran)

    std::string oo_strategy;
    std::int64_t oo_visited = 0;
    int oo_restarts = 0;
    std::int64_t cpo_iterations = 0;
    std::int64_t cpo_accepted = 0;
    std::vector<int> cv; // cv-baseline winner

    std::string to_json_text() const;
    static DesignReport from_json_text(const std::string& text);
    std::string to_table_text() const;
};

// Orchestrates a run; writes requested artifacts into out_dir and returns
// the report. Wall-clock timings go to stderr, never into artifacts, so
// identical runs produce identical files.
DesignReport run(const RunConfig& cfg);

extern const char* kToolVersion;

} // namespace scforge
