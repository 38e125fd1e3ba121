#include "scforge/report.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "scforge/alist.hpp"
#include "scforge/census.hpp"
#include "scforge/cpo.hpp"
#include "scforge/lifting.hpp"
#include "scforge/oo.hpp"
#include "scforge/overlap.hpp"
#include "scforge/threads.hpp"

namespace scforge {

const char* kToolVersion = "scforge 1.0.0";

using nlohmann::json;

namespace {

json grid_to_json(const std::vector<std::vector<int>>& g) { return json(g); }

std::vector<std::vector<int>> grid_from_partition(const PartitionMatrix& part) {
    std::vector<std::vector<int>> g(part.gamma, std::vector<int>(part.kappa));
    for (int i = 0; i < part.gamma; ++i)
        for (int j = 0; j < part.kappa; ++j) g[i][j] = part.at(i, j);
    return g;
}

std::vector<std::vector<int>> grid_from_powers(const CirculantPowers& f) {
    std::vector<std::vector<int>> g(f.gamma, std::vector<int>(f.kappa));
    for (int i = 0; i < f.gamma; ++i)
        for (int j = 0; j < f.kappa; ++j) g[i][j] = f.at(i, j);
    return g;
}

PartitionMatrix partition_from_grid(const std::vector<std::vector<int>>& g, const CodeParams& p) {
    if (static_cast<int>(g.size()) != p.gamma)
        throw ConfigError("partition grid must have gamma rows");
    PartitionMatrix part;
    part.gamma = p.gamma;
    part.kappa = p.kappa;
    part.m = p.m;
    part.assign.assign(static_cast<size_t>(p.gamma) * p.kappa, 0);
    for (int i = 0; i < p.gamma; ++i) {
        if (static_cast<int>(g[i].size()) != p.kappa)
            throw ConfigError("partition grid must have kappa columns");
        for (int j = 0; j < p.kappa; ++j) {
            if (g[i][j] < 0 || g[i][j] > p.m)
                throw ConfigError("partition entries must lie in [0, m]");
            part.at(i, j) = static_cast<std::uint8_t>(g[i][j]);
        }
    }
    return part;
}

std::vector<std::int64_t> independent_params(const OverlapParams& t) {
    std::vector<std::int64_t> out;
    for (std::uint32_t mask : independent_param_masks(t.gamma, t.m)) out.push_back(t.of_mask(mask));
    return out;
}

} // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    RunConfig c;
    try {
        c.schema = j.value("schema", 1);
        if (c.schema != 1) throw ConfigError("unsupported config schema version");
        c.mode = j.value("mode", "");
        c.params.gamma = j.value("gamma", 3);
        c.params.kappa = j.value("kappa", 0);
        c.params.z = j.value("z", 0);
        c.params.m = j.value("m", 1);
        c.params.L = j.value("L", 1);
        c.seed = j.value("seed", std::uint64_t{1});
        if (j.contains("oo")) {
            const auto& o = j["oo"];
            c.oo_strategy = o.value("strategy", c.oo_strategy);
            c.oo_guard = o.value("guard", c.oo_guard);
            c.oo_restarts = o.value("restarts", c.oo_restarts);
            c.oo_budget = o.value("budget", c.oo_budget);
        }
        if (j.contains("cpo")) {
            const auto& o = j["cpo"];
            c.cpo_subset = o.value("subset_size", c.cpo_subset);
            c.cpo_budget = o.value("budget", c.cpo_budget);
            c.cpo_target = o.value("target", c.cpo_target);
        }
        if (j.contains("partition")) {
            const auto& o = j["partition"];
            c.partition_source = o.value("source", c.partition_source);
            if (o.contains("cv")) c.cv = o["cv"].get<std::vector<int>>();
            c.cv_mirror = o.value("mirror", false);
            if (o.contains("assign")) c.assign = o["assign"].get<std::vector<std::vector<int>>>();
        }
        c.out_dir = j.value("out_dir", c.out_dir);
        if (j.contains("formats")) c.formats = j["formats"].get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config field: ") + e.what());
    }
    return c;
}

std::string DesignReport::to_json_text() const {
    json j;
    j["schema"] = schema;
    j["tool_version"] = tool_version;
    j["mode"] = mode;
    j["params"] = {{"gamma", params.gamma}, {"kappa", params.kappa}, {"z", params.z},
                   {"m", params.m},         {"L", params.L}};
    j["seed"] = seed;
    j["partition"] = grid_to_json(partition);
    j["powers"] = grid_to_json(powers);
    j["t_star"] = t_star;
    json pt = json::object();
    for (int ell = 1; ell <= kNumPatterns; ++ell)
        pt["P" + std::to_string(ell)] = pattern_totals[ell];
    j["pattern_totals"] = pt;
    j["f_sum_twice"] = f_sum_twice;
    j["f_sum_rounded"] = f_sum_rounded;
    j["f_sc_before"] = f_sc_before;
    j["f_sc_after"] = f_sc_after;
    j["oo"] = {{"strategy", oo_strategy}, {"visited", oo_visited}, {"restarts", oo_restarts}};
    j["cpo"] = {{"iterations", cpo_iterations}, {"accepted", cpo_accepted}};
    j["cv"] = cv;
    return j.dump(2) + "\n";
}

DesignReport DesignReport::from_json_text(const std::string& text) {
    json j = json::parse(text);
    DesignReport r;
    r.schema = j.at("schema").get<int>();
    r.tool_version = j.at("tool_version").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    r.params.gamma = j.at("params").at("gamma").get<int>();
    r.params.kappa = j.at("params").at("kappa").get<int>();
    r.params.z = j.at("params").at("z").get<int>();
    r.params.m = j.at("params").at("m").get<int>();
    r.params.L = j.at("params").at("L").get<long long>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.partition = j.at("partition").get<std::vector<std::vector<int>>>();
    r.powers = j.at("powers").get<std::vector<std::vector<int>>>();
    r.t_star = j.at("t_star").get<std::vector<std::int64_t>>();
    for (int ell = 1; ell <= kNumPatterns; ++ell)
        r.pattern_totals[ell] = j.at("pattern_totals").at("P" + std::to_string(ell)).get<std::int64_t>();
    r.f_sum_twice = j.at("f_sum_twice").get<std::int64_t>();
    r.f_sum_rounded = j.at("f_sum_rounded").get<std::int64_t>();
    r.f_sc_before = j.at("f_sc_before").get<std::int64_t>();
    r.f_sc_after = j.at("f_sc_after").get<std::int64_t>();
    r.oo_strategy = j.at("oo").at("strategy").get<std::string>();
    r.oo_visited = j.at("oo").at("visited").get<std::int64_t>();
    r.oo_restarts = j.at("oo").at("restarts").get<int>();
    r.cpo_iterations = j.at("cpo").at("iterations").get<std::int64_t>();
    r.cpo_accepted = j.at("cpo").at("accepted").get<std::int64_t>();
    r.cv = j.at("cv").get<std::vector<int>>();
    return r;
}

std::string DesignReport::to_table_text() const {
    std::ostringstream o;
    o << tool_version << "  mode=" << mode << "\n";
    o << "gamma=" << params.gamma << " kappa=" << params.kappa << " z=" << params.z
      << " m=" << params.m << " L=" << params.L << " seed=" << seed << "\n\n";
    o << "pattern census (protograph)\n";
    o << "  pattern   instances\n";
    for (int ell = 1; ell <= kNumPatterns; ++ell) {
        o << "  P" << ell << "        " << pattern_totals[ell] << "\n";
    }
    o << "  F_sum     " << (f_sum_twice / 2) << (f_sum_twice % 2 ? ".5" : ".0")
      << "  (rounded " << f_sum_rounded << ")\n\n";
    o << "lifted (4,4(gamma-2)) counts\n";
    o << "  with SCB powers : " << f_sc_before << "\n";
    if (f_sc_after >= 0) o << "  after CPO       : " << f_sc_after << "\n";
    if (!cv.empty()) {
        o << "best cutting vector: [";
        for (size_t i = 0; i < cv.size(); ++i) o << cv[i] << (i + 1 < cv.size() ? " " : "");
        o << "]\n";
    }
    o << "\nt* (independent overlap parameters): [";
    for (size_t i = 0; i < t_star.size(); ++i) o << t_star[i] << (i + 1 < t_star.size() ? " " : "");
    o << "]\n";
    o << "partition (component of each circulant):\n";
    for (const auto& row : partition) {
        o << "  ";
        for (size_t j = 0; j < row.size(); ++j) o << row[j] << (j + 1 < row.size() ? " " : "");
        o << "\n";
    }
    o << "circulant powers:\n";
    for (const auto& row : powers) {
        o << "  ";
        for (size_t j = 0; j < row.size(); ++j) o << row[j] << (j + 1 < row.size() ? " " : "");
        o << "\n";
    }
    return o.str();
}

namespace {

PartitionMatrix resolve_partition(const RunConfig& cfg, DesignReport& rep) {
    const CodeParams& p = cfg.params;
    if (cfg.partition_source == "uncoupled") return uncoupled_partition(p);
    if (cfg.partition_source == "cv") {
        if (cfg.cv.empty()) throw ConfigError("partition source 'cv' needs a cutting vector");
        return cv_partition(cfg.cv, p, cfg.cv_mirror);
    }
    if (cfg.partition_source == "explicit") {
        if (cfg.assign.empty()) throw ConfigError("partition source 'explicit' needs 'assign'");
        return partition_from_grid(cfg.assign, p);
    }
    if (cfg.partition_source == "oo") {
        OOSolution sol;
        if (cfg.oo_strategy == "local" ||
            (cfg.oo_strategy == "auto" && exhaustive_space(p) > cfg.oo_guard)) {
            sol = solve_local(p, cfg.seed, cfg.oo_restarts, cfg.oo_budget);
        } else {
            sol = solve_exhaustive(p, cfg.oo_guard);
        }
        rep.oo_strategy = sol.strategy;
        rep.oo_visited = sol.visited;
        rep.oo_restarts = sol.restarts;
        return sol.partition;
    }
    throw ConfigError("unknown partition source '" + cfg.partition_source + "'");
}

void fill_census(DesignReport& rep, const PartitionMatrix& part, const CodeParams& p) {
    OverlapParams t = overlap_params(part);
    PatternCensus c = census(t, p);
    rep.pattern_totals = c.total;
    rep.f_sum_twice = c.f_sum.twice;
    rep.f_sum_rounded = c.f_sum.rounded();
    rep.t_star = independent_params(t);
}

} // namespace

DesignReport run(const RunConfig& cfg) {
    const CodeParams& p = cfg.params;
    p.validate();

    DesignReport rep;
    rep.tool_version = kToolVersion;
    rep.mode = cfg.mode;
    rep.params = p;
    rep.seed = cfg.seed;

    const auto t0 = std::chrono::steady_clock::now();

    PartitionMatrix part;
    CirculantPowers powers;

    if (cfg.mode == "uncoupled") {
        part = uncoupled_partition(p);
        powers = scb_powers(p);
        rep.f_sc_before = count_f_sc(part, powers, p);
    } else if (cfg.mode == "cv-baseline") {
        // scan all strictly ascending cutting vectors, keep the lowest count
        std::vector<std::vector<int>> vectors;
        std::vector<int> zeta(p.gamma);
        auto rec = [&](auto&& self, int pos, int next) -> void {
            if (pos == p.gamma) {
                vectors.push_back(zeta);
                return;
            }
            for (int v = next; v <= p.kappa; ++v) {
                zeta[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 0);
        std::vector<std::int64_t> counts(vectors.size());
        parallel_for(static_cast<int>(vectors.size()), [&](int i) {
            counts[i] = count_f_sc(cv_partition(vectors[i], p, cfg.cv_mirror), scb_powers(p), p);
        });
        size_t best = 0;
        for (size_t i = 1; i < vectors.size(); ++i)
            if (counts[i] < counts[best]) best = i;
        rep.cv = vectors[best];
        part = cv_partition(vectors[best], p, cfg.cv_mirror);
        powers = scb_powers(p);
        rep.f_sc_before = counts[best];
    } else if (cfg.mode == "oo" || cfg.mode == "census") {
        RunConfig c2 = cfg;
        if (cfg.mode == "oo") c2.partition_source = "oo";
        part = resolve_partition(c2, rep);
        powers = scb_powers(p);
        rep.f_sc_before = count_f_sc(part, powers, p);
    } else if (cfg.mode == "cpo" || cfg.mode == "full") {
        RunConfig c2 = cfg;
        if (cfg.mode == "full") c2.partition_source = "oo";
        part = resolve_partition(c2, rep);
        CpoConfig cc;
        cc.subset_size = cfg.cpo_subset;
        cc.budget = cfg.cpo_budget;
        cc.target = cfg.cpo_target;
        cc.seed = cfg.seed;
        CpoState st = run_cpo(part, p, cc);
        powers = st.powers;
        rep.f_sc_before = st.f_sc_initial;
        rep.f_sc_after = st.f_sc;
        rep.cpo_iterations = st.iterations;
        for (const auto& te : st.trace) rep.cpo_accepted += te.accepted;
        // trace stream for downstream consumers
        if (!cfg.out_dir.empty()) {
            std::ostringstream tr;
            for (const auto& te : st.trace) {
                nlohmann::json tj;
                tj["iteration"] = te.iteration;
                tj["circulants"] = te.circulants;
                tj["powers"] = te.powers;
                tj["f_sc"] = te.f_sc;
                tj["accepted"] = te.accepted;
                tr << tj.dump() << "\n";
            }
            std::filesystem::create_directories(cfg.out_dir);
            write_file_atomic(cfg.out_dir + "/cpo_trace.jsonl", tr.str());
        }
    } else {
        throw ConfigError("unknown mode '" + cfg.mode + "'");
    }

    fill_census(rep, part, p);
    rep.partition = grid_from_partition(part);
    rep.powers = grid_from_powers(powers);

    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        for (const std::string& fmt : cfg.formats) {
            if (fmt == "report-json") {
                write_file_atomic(cfg.out_dir + "/report.json", rep.to_json_text());
            } else if (fmt == "report-table") {
                write_file_atomic(cfg.out_dir + "/report.txt", rep.to_table_text());
            } else if (fmt == "alist") {
                LiftedCode code = assemble_parity_matrix(part, powers, p);
                export_alist(code, cfg.out_dir + "/code.alist");
            } else {
                throw ConfigError("unknown format '" + fmt + "'");
            }
        }
    }

    const auto dt =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    std::cerr << "[scforge] mode=" << cfg.mode << " wall_ms=" << dt.count() << "\n";
    return rep;
}

} // namespace scforge
