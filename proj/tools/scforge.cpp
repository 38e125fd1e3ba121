#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scforge/alist.hpp"
#include "scforge/lifting.hpp"
#include "scforge/report.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitGuard = 3;
constexpr int kExitIo = 4;

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw scforge::IoError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

scforge::PartitionMatrix partition_of_report(const scforge::DesignReport& rep) {
    scforge::PartitionMatrix part;
    part.gamma = rep.params.gamma;
    part.kappa = rep.params.kappa;
    part.m = rep.params.m;
    part.assign.resize(static_cast<size_t>(part.gamma) * part.kappa);
    for (int i = 0; i < part.gamma; ++i)
        for (int j = 0; j < part.kappa; ++j)
            part.at(i, j) = static_cast<std::uint8_t>(rep.partition[i][j]);
    return part;
}

scforge::CirculantPowers powers_of_report(const scforge::DesignReport& rep) {
    scforge::CirculantPowers f;
    f.gamma = rep.params.gamma;
    f.kappa = rep.params.kappa;
    f.f.resize(static_cast<size_t>(f.gamma) * f.kappa);
    for (int i = 0; i < f.gamma; ++i)
        for (int j = 0; j < f.kappa; ++j) f.at(i, j) = rep.powers[i][j];
    return f;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"scforge: spatially-coupled LDPC code construction via overlap "
                 "partitioning and circulant power optimization"};
    app.require_subcommand(1);
    app.fallthrough(); // allow global flags after the subcommand

    std::string config_path, out_dir, format;
    std::uint64_t seed = 0;
    long long budget = -1;
    bool have_seed = false;

    app.add_option("--config", config_path, "JSON config (for export: a report.json)")->required();
    app.add_option("--seed", seed, "override the config seed")->each([&](const std::string&) {
        have_seed = true;
    });
    app.add_option("--budget", budget, "override the mode's iteration budget");
    app.add_option("--out-dir", out_dir, "output directory");
    app.add_option("--format", format, "alist | report-json | report-table");

    const char* modes[] = {"oo", "cpo", "full", "census", "uncoupled", "cv-baseline", "export"};
    for (const char* m : modes) app.add_subcommand(m);

    CLI11_PARSE(app, argc, argv);
    const std::string mode = app.get_subcommands().front()->get_name();

    try {
        if (mode == "export") {
            scforge::DesignReport rep = scforge::DesignReport::from_json_text(slurp(config_path));
            const std::string dir = out_dir.empty() ? "." : out_dir;
            std::filesystem::create_directories(dir);
            if (format.empty() || format == "alist") {
                auto code = scforge::assemble_parity_matrix(partition_of_report(rep),
                                                            powers_of_report(rep), rep.params);
                scforge::export_alist(code, dir + "/code.alist");
            } else if (format == "report-table") {
                scforge::write_file_atomic(dir + "/report.txt", rep.to_table_text());
            } else if (format == "report-json") {
                scforge::write_file_atomic(dir + "/report.json", rep.to_json_text());
            } else {
                throw scforge::ConfigError("unknown format '" + format + "'");
            }
            return 0;
        }

        scforge::RunConfig cfg = scforge::RunConfig::from_json_text(slurp(config_path));
        cfg.mode = mode;
        if (have_seed) cfg.seed = seed;
        if (budget >= 0) {
            cfg.cpo_budget = budget;
            cfg.oo_budget = budget;
        }
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (!format.empty()) cfg.formats = {format};

        scforge::DesignReport rep = scforge::run(cfg);
        std::cout << rep.to_table_text();
        return 0;
    } catch (const scforge::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const scforge::GuardExceeded& e) {
        std::cerr << "guard violation: " << e.what()
                  << " (raise the guard or switch to a local strategy)\n";
        return kExitGuard;
    } catch (const scforge::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
