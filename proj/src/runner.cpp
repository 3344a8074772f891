#include "suned/runner.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <thread>

#include "suned/errors.hpp"
#include "suned/report.hpp"
#include "suned/version.hpp"

namespace suned::cli {

namespace {

using nlohmann::json;

unsigned effective_jobs(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

hamiltonian::ChainConfig base_chain(const ExperimentConfig& cfg) {
    hamiltonian::ChainConfig chain;
    chain.num_sites = cfg.num_sites;
    chain.num_flavors = cfg.num_flavors;
    chain.potential = cfg.potential;
    return chain;
}

/// One coupling set per draw, all drawn sequentially from the single seeded
/// generator (t, then J, then K per draw).
std::vector<hamiltonian::ChainConfig> materialize_draws(
    const ExperimentConfig& cfg) {
    std::vector<hamiltonian::ChainConfig> out;
    if (!cfg.couplings.is_distribution) {
        auto chain = base_chain(cfg);
        chain.hopping = cfg.couplings.t;
        chain.exchange = cfg.couplings.J;
        chain.pair_hopping = cfg.couplings.K;
        out.push_back(std::move(chain));
        return out;
    }
    std::mt19937_64 rng(cfg.couplings.seed);
    std::uniform_real_distribution<double> dist(cfg.couplings.low,
                                                cfg.couplings.high);
    const std::size_t bonds = static_cast<std::size_t>(cfg.num_sites - 1);
    for (int d = 0; d < cfg.couplings.draws; ++d) {
        auto chain = base_chain(cfg);
        for (std::size_t x = 0; x < bonds; ++x)
            chain.hopping.push_back(dist(rng));
        for (std::size_t x = 0; x < bonds; ++x)
            chain.exchange.push_back(dist(rng));
        for (std::size_t x = 0; x < bonds; ++x)
            chain.pair_hopping.push_back(dist(rng));
        out.push_back(std::move(chain));
    }
    return out;
}

json couplings_json(const hamiltonian::ChainConfig& chain) {
    return {{"t", chain.hopping},
            {"J", chain.exchange},
            {"K", chain.pair_hopping}};
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write output file '" + path.string() + "'");
    out << bytes;
}

struct OutputWriter {
    const ExperimentConfig& cfg;
    std::string command;
    std::chrono::steady_clock::time_point started =
        std::chrono::steady_clock::now();

    void write(const json& runs, const std::string& csv, std::size_t passed,
               std::size_t failed, std::ostream& log) const {
        const std::filesystem::path dir(cfg.outputs.out_dir);
        std::filesystem::create_directories(dir);

        json report = {
            {"schema_version", kReportSchemaVersion},
            {"artifact_version", kArtifactVersion},
            {"command", command},
            {"seed", cfg.couplings.is_distribution ? json(cfg.couplings.seed)
                                                   : json(nullptr)},
            {"config", config_echo(cfg)},
            {"runs", runs},
            {"summary",
             {{"runs", runs.size()},
              {"checks_passed", passed},
              {"checks_failed", failed},
              {"all_pass", failed == 0}}},
        };

        const auto format = cfg.outputs.format;
        if (format != OutputFormat::Csv) {
            write_file(dir / "report.json", report.dump(2) + "\n");
            log << "wrote " << (dir / "report.json").string() << '\n';
        }
        if (format != OutputFormat::Json) {
            write_file(dir / "table.csv", csv);
            log << "wrote " << (dir / "table.csv").string() << '\n';
        }

        const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
        json manifest = {
            {"artifact_version", kArtifactVersion},
            {"command", command},
            {"seed", cfg.couplings.is_distribution ? json(cfg.couplings.seed)
                                                   : json(nullptr)},
            {"config", config_echo(cfg)},
            {"checks_passed", passed},
            {"checks_failed", failed},
            {"wall_time_ms", wall},
        };
        write_file(dir / "manifest.json", manifest.dump(2) + "\n");
        log << "wrote " << (dir / "manifest.json").string() << '\n';
    }
};

spectra::ReportOptions report_options(const ExperimentConfig& cfg) {
    spectra::ReportOptions opts;
    opts.tolerances = cfg.tolerances;
    opts.solver = cfg.solver;
    opts.jobs = effective_jobs(cfg.jobs);
    return opts;
}

int run_checked(const ExperimentConfig& cfg, std::ostream& log,
                bool with_verdicts) {
    cfg.validate();
    OutputWriter writer{cfg, with_verdicts ? "verify" : "spectrum"};
    const auto opts = report_options(cfg);
    const auto draws = materialize_draws(cfg);

    json runs = json::array();
    std::string csv = spectra::csv_header(with_verdicts);
    std::size_t passed = 0, failed = 0;

    for (std::size_t d = 0; d < draws.size(); ++d) {
        const auto& chain = draws[d];
        json run = {{"draw", d}, {"couplings", couplings_json(chain)}};

        if (cfg.total_particles) {
            const auto report =
                spectra::level_ordering_report(chain, *cfg.total_particles, opts);
            run["level_ordering"] = spectra::to_json(report);
            spectra::append_csv(csv, report, static_cast<int>(d), with_verdicts);
            if (with_verdicts) {
                const auto bad = report.failed_checks();
                failed += bad.size();
                passed += spectra::check_count(report) - bad.size();
                for (const auto& b : bad)
                    log << "draw " << d << ": check failed: " << b << '\n';
                log << "draw " << d << ": M=" << report.total_particles
                    << " ground=" << (report.observed_ground
                                          ? report.observed_ground->to_string()
                                          : "?")
                    << " violations=" << report.violations.size()
                    << " multiplicity=" << report.observed_multiplicity << "/"
                    << report.expected_multiplicity
                    << (bad.empty() ? " PASS" : " FAIL") << '\n';
            } else {
                log << "draw " << d << ": M=" << report.total_particles << " "
                    << report.diagrams.size() << " diagram(s)\n";
            }
        } else {
            json items = json::array();
            std::map<std::vector<int>, spectra::PermutationVerdict> perm_cache;
            for (const auto& sector : cfg.sectors) {
                const auto v = spectra::verify_sector(chain, sector, opts);
                items.push_back(spectra::to_json(v));
                spectra::append_csv(csv, v, static_cast<int>(d), with_verdicts);
                if (with_verdicts) {
                    const auto bad = v.failed_checks();
                    failed += bad.size();
                    passed += spectra::check_count(v) - bad.size();
                    for (const auto& b : bad)
                        log << "draw " << d << ": check failed: " << b << '\n';
                    const auto key = v.labeled_sector.counts;
                    if (!perm_cache.count(key))
                        perm_cache[key] = spectra::permuted_sector_consistency(
                            chain, sector, opts);
                }
            }
            if (with_verdicts) {
                json perms = json::array();
                for (const auto& [key, verdict] : perm_cache) {
                    perms.push_back({{"sector", key},
                                     {"pass", verdict.pass},
                                     {"max_spread", verdict.max_spread},
                                     {"permutations", verdict.permutations}});
                    if (verdict.pass)
                        ++passed;
                    else {
                        ++failed;
                        log << "draw " << d
                            << ": check failed: permutation-consistency for "
                            << fock::Sector{key}.to_string() << '\n';
                    }
                }
                run["permutation_consistency"] = perms;
            }
            run["sectors"] = items;
        }
        runs.push_back(std::move(run));
    }

    writer.write(runs, csv, passed, failed, log);
    log << "summary: " << passed << " check(s) passed, " << failed
        << " failed\n";
    if (!with_verdicts) return kExitPass;
    return failed == 0 ? kExitPass : kExitCheckFailure;
}

}  // namespace

int run_verify(const ExperimentConfig& cfg, std::ostream& log) {
    return run_checked(cfg, log, true);
}

int run_spectrum(const ExperimentConfig& cfg, std::ostream& log) {
    return run_checked(cfg, log, false);
}

int run_selftest(const SelftestOptions& opts, const OutputOptions& outputs,
                 std::ostream& log) {
    const auto started = std::chrono::steady_clock::now();
    SelftestOptions effective = opts;
    effective.jobs = effective_jobs(opts.jobs);
    const auto result = run_selftest_suite(effective, log);

    const std::filesystem::path dir(outputs.out_dir);
    std::filesystem::create_directories(dir);
    const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
    json manifest = {
        {"artifact_version", kArtifactVersion},
        {"command", "selftest"},
        {"seed", opts.seed},
        {"checks_passed", result.checks_passed},
        {"checks_failed", result.failures.size()},
        {"failures", result.failures},
        {"wall_time_ms", wall},
    };
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
    log << "wrote " << (dir / "manifest.json").string() << '\n';
    log << "selftest: " << result.checks_passed << " check(s) passed, "
        << result.failures.size() << " failed\n";
    return result.ok() ? kExitPass : kExitCheckFailure;
}

}  // namespace suned::cli
