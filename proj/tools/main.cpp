#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "suned/errors.hpp"
#include "suned/runner.hpp"
#include "suned/version.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> jobs;
    std::optional<std::string> out_dir;
    std::optional<std::string> format;
};

suned::cli::ExperimentConfig load_with_overrides(
    const CommonFlags& flags, const std::optional<int>& sites,
    const std::optional<int>& flavors, const std::optional<int>& particles) {
    auto cfg = suned::cli::load_experiment_config(flags.config_path);
    if (sites) cfg.num_sites = *sites;
    if (flavors) cfg.num_flavors = *flavors;
    if (particles) {
        cfg.total_particles = *particles;
        cfg.sectors.clear();
    }
    if (flags.seed) {
        if (!cfg.couplings.is_distribution)
            throw suned::ConfigError(
                "--seed override requires distribution couplings");
        cfg.couplings.seed = *flags.seed;
    }
    if (flags.jobs) cfg.jobs = *flags.jobs;
    if (flags.out_dir) cfg.outputs.out_dir = *flags.out_dir;
    if (flags.format) {
        if (*flags.format == "json")
            cfg.outputs.format = suned::cli::OutputFormat::Json;
        else if (*flags.format == "csv")
            cfg.outputs.format = suned::cli::OutputFormat::Csv;
        else if (*flags.format == "both")
            cfg.outputs.format = suned::cli::OutputFormat::Both;
        else
            throw suned::ConfigError("--format expects json, csv, or both");
    }
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SU(N) chain exact diagonalization and level-ordering checks"};
    app.set_version_flag("--version", suned::kArtifactVersion);
    app.require_subcommand(1);

    CommonFlags verify_flags, spectrum_flags;
    std::optional<int> sites, flavors, particles;
    std::optional<int> s_sites, s_flavors, s_particles;

    auto* verify = app.add_subcommand(
        "verify", "run every theorem check and gate the exit status");
    verify->add_option("config", verify_flags.config_path,
                       "experiment config (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    verify->add_option("--seed", verify_flags.seed,
                       "override the coupling-distribution seed");
    verify->add_option("--jobs", verify_flags.jobs, "worker threads");
    verify->add_option("--out-dir", verify_flags.out_dir, "output directory");
    verify->add_option("--format", verify_flags.format, "json|csv|both");
    verify->add_option("-L,--sites", sites, "override chain length");
    verify->add_option("-N,--flavors", flavors, "override flavor count");
    verify->add_option("-M,--particles", particles,
                       "override total particle number");

    auto* spectrum = app.add_subcommand(
        "spectrum", "dump the per-diagram energy table without verdict gating");
    spectrum->add_option("config", spectrum_flags.config_path,
                         "experiment config (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    spectrum->add_option("--seed", spectrum_flags.seed,
                         "override the coupling-distribution seed");
    spectrum->add_option("--jobs", spectrum_flags.jobs, "worker threads");
    spectrum->add_option("--out-dir", spectrum_flags.out_dir,
                         "output directory");
    spectrum->add_option("--format", spectrum_flags.format, "json|csv|both");
    spectrum->add_option("-L,--sites", s_sites, "override chain length");
    spectrum->add_option("-N,--flavors", s_flavors, "override flavor count");
    spectrum->add_option("-M,--particles", s_particles,
                         "override total particle number");

    suned::cli::SelftestOptions selftest_opts;
    suned::cli::OutputOptions selftest_out;
    auto* selftest = app.add_subcommand(
        "selftest", "exhaustive small-instance invariant suite");
    selftest->add_option("--seed", selftest_opts.seed, "selftest RNG seed");
    selftest->add_option("--jobs", selftest_opts.jobs, "worker threads");
    selftest->add_option("--out-dir", selftest_out.out_dir,
                         "output directory");
    selftest->add_flag("--corrupt-sign", selftest_opts.corrupt_sign, "")
        ->group("");  // test fixture, hidden

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return suned::cli::run_verify(
                load_with_overrides(verify_flags, sites, flavors, particles),
                std::cout);
        if (spectrum->parsed())
            return suned::cli::run_spectrum(
                load_with_overrides(spectrum_flags, s_sites, s_flavors,
                                    s_particles),
                std::cout);
        return suned::cli::run_selftest(selftest_opts, selftest_out,
                                        std::cout);
    } catch (const suned::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return suned::cli::kExitConfigError;
    } catch (const suned::SolverError& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return suned::cli::kExitSolverFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return suned::cli::kExitSolverFailure;
    }
}
