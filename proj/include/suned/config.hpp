#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "suned/hamiltonian.hpp"
#include "suned/spectra.hpp"

namespace suned::cli {

enum class OutputFormat { Json, Csv, Both };

struct OutputOptions {
    std::string out_dir = ".";
    OutputFormat format = OutputFormat::Both;
};

/// Either fixed coupling arrays or a seeded uniform distribution; exactly one
/// of the two. All randomness of a run flows from this one seed.
struct CouplingSpec {
    bool is_distribution = false;
    std::vector<double> t, J, K;
    double low = 0.5;
    double high = 1.5;
    std::uint64_t seed = 0;
    int draws = 1;
};

struct ExperimentConfig {
    int num_sites = 0;
    int num_flavors = 0;
    hamiltonian::PotentialSpec potential;
    std::optional<int> total_particles;  // level-ordering mode
    std::vector<fock::Sector> sectors;   // explicit-sector mode
    CouplingSpec couplings;
    spectra::Tolerances tolerances;
    spectra::SolverOptions solver;
    OutputOptions outputs;
    unsigned jobs = 0;  // 0 = available parallelism

    /// Semantic validation beyond parse; throws ConfigError naming the field.
    void validate() const;
};

ExperimentConfig parse_experiment_config(const nlohmann::json& j);
ExperimentConfig load_experiment_config(const std::string& path);

/// Canonical echo of the parsed config, embedded in reports and manifests.
nlohmann::json config_echo(const ExperimentConfig& cfg);

}  // namespace suned::cli
