#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "suned/fock.hpp"
#include "suned/hamiltonian.hpp"
#include "suned/young.hpp"

namespace suned::spectra {

struct SolverOptions {
    /// Dense solve at or below this dimension; Lanczos with full
    /// reorthogonalization above. Dense is exact and cheap at small sizes;
    /// full reorthogonalization kills the ghost eigenvalues that the large
    /// ground-state gaps of these matrices would otherwise produce.
    std::size_t dense_cutoff = 512;
    std::size_t max_iterations = 200'000;
    double residual_tol = 1e-10;  // relative to max(1, |E|)
    std::uint64_t lanczos_seed = 0x51ac5eedULL;
};

struct Tolerances {
    double degeneracy = 1e-8;        // relative to max(1, |E0|)
    double positivity_floor = 1e-12; // relative to the largest component
    double trial_overlap = 1e-12;
    double raising_norm = 1e-8;
    double ordering_margin = 1e-9;
    double permutation_agreement = 1e-10;
};

struct EigenResult {
    double energy = 0.0;
    std::vector<double> vector;  // unit norm
    std::optional<double> gap;   // distance to the next computed level
};

/// The `how_many` algebraically smallest eigenpairs, ascending. Every
/// returned pair satisfies ||Hv - Ev|| <= residual_tol * max(1, |E|);
/// failure to converge throws SolverError.
std::vector<EigenResult> lowest_eigenpairs(
    const hamiltonian::SparseSectorMatrix& m, std::size_t how_many,
    const SolverOptions& opts = {});

struct PositivityVerdict {
    bool pass = false;
    double min_component = 0.0;
    double max_component = 0.0;
};

/// Fixes the global sign so the largest-magnitude component is positive and
/// requires every component to clear the positivity floor.
PositivityVerdict verify_positivity(const EigenResult& r,
                                    const Tolerances& tol = {});

struct UniquenessVerdict {
    bool pass = false;
    bool trivial = false;  // dimension-1 sector, unique by convention
    double gap = 0.0;
};

UniquenessVerdict verify_uniqueness(std::span<const EigenResult> results,
                                    std::size_t dimension,
                                    const Tolerances& tol = {});

struct MultipletVerdict {
    bool pass = false;
    bool trial_pass = false;
    bool raising_pass = false;
    double trial_component = 0.0;
    double max_raising_norm = 0.0;
};

/// Identifies the multiplet of a nonascending-sector eigenvector: nonzero
/// component on the trial state and annihilation by every raising generator.
MultipletVerdict verify_multiplet_label(const EigenResult& r,
                                        const fock::SectorBasis& basis,
                                        const Tolerances& tol = {});

enum class CheckOutcome { Pass, Fail, Indeterminate };
const char* to_string(CheckOutcome o);

struct ReportOptions {
    Tolerances tolerances;
    SolverOptions solver;
    unsigned jobs = 1;  // sector diagonalizations are independent
    std::size_t max_dimension = 2'000'000;
};

struct DiagramEntry {
    young::YoungDiagram diagram;
    fock::Sector sector;  // nonascending representative, padded with zeros
    bool feasible = false;
    std::uint64_t dimension = 0;
    double energy = 0.0;
    std::optional<double> gap;
    PositivityVerdict positivity;
    UniquenessVerdict uniqueness;
    MultipletVerdict multiplet;
};

struct OrderingViolation {
    std::string above;  // diagram that dominates
    std::string below;
    double energy_above = 0.0;
    double energy_below = 0.0;
};

/// One row of the all-sector sweep (every composition of M over the flavors).
struct SectorEntry {
    fock::Sector sector;
    std::uint64_t dimension = 0;
    double energy = 0.0;
    std::optional<double> gap;
    bool positive = false;
    bool unique = false;
    bool offdiagonal_nonpositive = false;
    bool connected = false;
    std::size_t count_at_minimum = 0;  // levels within tolerance of global min
};

struct SpectrumReport {
    int num_sites = 0;
    int num_flavors = 0;
    int total_particles = 0;
    bool couplings_warning = false;  // some J_x or K_x is zero

    std::vector<DiagramEntry> diagrams;
    std::vector<SectorEntry> sectors;

    std::size_t comparable_pairs = 0;
    std::vector<OrderingViolation> violations;

    std::optional<young::YoungDiagram> expected_ground;
    std::optional<young::YoungDiagram> observed_ground;
    CheckOutcome ground_diagram_check = CheckOutcome::Fail;

    double global_minimum = 0.0;
    std::uint64_t expected_multiplicity = 0;
    std::size_t observed_multiplicity = 0;
    CheckOutcome multiplicity_check = CheckOutcome::Fail;

    bool offdiagonal_nonpositive = false;  // every sector
    bool connected = false;                // every sector
    double permutation_spread = 0.0;
    bool permutation_ok = false;

    bool all_checks_pass() const;
    std::vector<std::string> failed_checks() const;
};

/// Diagonalizes the nonascending sector of every diagram of `total_particles`
/// boxes plus every weight sector of that particle number, and renders the
/// verdicts on ordering, ground multiplet, positivity, uniqueness, highest
/// weight, structure, and permutation consistency. Solver failures abort with
/// the offending sector named.
SpectrumReport level_ordering_report(const hamiltonian::ChainConfig& config,
                                     int total_particles,
                                     const ReportOptions& opts = {});

struct PermutationVerdict {
    bool pass = false;
    double max_spread = 0.0;
    std::size_t permutations = 0;
};

/// Lowest energies of all distinct rearrangements of the sector counts agree.
PermutationVerdict permuted_sector_consistency(
    const hamiltonian::ChainConfig& config, const fock::Sector& sector,
    const ReportOptions& opts = {});

/// Full verdict set for one explicitly requested sector. The multiplet label
/// is always taken on the nonascending rearrangement of the weights.
struct SectorVerification {
    fock::Sector sector;
    fock::Sector labeled_sector;
    std::uint64_t dimension = 0;
    double energy = 0.0;
    std::optional<double> gap;
    PositivityVerdict positivity;
    UniquenessVerdict uniqueness;
    MultipletVerdict multiplet;
    bool offdiagonal_nonpositive = false;
    bool connected = false;

    bool all_pass() const;
    std::vector<std::string> failed_checks() const;
};

SectorVerification verify_sector(const hamiltonian::ChainConfig& config,
                                 const fock::Sector& sector,
                                 const ReportOptions& opts = {});

}  // namespace suned::spectra
