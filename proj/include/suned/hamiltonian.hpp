#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "suned/fock.hpp"

namespace suned::hamiltonian {

/// Diagonal interaction V(n_1..n_L); depends only on the local fermion
/// numbers, its form is otherwise unconstrained.
struct PotentialSpec {
    enum class Kind { None, Hubbard, SiteDiagonal, Custom };

    Kind kind = Kind::None;
    double hubbard_u = 0.0;             // V = U/2 sum_x n_x^2
    std::vector<double> site_values;    // V = sum_x v_x n_x
    std::function<double(std::span<const int>)> custom;

    static PotentialSpec none() { return {}; }
    static PotentialSpec hubbard(double u);
    static PotentialSpec site_diagonal(std::vector<double> values);
    static PotentialSpec custom_fn(
        std::function<double(std::span<const int>)> fn);

    double evaluate(std::span<const int> site_occupations) const;
};

/// Open-chain couplings: L-1 hopping (t), exchange (J) and pair-hopping (K)
/// amplitudes plus the diagonal potential.
struct ChainConfig {
    int num_sites = 0;    // L
    int num_flavors = 0;  // N
    std::vector<double> hopping;       // t_x > 0
    std::vector<double> exchange;      // J_x >= 0 (zero flagged as degenerate)
    std::vector<double> pair_hopping;  // K_x >= 0 (zero flagged as degenerate)
    PotentialSpec potential;

    /// Throws ConfigError on cap violations, wrong array lengths, t <= 0, or
    /// negative J/K. Zero J or K passes with has_degenerate_couplings() set:
    /// the hopping alone keeps sectors connected, so the checks still run.
    void validate() const;
    bool has_degenerate_couplings() const;
};

/// Sector-restricted real symmetric matrix in compressed-row form.
class SparseSectorMatrix {
  public:
    SparseSectorMatrix() = default;

    static SparseSectorMatrix from_triples(
        std::size_t dimension,
        const std::vector<std::tuple<std::size_t, std::size_t, double>>& entries);

    std::size_t dimension() const { return dim_; }
    std::size_t nonzeros() const { return values_.size(); }

    /// y = A x
    void apply(std::span<const double> x, std::span<double> y) const;

    double coeff(std::size_t row, std::size_t col) const;
    void for_each_entry(
        const std::function<void(std::size_t, std::size_t, double)>& fn) const;

    bool is_symmetric() const;  // exact entrywise comparison

    /// MatrixMarket coordinate format (general, 1-based) for external checks.
    void write_matrix_market(std::ostream& os) const;

  private:
    friend SparseSectorMatrix build_sector_matrix(const ChainConfig&,
                                                  const fock::SectorBasis&,
                                                  std::size_t);

    std::size_t dim_ = 0;
    std::vector<std::size_t> row_start_;
    std::vector<std::uint32_t> cols_;
    std::vector<double> values_;
};

/// Assembles H restricted to the sector basis: -t_x per allowed same-flavor
/// hop, -K_x per pair hop, -2 J_x per exchange summand plus the diagonal
/// exchange remainder J_x (2 n_x - (2/N) n_x n_{x+1}), and the potential on
/// the diagonal. Checks array lengths and the dimension cap but not coupling
/// signs, so degenerate or cut chains can be assembled for diagnostics;
/// theorem drivers call ChainConfig::validate() first.
SparseSectorMatrix build_sector_matrix(const ChainConfig& config,
                                       const fock::SectorBasis& basis,
                                       std::size_t max_dimension = 2'000'000);
SparseSectorMatrix build_sector_matrix(const ChainConfig& config,
                                       const fock::Sector& sector,
                                       std::size_t max_dimension = 2'000'000);

/// True iff every off-diagonal stored entry is <= 0 (exact arithmetic).
bool check_offdiagonal_nonpositive(const SparseSectorMatrix& m);

/// True iff the graph with edges at nonzero off-diagonal entries is connected.
bool check_connectivity(const SparseSectorMatrix& m);

/// Image of a sector vector under the flavor-raising generator
/// F^{ab} = sum_x c+_{x,a} c_{x,b} with a < b.
struct RaisingImage {
    /// Target weight (M_a+1, M_b-1); nullopt when that sector does not exist,
    /// in which case the image is identically zero.
    std::optional<fock::Sector> target;
    std::vector<double> amplitudes;  // over the target sector basis

    double norm() const;
};

RaisingImage apply_raising(const fock::SectorBasis& source,
                           std::span<const double> v, int alpha, int beta);

/// Overload with a prebuilt target basis (must match the shifted sector).
std::vector<double> apply_raising(const fock::SectorBasis& source,
                                  const fock::SectorBasis& target,
                                  std::span<const double> v, int alpha,
                                  int beta);

}  // namespace suned::hamiltonian
