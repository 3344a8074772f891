#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace suned::fock {

// N*L <= 126 keeps every mode index inside two machine words.
inline constexpr int kMaxSites = 21;
inline constexpr int kMaxFlavors = 6;

/// Coefficient of a basis state in an expansion (the omega of a ground-state
/// decomposition); plain double, named for readability in interfaces.
using Amplitude = double;

std::uint64_t binomial(int n, int k);

/// Weight of a U(N) sector: fermion count per flavor. The Hamiltonian never
/// mixes different sectors.
struct Sector {
    std::vector<int> counts;

    int num_flavors() const { return static_cast<int>(counts.size()); }
    int total() const;
    int max_count() const;
    /// Chain long enough to hold every flavor: L >= max_alpha M_alpha.
    bool feasible(int num_sites) const;
    bool nonascending() const;
    Sector sorted_descending() const;
    /// prod_alpha C(L, M_alpha); saturates at UINT64_MAX on overflow.
    std::uint64_t dimension(int num_sites) const;
    std::string to_string() const;

    bool operator==(const Sector&) const = default;
    auto operator<=>(const Sector&) const = default;
};

/// Occupation configuration of an N-flavor open chain: one bitmask per flavor,
/// bit x-1 of mask alpha set iff an alpha-flavor fermion sits at site x
/// (sites 1..L, flavors 1..N).
///
/// Every state implicitly stands for the ket built by applying creation
/// operators in flavor-major, site-ascending mode order to the vacuum, with
/// amplitude +1. All fermionic signs returned by the operator functions below
/// are relative to that fixed ordering.
class FockState {
  public:
    FockState() = default;
    FockState(int num_sites, int num_flavors);  // vacuum

    int num_sites() const { return num_sites_; }
    int num_flavors() const { return num_flavors_; }

    std::uint32_t flavor_mask(int flavor) const { return masks_[flavor - 1]; }
    bool occupied(int flavor, int site) const {
        return (masks_[flavor - 1] >> (site - 1)) & 1u;
    }
    void set(int flavor, int site);
    void clear(int flavor, int site);

    int flavor_count(int flavor) const;  // M_alpha
    int site_count(int site) const;      // n_x
    int total_count() const;
    std::vector<int> site_occupations() const;  // n_1..n_L
    Sector sector() const;

    std::string to_string() const;

    bool operator==(const FockState&) const = default;
    // Lexicographic on the mask sequence, flavor 1 most significant.
    auto operator<=>(const FockState&) const = default;

  private:
    std::array<std::uint32_t, kMaxFlavors> masks_{};
    std::uint8_t num_sites_ = 0;
    std::uint8_t num_flavors_ = 0;
};

struct FockStateHash {
    std::size_t operator()(const FockState& s) const noexcept;
};

enum class ModeOp { Create, Annihilate };

struct SignedState {
    FockState state;
    int sign;  // +1 or -1
};

/// Packs sorted per-flavor site lists into a state. The returned state is the
/// amplitude-+1 representative of the corresponding canonically ordered ket.
FockState encode_state(int num_sites, int num_flavors,
                       const std::vector<std::vector<int>>& positions);

/// Elementary creation/annihilation with the fermionic sign picked up by
/// commuting past every occupied mode that precedes (flavor, site) in
/// flavor-major order. Empty result iff Pauli-blocked.
std::optional<SignedState> apply_mode_op(const FockState& s, int flavor,
                                         int site, ModeOp op);

/// Same-flavor nearest-neighbor hop c+_{to}c_{from}. When allowed, the
/// composed sign is always +1 in this basis; returned anyway so callers never
/// assume it.
std::optional<SignedState> apply_hop(const FockState& s, int flavor, int from,
                                     int to);

/// Pair hop c+_{to,a}c+_{to,b}c_{from,b}c_{from,a} with a > b, adjacent sites.
std::optional<SignedState> apply_pair_hop(const FockState& s, int alpha,
                                          int beta, int from, int to);

/// One summand of the exchange form of the Heisenberg bond term:
/// c+_{x,a}c_{x+1,a}c+_{x+1,b}c_{x,b}. For a == b this is diagonal (returns
/// the unchanged state when n_{x,a}(1-n_{x+1,a}) = 1).
std::optional<SignedState> apply_exchange(const FockState& s, int alpha,
                                          int beta, int x);

/// All states of a weight sector in ascending lexicographic mask order.
/// Throws std::invalid_argument when the sector does not fit the chain.
std::vector<FockState> enumerate_sector(int num_sites, int num_flavors,
                                        const Sector& sector);

/// (-1)^p with p the inversion count of a one-fermion-per-site flavor
/// sequence; relates the site-ordered product basis to the canonical one.
int inversion_sign(std::span<const int> flavors);

/// The compact state with flavor alpha occupying sites 1..M_alpha.
FockState trial_state(int num_sites, int num_flavors, const Sector& sector);

/// Materialized sector basis with O(1) state lookup.
struct SectorBasis {
    int num_sites = 0;
    int num_flavors = 0;
    Sector sector;
    std::vector<FockState> states;
    std::unordered_map<FockState, std::size_t, FockStateHash> index;

    static SectorBasis build(int num_sites, int num_flavors,
                             const Sector& sector);

    std::size_t size() const { return states.size(); }
    std::optional<std::size_t> find(const FockState& s) const;
};

}  // namespace suned::fock
