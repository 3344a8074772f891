#include "suned/fock.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace suned::fock {

namespace {

std::uint32_t low_mask(int bits) {
    return bits >= 32 ? ~0u : (1u << bits) - 1u;
}

void check_site(int site, int num_sites) {
    if (site < 1 || site > num_sites)
        throw std::invalid_argument("site " + std::to_string(site) +
                                    " out of range 1.." +
                                    std::to_string(num_sites));
}

void check_flavor(int flavor, int num_flavors) {
    if (flavor < 1 || flavor > num_flavors)
        throw std::invalid_argument("flavor " + std::to_string(flavor) +
                                    " out of range 1.." +
                                    std::to_string(num_flavors));
}

void check_chain(int num_sites, int num_flavors) {
    if (num_sites < 1 || num_sites > kMaxSites)
        throw std::invalid_argument("chain length " +
                                    std::to_string(num_sites) +
                                    " outside 1.." + std::to_string(kMaxSites));
    if (num_flavors < 1 || num_flavors > kMaxFlavors)
        throw std::invalid_argument("flavor count " +
                                    std::to_string(num_flavors) +
                                    " outside 1.." +
                                    std::to_string(kMaxFlavors));
}

// Occupied modes strictly preceding (flavor, site) in flavor-major order.
int preceding_occupied(const FockState& s, int flavor, int site) {
    int count = std::popcount(s.flavor_mask(flavor) & low_mask(site - 1));
    for (int b = 1; b < flavor; ++b) count += s.flavor_count(b);
    return count;
}

// All width-L masks with m bits set, ascending numeric order (Gosper).
std::vector<std::uint32_t> masks_with_popcount(int num_sites, int m) {
    std::vector<std::uint32_t> out;
    if (m == 0) {
        out.push_back(0);
        return out;
    }
    const std::uint32_t limit = 1u << num_sites;
    std::uint32_t v = (1u << m) - 1u;
    while (v < limit) {
        out.push_back(v);
        std::uint32_t t = v | (v - 1u);
        v = (t + 1u) | (((~t & (t + 1u)) - 1u) >> (std::countr_zero(v) + 1));
    }
    return out;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) /
            static_cast<std::uint64_t>(i);
    }
    return r;
}

int Sector::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

int Sector::max_count() const {
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

bool Sector::feasible(int num_sites) const {
    return max_count() <= num_sites &&
           *std::min_element(counts.begin(), counts.end()) >= 0;
}

bool Sector::nonascending() const {
    return std::is_sorted(counts.begin(), counts.end(), std::greater<int>());
}

Sector Sector::sorted_descending() const {
    Sector s = *this;
    std::sort(s.counts.begin(), s.counts.end(), std::greater<int>());
    return s;
}

std::uint64_t Sector::dimension(int num_sites) const {
    std::uint64_t dim = 1;
    for (int m : counts) {
        const std::uint64_t c = binomial(num_sites, m);
        if (c != 0 && dim > UINT64_MAX / c) return UINT64_MAX;
        dim *= c;
    }
    return dim;
}

std::string Sector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(counts[i]);
    }
    return s + ")";
}

FockState::FockState(int num_sites, int num_flavors) {
    check_chain(num_sites, num_flavors);
    num_sites_ = static_cast<std::uint8_t>(num_sites);
    num_flavors_ = static_cast<std::uint8_t>(num_flavors);
}

void FockState::set(int flavor, int site) {
    check_flavor(flavor, num_flavors_);
    check_site(site, num_sites_);
    masks_[flavor - 1] |= 1u << (site - 1);
}

void FockState::clear(int flavor, int site) {
    check_flavor(flavor, num_flavors_);
    check_site(site, num_sites_);
    masks_[flavor - 1] &= ~(1u << (site - 1));
}

int FockState::flavor_count(int flavor) const {
    return std::popcount(masks_[flavor - 1]);
}

int FockState::site_count(int site) const {
    int n = 0;
    const std::uint32_t bit = 1u << (site - 1);
    for (int a = 0; a < num_flavors_; ++a) n += (masks_[a] & bit) ? 1 : 0;
    return n;
}

int FockState::total_count() const {
    int n = 0;
    for (int a = 0; a < num_flavors_; ++a) n += std::popcount(masks_[a]);
    return n;
}

std::vector<int> FockState::site_occupations() const {
    std::vector<int> n(num_sites_, 0);
    for (int a = 0; a < num_flavors_; ++a) {
        std::uint32_t m = masks_[a];
        while (m) {
            n[std::countr_zero(m)] += 1;
            m &= m - 1u;
        }
    }
    return n;
}

Sector FockState::sector() const {
    Sector s;
    s.counts.resize(num_flavors_);
    for (int a = 1; a <= num_flavors_; ++a) s.counts[a - 1] = flavor_count(a);
    return s;
}

std::string FockState::to_string() const {
    std::ostringstream os;
    for (int a = 1; a <= num_flavors_; ++a) {
        os << '{';
        bool first = true;
        for (int x = 1; x <= num_sites_; ++x) {
            if (!occupied(a, x)) continue;
            if (!first) os << ',';
            os << x;
            first = false;
        }
        os << '}';
    }
    return os.str();
}

std::size_t FockStateHash::operator()(const FockState& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the masks
    for (int a = 1; a <= s.num_flavors(); ++a) {
        h ^= s.flavor_mask(a);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

FockState encode_state(int num_sites, int num_flavors,
                       const std::vector<std::vector<int>>& positions) {
    check_chain(num_sites, num_flavors);
    if (static_cast<int>(positions.size()) != num_flavors)
        throw std::invalid_argument(
            "expected one site list per flavor, got " +
            std::to_string(positions.size()));
    FockState s(num_sites, num_flavors);
    for (int a = 1; a <= num_flavors; ++a) {
        int prev = 0;
        for (int x : positions[a - 1]) {
            check_site(x, num_sites);
            if (x <= prev)
                throw std::invalid_argument(
                    "site list for flavor " + std::to_string(a) +
                    " must be strictly increasing");
            s.set(a, x);
            prev = x;
        }
    }
    return s;
}

std::optional<SignedState> apply_mode_op(const FockState& s, int flavor,
                                         int site, ModeOp op) {
    check_flavor(flavor, s.num_flavors());
    check_site(site, s.num_sites());
    const bool occ = s.occupied(flavor, site);
    if (op == ModeOp::Create ? occ : !occ) return std::nullopt;
    const int sign = (preceding_occupied(s, flavor, site) % 2 == 0) ? 1 : -1;
    FockState out = s;
    if (op == ModeOp::Create)
        out.set(flavor, site);
    else
        out.clear(flavor, site);
    return SignedState{out, sign};
}

std::optional<SignedState> apply_hop(const FockState& s, int flavor, int from,
                                     int to) {
    if (std::abs(to - from) != 1)
        throw std::invalid_argument("hop must connect adjacent sites");
    auto a = apply_mode_op(s, flavor, from, ModeOp::Annihilate);
    if (!a) return std::nullopt;
    auto c = apply_mode_op(a->state, flavor, to, ModeOp::Create);
    if (!c) return std::nullopt;
    return SignedState{c->state, a->sign * c->sign};
}

std::optional<SignedState> apply_pair_hop(const FockState& s, int alpha,
                                          int beta, int from, int to) {
    if (alpha <= beta)
        throw std::invalid_argument("pair hop requires alpha > beta");
    if (std::abs(to - from) != 1)
        throw std::invalid_argument("pair hop must connect adjacent sites");
    // c+_{to,a} c+_{to,b} c_{from,b} c_{from,a}, applied right to left.
    auto s1 = apply_mode_op(s, alpha, from, ModeOp::Annihilate);
    if (!s1) return std::nullopt;
    auto s2 = apply_mode_op(s1->state, beta, from, ModeOp::Annihilate);
    if (!s2) return std::nullopt;
    auto s3 = apply_mode_op(s2->state, beta, to, ModeOp::Create);
    if (!s3) return std::nullopt;
    auto s4 = apply_mode_op(s3->state, alpha, to, ModeOp::Create);
    if (!s4) return std::nullopt;
    return SignedState{s4->state, s1->sign * s2->sign * s3->sign * s4->sign};
}

std::optional<SignedState> apply_exchange(const FockState& s, int alpha,
                                          int beta, int x) {
    check_site(x + 1, s.num_sites());
    // c+_{x,a} c_{x+1,a} c+_{x+1,b} c_{x,b}, applied right to left.
    auto s1 = apply_mode_op(s, beta, x, ModeOp::Annihilate);
    if (!s1) return std::nullopt;
    auto s2 = apply_mode_op(s1->state, beta, x + 1, ModeOp::Create);
    if (!s2) return std::nullopt;
    auto s3 = apply_mode_op(s2->state, alpha, x + 1, ModeOp::Annihilate);
    if (!s3) return std::nullopt;
    auto s4 = apply_mode_op(s3->state, alpha, x, ModeOp::Create);
    if (!s4) return std::nullopt;
    return SignedState{s4->state, s1->sign * s2->sign * s3->sign * s4->sign};
}

std::vector<FockState> enumerate_sector(int num_sites, int num_flavors,
                                        const Sector& sector) {
    check_chain(num_sites, num_flavors);
    if (sector.num_flavors() != num_flavors)
        throw std::invalid_argument("sector has " +
                                    std::to_string(sector.num_flavors()) +
                                    " counts, chain has " +
                                    std::to_string(num_flavors) + " flavors");
    for (int m : sector.counts) {
        if (m < 0 || m > num_sites)
            throw std::invalid_argument("sector " + sector.to_string() +
                                        " infeasible for L=" +
                                        std::to_string(num_sites));
    }

    std::vector<std::vector<std::uint32_t>> per_flavor;
    per_flavor.reserve(num_flavors);
    for (int a = 0; a < num_flavors; ++a)
        per_flavor.push_back(masks_with_popcount(num_sites, sector.counts[a]));

    std::vector<FockState> out;
    out.reserve(static_cast<std::size_t>(sector.dimension(num_sites)));
    std::vector<std::size_t> idx(num_flavors, 0);
    while (true) {
        FockState s(num_sites, num_flavors);
        for (int a = 0; a < num_flavors; ++a) {
            std::uint32_t m = per_flavor[a][idx[a]];
            while (m) {
                s.set(a + 1, std::countr_zero(m) + 1);
                m &= m - 1u;
            }
        }
        out.push_back(s);
        // Odometer with the last flavor fastest: ascending lexicographic order.
        int a = num_flavors - 1;
        while (a >= 0) {
            if (++idx[a] < per_flavor[a].size()) break;
            idx[a] = 0;
            --a;
        }
        if (a < 0) break;
    }
    return out;
}

int inversion_sign(std::span<const int> flavors) {
    int inversions = 0;
    for (std::size_t i = 0; i < flavors.size(); ++i)
        for (std::size_t j = i + 1; j < flavors.size(); ++j)
            if (flavors[i] > flavors[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

FockState trial_state(int num_sites, int num_flavors, const Sector& sector) {
    check_chain(num_sites, num_flavors);
    if (sector.num_flavors() != num_flavors)
        throw std::invalid_argument("sector/chain flavor count mismatch");
    if (!sector.feasible(num_sites))
        throw std::invalid_argument("sector " + sector.to_string() +
                                    " infeasible for L=" +
                                    std::to_string(num_sites));
    FockState s(num_sites, num_flavors);
    for (int a = 1; a <= num_flavors; ++a)
        for (int x = 1; x <= sector.counts[a - 1]; ++x) s.set(a, x);
    return s;
}

SectorBasis SectorBasis::build(int num_sites, int num_flavors,
                               const Sector& sector) {
    SectorBasis b;
    b.num_sites = num_sites;
    b.num_flavors = num_flavors;
    b.sector = sector;
    b.states = enumerate_sector(num_sites, num_flavors, sector);
    b.index.reserve(b.states.size() * 2);
    for (std::size_t i = 0; i < b.states.size(); ++i) b.index.emplace(b.states[i], i);
    return b;
}

std::optional<std::size_t> SectorBasis::find(const FockState& s) const {
    auto it = index.find(s);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

}  // namespace suned::fock
