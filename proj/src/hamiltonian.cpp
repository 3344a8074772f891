#include "suned/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "suned/errors.hpp"

namespace suned::hamiltonian {

PotentialSpec PotentialSpec::hubbard(double u) {
    PotentialSpec p;
    p.kind = Kind::Hubbard;
    p.hubbard_u = u;
    return p;
}

PotentialSpec PotentialSpec::site_diagonal(std::vector<double> values) {
    PotentialSpec p;
    p.kind = Kind::SiteDiagonal;
    p.site_values = std::move(values);
    return p;
}

PotentialSpec PotentialSpec::custom_fn(
    std::function<double(std::span<const int>)> fn) {
    PotentialSpec p;
    p.kind = Kind::Custom;
    p.custom = std::move(fn);
    return p;
}

double PotentialSpec::evaluate(std::span<const int> n) const {
    switch (kind) {
        case Kind::None:
            return 0.0;
        case Kind::Hubbard: {
            double v = 0.0;
            for (int nx : n) v += 0.5 * hubbard_u * nx * nx;
            return v;
        }
        case Kind::SiteDiagonal: {
            double v = 0.0;
            for (std::size_t x = 0; x < n.size(); ++x)
                v += site_values[x] * n[x];
            return v;
        }
        case Kind::Custom:
            return custom(n);
    }
    return 0.0;
}

void ChainConfig::validate() const {
    if (num_sites < 1 || num_sites > fock::kMaxSites)
        throw ConfigError("chain length L=" + std::to_string(num_sites) +
                          " outside 1.." + std::to_string(fock::kMaxSites));
    if (num_flavors < 1 || num_flavors > fock::kMaxFlavors)
        throw ConfigError("flavor count N=" + std::to_string(num_flavors) +
                          " outside 1.." + std::to_string(fock::kMaxFlavors));
    const std::size_t bonds = static_cast<std::size_t>(num_sites - 1);
    if (hopping.size() != bonds)
        throw ConfigError("t has " + std::to_string(hopping.size()) +
                          " entries, expected L-1=" + std::to_string(bonds));
    if (exchange.size() != bonds)
        throw ConfigError("J has " + std::to_string(exchange.size()) +
                          " entries, expected L-1=" + std::to_string(bonds));
    if (pair_hopping.size() != bonds)
        throw ConfigError("K has " + std::to_string(pair_hopping.size()) +
                          " entries, expected L-1=" + std::to_string(bonds));
    for (double t : hopping)
        if (!(t > 0.0) || !std::isfinite(t))
            throw ConfigError("hopping amplitudes t_x must be positive");
    for (double j : exchange)
        if (j < 0.0 || !std::isfinite(j))
            throw ConfigError("exchange couplings J_x must be non-negative");
    for (double k : pair_hopping)
        if (k < 0.0 || !std::isfinite(k))
            throw ConfigError("pair-hopping couplings K_x must be non-negative");
    if (potential.kind == PotentialSpec::Kind::SiteDiagonal &&
        potential.site_values.size() != static_cast<std::size_t>(num_sites))
        throw ConfigError("site-diagonal potential has " +
                          std::to_string(potential.site_values.size()) +
                          " entries, expected L=" + std::to_string(num_sites));
    if (potential.kind == PotentialSpec::Kind::Custom && !potential.custom)
        throw ConfigError("custom potential function is empty");
}

bool ChainConfig::has_degenerate_couplings() const {
    for (double j : exchange)
        if (j == 0.0) return true;
    for (double k : pair_hopping)
        if (k == 0.0) return true;
    return false;
}

SparseSectorMatrix SparseSectorMatrix::from_triples(
    std::size_t dimension,
    const std::vector<std::tuple<std::size_t, std::size_t, double>>& entries) {
    std::vector<std::map<std::size_t, double>> rows(dimension);
    for (const auto& [r, c, v] : entries) {
        if (r >= dimension || c >= dimension)
            throw std::invalid_argument("matrix entry out of range");
        rows[r][c] += v;
    }
    SparseSectorMatrix m;
    m.dim_ = dimension;
    m.row_start_.assign(dimension + 1, 0);
    for (std::size_t r = 0; r < dimension; ++r) {
        m.row_start_[r + 1] = m.row_start_[r] + rows[r].size();
        for (const auto& [c, v] : rows[r]) {
            m.cols_.push_back(static_cast<std::uint32_t>(c));
            m.values_.push_back(v);
        }
    }
    return m;
}

void SparseSectorMatrix::apply(std::span<const double> x,
                               std::span<double> y) const {
    for (std::size_t r = 0; r < dim_; ++r) {
        double acc = 0.0;
        for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k)
            acc += values_[k] * x[cols_[k]];
        y[r] = acc;
    }
}

double SparseSectorMatrix::coeff(std::size_t row, std::size_t col) const {
    const auto begin = cols_.begin() + static_cast<std::ptrdiff_t>(row_start_[row]);
    const auto end = cols_.begin() + static_cast<std::ptrdiff_t>(row_start_[row + 1]);
    const auto it = std::lower_bound(begin, end, static_cast<std::uint32_t>(col));
    if (it == end || *it != col) return 0.0;
    return values_[static_cast<std::size_t>(it - cols_.begin())];
}

void SparseSectorMatrix::for_each_entry(
    const std::function<void(std::size_t, std::size_t, double)>& fn) const {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k)
            fn(r, cols_[k], values_[k]);
}

bool SparseSectorMatrix::is_symmetric() const {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k)
            if (coeff(cols_[k], r) != values_[k]) return false;
    return true;
}

void SparseSectorMatrix::write_matrix_market(std::ostream& os) const {
    os << "%%MatrixMarket matrix coordinate real general\n";
    os << dim_ << ' ' << dim_ << ' ' << values_.size() << '\n';
    char buf[64];
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k) {
            std::snprintf(buf, sizeof buf, "%zu %u %.17g\n", r + 1,
                          cols_[k] + 1, values_[k]);
            os << buf;
        }
    }
}

namespace {

void check_lengths(const ChainConfig& config) {
    const std::size_t bonds =
        config.num_sites >= 1 ? static_cast<std::size_t>(config.num_sites - 1)
                              : 0;
    if (config.num_sites < 1 || config.num_sites > fock::kMaxSites ||
        config.num_flavors < 1 || config.num_flavors > fock::kMaxFlavors)
        throw ConfigError("chain caps exceeded: L=" +
                          std::to_string(config.num_sites) +
                          ", N=" + std::to_string(config.num_flavors));
    if (config.hopping.size() != bonds || config.exchange.size() != bonds ||
        config.pair_hopping.size() != bonds)
        throw ConfigError("coupling arrays must each have L-1 entries");
}

}  // namespace

SparseSectorMatrix build_sector_matrix(const ChainConfig& config,
                                       const fock::SectorBasis& basis,
                                       std::size_t max_dimension) {
    check_lengths(config);
    if (basis.size() > max_dimension)
        throw ConfigError("sector " + basis.sector.to_string() +
                          " has dimension " + std::to_string(basis.size()) +
                          " above the cap " + std::to_string(max_dimension));

    const int L = config.num_sites;
    const int N = config.num_flavors;
    const std::size_t dim = basis.size();

    // Accumulate column by column; row maps keep a deterministic layout and
    // merge duplicate contributions before freezing. Column j of a symmetric
    // matrix is stored as CSR row j.
    std::vector<std::map<std::size_t, double>> cols(dim);

    auto add = [&](std::size_t i, std::size_t j, double v) {
        if (v == 0.0) return;
        cols[j][i] += v;
    };

    for (std::size_t j = 0; j < dim; ++j) {
        const fock::FockState& s = basis.states[j];
        const std::vector<int> n = s.site_occupations();

        double diag = config.potential.evaluate(n);

        for (int x = 1; x < L; ++x) {
            const double t = config.hopping[x - 1];
            const double J = config.exchange[x - 1];
            const double K = config.pair_hopping[x - 1];

            // Exchange remainder, diagonal in the occupations.
            diag += J * (2.0 * n[x - 1] -
                         (2.0 / N) * n[x - 1] * n[x]);

            for (int a = 1; a <= N; ++a) {
                if (auto h = fock::apply_hop(s, a, x, x + 1))
                    add(*basis.find(h->state), j, -t * h->sign);
                if (auto h = fock::apply_hop(s, a, x + 1, x))
                    add(*basis.find(h->state), j, -t * h->sign);
            }

            for (int a = 1; a <= N; ++a) {
                for (int b = 1; b <= N; ++b) {
                    auto e = fock::apply_exchange(s, a, b, x);
                    if (!e) continue;
                    if (a == b)
                        diag += -2.0 * J * e->sign;
                    else
                        add(*basis.find(e->state), j, -2.0 * J * e->sign);
                }
            }

            for (int a = 2; a <= N; ++a) {
                for (int b = 1; b < a; ++b) {
                    if (auto p = fock::apply_pair_hop(s, a, b, x, x + 1))
                        add(*basis.find(p->state), j, -K * p->sign);
                    if (auto p = fock::apply_pair_hop(s, a, b, x + 1, x))
                        add(*basis.find(p->state), j, -K * p->sign);
                }
            }
        }

        add(j, j, diag);
    }

    SparseSectorMatrix m;
    m.dim_ = dim;
    m.row_start_.assign(dim + 1, 0);
    std::size_t nnz = 0;
    for (std::size_t j = 0; j < dim; ++j) nnz += cols[j].size();
    m.cols_.reserve(nnz);
    m.values_.reserve(nnz);
    for (std::size_t j = 0; j < dim; ++j) {
        m.row_start_[j + 1] = m.row_start_[j] + cols[j].size();
        for (const auto& [i, v] : cols[j]) {
            m.cols_.push_back(static_cast<std::uint32_t>(i));
            m.values_.push_back(v);
        }
    }
    return m;
}

SparseSectorMatrix build_sector_matrix(const ChainConfig& config,
                                       const fock::Sector& sector,
                                       std::size_t max_dimension) {
    const auto basis =
        fock::SectorBasis::build(config.num_sites, config.num_flavors, sector);
    return build_sector_matrix(config, basis, max_dimension);
}

bool check_offdiagonal_nonpositive(const SparseSectorMatrix& m) {
    bool ok = true;
    m.for_each_entry([&](std::size_t r, std::size_t c, double v) {
        if (r != c && v > 0.0) ok = false;
    });
    return ok;
}

bool check_connectivity(const SparseSectorMatrix& m) {
    const std::size_t dim = m.dimension();
    if (dim <= 1) return true;
    std::vector<std::vector<std::uint32_t>> adj(dim);
    m.for_each_entry([&](std::size_t r, std::size_t c, double v) {
        if (r != c && v != 0.0) adj[r].push_back(static_cast<std::uint32_t>(c));
    });
    std::vector<char> seen(dim, 0);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t visited = 1;
    while (!q.empty()) {
        const std::size_t r = q.front();
        q.pop();
        for (std::uint32_t c : adj[r]) {
            if (!seen[c]) {
                seen[c] = 1;
                ++visited;
                q.push(c);
            }
        }
    }
    return visited == dim;
}

double RaisingImage::norm() const {
    double s = 0.0;
    for (double a : amplitudes) s += a * a;
    return std::sqrt(s);
}

RaisingImage apply_raising(const fock::SectorBasis& source,
                           std::span<const double> v, int alpha, int beta) {
    if (!(alpha >= 1 && beta <= source.num_flavors && alpha < beta))
        throw std::invalid_argument("raising requires 1 <= alpha < beta <= N");
    fock::Sector target = source.sector;
    target.counts[alpha - 1] += 1;
    target.counts[beta - 1] -= 1;
    RaisingImage out;
    if (target.counts[beta - 1] < 0 ||
        target.counts[alpha - 1] > source.num_sites)
        return out;  // no such sector; the image is identically zero
    const auto target_basis =
        fock::SectorBasis::build(source.num_sites, source.num_flavors, target);
    out.target = target;
    out.amplitudes = apply_raising(source, target_basis, v, alpha, beta);
    return out;
}

std::vector<double> apply_raising(const fock::SectorBasis& source,
                                  const fock::SectorBasis& target,
                                  std::span<const double> v, int alpha,
                                  int beta) {
    if (!(alpha >= 1 && beta <= source.num_flavors && alpha < beta))
        throw std::invalid_argument("raising requires 1 <= alpha < beta <= N");
    if (v.size() != source.size())
        throw std::invalid_argument("vector length does not match the basis");
    fock::Sector expect = source.sector;
    expect.counts[alpha - 1] += 1;
    expect.counts[beta - 1] -= 1;
    if (target.sector != expect)
        throw std::invalid_argument("target basis does not match F^{ab}");

    std::vector<double> out(target.size(), 0.0);
    for (std::size_t j = 0; j < source.size(); ++j) {
        if (v[j] == 0.0) continue;
        const fock::FockState& s = source.states[j];
        for (int x = 1; x <= source.num_sites; ++x) {
            auto a1 = fock::apply_mode_op(s, beta, x, fock::ModeOp::Annihilate);
            if (!a1) continue;
            auto a2 = fock::apply_mode_op(a1->state, alpha, x,
                                          fock::ModeOp::Create);
            if (!a2) continue;
            out[*target.find(a2->state)] += a1->sign * a2->sign * v[j];
        }
    }
    return out;
}

}  // namespace suned::hamiltonian
