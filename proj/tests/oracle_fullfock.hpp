// Naive second-quantization oracle on the full 2^(N*L) Fock space, kept
// deliberately independent of the library:
//   - modes are ordered site-major (site outer, flavor inner), the opposite
//     of the library's flavor-major convention;
//   - the Heisenberg bond term is assembled from explicit generalized
//     Gell-Mann generators instead of the exchange rewrite.
// Sector blocks of this Hamiltonian must match the library's matrices after
// conjugating with the per-state relative sign between the two mode orders.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <bit>
#include <complex>
#include <vector>

#include "suned/fock.hpp"
#include "suned/hamiltonian.hpp"

namespace oracles {

class FullFockOracle {
  public:
    using SpMat = Eigen::SparseMatrix<std::complex<double>>;

    FullFockOracle(int num_sites, int num_flavors)
        : L(num_sites), N(num_flavors), n_modes(num_sites * num_flavors),
          dim(std::size_t{1} << n_modes) {
        creators.reserve(static_cast<std::size_t>(n_modes));
        for (int m = 0; m < n_modes; ++m) creators.push_back(creation(m));
        annihilators.reserve(static_cast<std::size_t>(n_modes));
        for (int m = 0; m < n_modes; ++m)
            annihilators.push_back(SpMat(creators[static_cast<std::size_t>(m)]
                                             .adjoint()));
    }

    int mode(int site, int flavor) const {
        return (site - 1) * N + (flavor - 1);
    }

    SpMat hamiltonian(const suned::hamiltonian::ChainConfig& config) const {
        SpMat h(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));

        for (int x = 1; x < L; ++x) {
            const double t = config.hopping[static_cast<std::size_t>(x - 1)];
            for (int a = 1; a <= N; ++a) {
                h += SpMat((-t) * (cr(x + 1, a) * an(x, a) +
                                   cr(x, a) * an(x + 1, a)));
            }
        }

        // Potential, diagonal in the site occupations.
        {
            std::vector<Eigen::Triplet<std::complex<double>>> trip;
            for (std::size_t s = 0; s < dim; ++s) {
                std::vector<int> n(static_cast<std::size_t>(L), 0);
                for (int x = 1; x <= L; ++x)
                    for (int a = 1; a <= N; ++a)
                        if ((s >> mode(x, a)) & 1u)
                            n[static_cast<std::size_t>(x - 1)] += 1;
                const double v = config.potential.evaluate(n);
                if (v != 0.0)
                    trip.emplace_back(static_cast<int>(s), static_cast<int>(s),
                                      v);
            }
            SpMat pot(static_cast<Eigen::Index>(dim),
                      static_cast<Eigen::Index>(dim));
            pot.setFromTriplets(trip.begin(), trip.end());
            h += pot;
        }

        // Heisenberg term from the Schwinger form with explicit generators.
        const auto gens = gell_mann(N);
        for (int x = 1; x < L; ++x) {
            const double J = config.exchange[static_cast<std::size_t>(x - 1)];
            if (J == 0.0) continue;
            for (const auto& gen : gens) {
                const SpMat tx = spin_op(gen, x);
                const SpMat txp = spin_op(gen, x + 1);
                h += SpMat(J * (tx * txp));
            }
        }

        for (int x = 1; x < L; ++x) {
            const double K =
                config.pair_hopping[static_cast<std::size_t>(x - 1)];
            if (K == 0.0) continue;
            for (int a = 2; a <= N; ++a) {
                for (int b = 1; b < a; ++b) {
                    h += SpMat((-K) * (cr(x + 1, a) * cr(x + 1, b) * an(x, b) *
                                           an(x, a) +
                                       cr(x, a) * cr(x, b) * an(x + 1, b) *
                                           an(x + 1, a)));
                }
            }
        }
        return h;
    }

    /// Relative sign between the site-major product order of this oracle and
    /// the library's flavor-major order: parity of the occupied-mode pairs
    /// that the two orders rank oppositely.
    static int relative_sign(const suned::fock::FockState& s) {
        std::vector<std::pair<int, int>> occ;  // (site, flavor)
        for (int x = 1; x <= s.num_sites(); ++x)
            for (int a = 1; a <= s.num_flavors(); ++a)
                if (s.occupied(a, x)) occ.emplace_back(x, a);
        int inversions = 0;
        for (std::size_t i = 0; i < occ.size(); ++i)
            for (std::size_t j = i + 1; j < occ.size(); ++j)
                if (occ[i].first < occ[j].first &&
                    occ[i].second > occ[j].second)
                    ++inversions;
        return inversions % 2 == 0 ? 1 : -1;
    }

    std::size_t pack(const suned::fock::FockState& s) const {
        std::size_t bits = 0;
        for (int x = 1; x <= L; ++x)
            for (int a = 1; a <= N; ++a)
                if (s.occupied(a, x)) bits |= std::size_t{1} << mode(x, a);
        return bits;
    }

    /// Sign-conjugated sector block, comparable entrywise with the library's
    /// sector matrix.
    Eigen::MatrixXd sector_block(const SpMat& h_full,
                                 const suned::fock::SectorBasis& basis) const {
        const Eigen::MatrixXcd dense(h_full);
        const auto n = static_cast<Eigen::Index>(basis.size());
        Eigen::MatrixXd out(n, n);
        std::vector<std::size_t> packed(basis.size());
        std::vector<int> sign(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            packed[i] = pack(basis.states[i]);
            sign[i] = relative_sign(basis.states[i]);
        }
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                const std::complex<double> v =
                    dense(static_cast<Eigen::Index>(packed[i]),
                          static_cast<Eigen::Index>(packed[j]));
                out(static_cast<Eigen::Index>(i),
                    static_cast<Eigen::Index>(j)) = sign[i] * sign[j] * v.real();
                if (std::abs(v.imag()) > 1e-12)
                    throw std::runtime_error("oracle Hamiltonian not real");
            }
        }
        return out;
    }

    /// Generalized Gell-Mann basis of su(N), normalized tr(T^a T^b) = 2 d_ab.
    static std::vector<Eigen::MatrixXcd> gell_mann(int n) {
        using namespace std::complex_literals;
        std::vector<Eigen::MatrixXcd> gens;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
                s(a, b) = 1.0;
                s(b, a) = 1.0;
                gens.push_back(s);
                Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
                t(a, b) = -1.0i;
                t(b, a) = 1.0i;
                gens.push_back(t);
            }
        }
        for (int l = 1; l < n; ++l) {
            Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
            const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
            for (int k = 0; k < l; ++k) d(k, k) = norm;
            d(l, l) = -l * norm;
            gens.push_back(d);
        }
        return gens;
    }

  private:
    const SpMat& cr(int site, int flavor) const {
        return creators[static_cast<std::size_t>(mode(site, flavor))];
    }
    const SpMat& an(int site, int flavor) const {
        return annihilators[static_cast<std::size_t>(mode(site, flavor))];
    }

    SpMat creation(int m) const {
        std::vector<Eigen::Triplet<std::complex<double>>> trip;
        for (std::size_t s = 0; s < dim; ++s) {
            if ((s >> m) & 1u) continue;
            const int below = std::popcount(s & ((std::size_t{1} << m) - 1));
            trip.emplace_back(static_cast<int>(s | (std::size_t{1} << m)),
                              static_cast<int>(s),
                              below % 2 == 0 ? 1.0 : -1.0);
        }
        SpMat out(static_cast<Eigen::Index>(dim),
                  static_cast<Eigen::Index>(dim));
        out.setFromTriplets(trip.begin(), trip.end());
        return out;
    }

    /// T^a_x = sum_{alpha,beta} c+_{x,alpha} T^a_{alpha beta} c_{x,beta}
    SpMat spin_op(const Eigen::MatrixXcd& gen, int site) const {
        SpMat out(static_cast<Eigen::Index>(dim),
                  static_cast<Eigen::Index>(dim));
        for (int a = 1; a <= N; ++a) {
            for (int b = 1; b <= N; ++b) {
                const std::complex<double> coeff = gen(a - 1, b - 1);
                if (coeff == std::complex<double>(0.0)) continue;
                out += SpMat(coeff * (cr(site, a) * an(site, b)));
            }
        }
        return out;
    }

    int L, N, n_modes;
    std::size_t dim;
    std::vector<SpMat> creators, annihilators;
};

}  // namespace oracles
