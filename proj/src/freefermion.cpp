#include "suned/freefermion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace suned::freefermion {

SingleParticleSpectrum single_particle_energies(const std::vector<double>& t,
                                                int num_sites,
                                                Boundary boundary) {
    if (num_sites < 1)
        throw std::invalid_argument("need at least one site");
    const std::size_t expected =
        boundary == Boundary::Open ? static_cast<std::size_t>(num_sites - 1)
                                   : static_cast<std::size_t>(num_sites);
    if (boundary == Boundary::Periodic && num_sites < 2)
        throw std::invalid_argument("periodic chain needs at least two sites");
    if (t.size() != expected)
        throw std::invalid_argument(
            "expected " + std::to_string(expected) + " couplings, got " +
            std::to_string(t.size()));
    for (double tx : t)
        if (!(tx > 0.0))
            throw std::invalid_argument("hopping amplitudes must be positive");

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(num_sites, num_sites);
    for (int x = 0; x + 1 < num_sites; ++x) {
        h(x, x + 1) += -t[static_cast<std::size_t>(x)];
        h(x + 1, x) += -t[static_cast<std::size_t>(x)];
    }
    if (boundary == Boundary::Periodic) {
        h(num_sites - 1, 0) += -t.back();
        h(0, num_sites - 1) += -t.back();
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        h, Eigen::EigenvaluesOnly);
    SingleParticleSpectrum out;
    out.boundary = boundary;
    out.energies.assign(solver.eigenvalues().data(),
                        solver.eigenvalues().data() + num_sites);
    std::sort(out.energies.begin(), out.energies.end());
    return out;
}

double free_sector_energy(const SingleParticleSpectrum& s,
                          const fock::Sector& sector) {
    const int levels = static_cast<int>(s.energies.size());
    double e = 0.0;
    for (int m : sector.counts) {
        if (m < 0 || m > levels)
            throw std::invalid_argument("sector " + sector.to_string() +
                                        " infeasible for " +
                                        std::to_string(levels) + " levels");
        for (int k = 0; k < m; ++k) e += s.energies[static_cast<std::size_t>(k)];
    }
    return e;
}

SingleParticleSpectrum periodic_dispersion(double t, int num_sites) {
    if (num_sites < 2)
        throw std::invalid_argument("periodic chain needs at least two sites");
    if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
    SingleParticleSpectrum out;
    out.boundary = Boundary::Periodic;
    out.offset = 2.0 * t;
    out.energies.reserve(static_cast<std::size_t>(num_sites));
    for (int k = 1; k <= num_sites; ++k) {
        const double s = std::sin(std::numbers::pi * (k - 1) / num_sites);
        out.energies.push_back(4.0 * t * s * s);
    }
    std::sort(out.energies.begin(), out.energies.end());
    return out;
}

}  // namespace suned::freefermion
