#pragma once

#include <vector>

#include "suned/fock.hpp"

namespace suned::freefermion {

enum class Boundary { Open, Periodic };

/// Single-particle levels of the hopping matrix, ascending. `offset` is the
/// additive shift the stored energies carry relative to the raw matrix
/// spectrum (zero except for the shifted periodic dispersion convention).
struct SingleParticleSpectrum {
    std::vector<double> energies;
    Boundary boundary = Boundary::Open;
    double offset = 0.0;
};

/// Eigenvalues of the L x L matrix with entries -t_x on the chain bonds
/// (tridiagonal when open, circulant-bordered when periodic). Open chains
/// take L-1 couplings, periodic chains L.
SingleParticleSpectrum single_particle_energies(const std::vector<double>& t,
                                                int num_sites,
                                                Boundary boundary);

/// Ground energy of the sector in the noninteracting limit: each flavor fills
/// its M_alpha lowest levels independently.
double free_sector_energy(const SingleParticleSpectrum& s,
                          const fock::Sector& sector);

/// Uniform-coupling periodic levels 4 t sin^2(pi (k-1)/L), k = 1..L, sorted.
/// These sit +2t above the raw -2t cos spectrum; the shift is recorded in
/// `offset` so both conventions stay reproducible.
SingleParticleSpectrum periodic_dispersion(double t, int num_sites);

}  // namespace suned::freefermion
