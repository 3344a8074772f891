#include "suned/selftest.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <tuple>

#include "suned/freefermion.hpp"
#include "suned/hamiltonian.hpp"
#include "suned/report.hpp"
#include "suned/spectra.hpp"
#include "suned/young.hpp"

namespace suned::cli {

namespace {

using fock::Sector;
using hamiltonian::ChainConfig;

struct Harness {
    std::ostream& log;
    SelftestResult result;

    void check(const std::string& name, bool ok,
               const std::string& detail = "") {
        if (ok) {
            result.checks_passed += 1;
            log << "[pass] " << name << '\n';
        } else {
            result.failures.push_back(name + (detail.empty() ? "" : ": " + detail));
            log << "[FAIL] " << name << (detail.empty() ? "" : ": " + detail)
                << '\n';
        }
    }
};

std::vector<Sector> sectors_up_to(int num_sites, int num_flavors) {
    std::vector<Sector> out;
    std::vector<int> counts(static_cast<std::size_t>(num_flavors), 0);
    while (true) {
        out.push_back(Sector{counts});
        int a = num_flavors - 1;
        while (a >= 0) {
            if (++counts[static_cast<std::size_t>(a)] <= num_sites) break;
            counts[static_cast<std::size_t>(a)] = 0;
            --a;
        }
        if (a < 0) break;
    }
    return out;
}

ChainConfig random_chain(int num_sites, int num_flavors, std::mt19937_64& rng,
                         double lo = 0.5, double hi = 1.5) {
    std::uniform_real_distribution<double> dist(lo, hi);
    ChainConfig c;
    c.num_sites = num_sites;
    c.num_flavors = num_flavors;
    for (int x = 1; x < num_sites; ++x) c.hopping.push_back(dist(rng));
    for (int x = 1; x < num_sites; ++x) c.exchange.push_back(dist(rng));
    for (int x = 1; x < num_sites; ++x) c.pair_hopping.push_back(dist(rng));
    c.potential = hamiltonian::PotentialSpec::hubbard(dist(rng));
    return c;
}

void check_sign_absorption(Harness& h) {
    bool ok = true;
    for (int N = 1; N <= 3 && ok; ++N) {
        for (int L = 2; L <= 4 && ok; ++L) {
            for (const auto& sector : sectors_up_to(L, N)) {
                for (const auto& s : fock::enumerate_sector(L, N, sector)) {
                    for (int x = 1; x < L && ok; ++x) {
                        for (int a = 1; a <= N; ++a) {
                            if (auto r = fock::apply_hop(s, a, x, x + 1))
                                ok &= r->sign == 1;
                            if (auto r = fock::apply_hop(s, a, x + 1, x))
                                ok &= r->sign == 1;
                            for (int b = 1; b < a; ++b) {
                                if (auto r = fock::apply_pair_hop(s, a, b, x, x + 1))
                                    ok &= r->sign == 1;
                                if (auto r = fock::apply_pair_hop(s, a, b, x + 1, x))
                                    ok &= r->sign == 1;
                            }
                            for (int b = 1; b <= N; ++b)
                                if (auto r = fock::apply_exchange(s, a, b, x))
                                    ok &= r->sign == 1;
                        }
                    }
                    if (!ok) break;
                }
                if (!ok) break;
            }
        }
    }
    h.check("fock/sign-absorption", ok);
}

void check_ising_consistency(Harness& h) {
    bool ok = true;
    for (int N = 1; N <= 3 && ok; ++N) {
        for (int L = 1; L <= 5 && ok; ++L) {
            std::vector<int> seq(static_cast<std::size_t>(L), 1);
            while (true) {
                // Site-ordered creation product, applied right to left.
                fock::FockState s(L, N);
                int sign = 1;
                for (int x = L; x >= 1; --x) {
                    auto r = fock::apply_mode_op(
                        s, seq[static_cast<std::size_t>(x - 1)], x,
                        fock::ModeOp::Create);
                    sign *= r->sign;
                    s = r->state;
                }
                if (sign != fock::inversion_sign(seq)) {
                    ok = false;
                    break;
                }
                int x = L - 1;
                while (x >= 0) {
                    if (++seq[static_cast<std::size_t>(x)] <= N) break;
                    seq[static_cast<std::size_t>(x)] = 1;
                    --x;
                }
                if (x < 0) break;
            }
        }
    }
    h.check("fock/ising-consistency", ok);
}

void check_sector_counts(Harness& h) {
    bool ok = true;
    for (int N = 1; N <= 3 && ok; ++N) {
        for (int L = 1; L <= 6 && ok; ++L) {
            for (const auto& sector : sectors_up_to(L, N)) {
                const auto states = fock::enumerate_sector(L, N, sector);
                if (states.size() != sector.dimension(L)) ok = false;
                for (std::size_t i = 1; i < states.size(); ++i)
                    if (!(states[i - 1] < states[i])) ok = false;
                if (!ok) break;
            }
        }
    }
    h.check("fock/sector-enumeration", ok);
}

void check_mode_roundtrip(Harness& h) {
    bool ok = true;
    const int L = 4, N = 3;
    for (const auto& sector : sectors_up_to(L, N)) {
        for (const auto& s : fock::enumerate_sector(L, N, sector)) {
            for (int a = 1; a <= N; ++a) {
                for (int x = 1; x <= L; ++x) {
                    const auto op = s.occupied(a, x) ? fock::ModeOp::Annihilate
                                                     : fock::ModeOp::Create;
                    const auto inverse = s.occupied(a, x)
                                             ? fock::ModeOp::Create
                                             : fock::ModeOp::Annihilate;
                    auto r1 = fock::apply_mode_op(s, a, x, op);
                    auto r2 = fock::apply_mode_op(r1->state, a, x, inverse);
                    if (!(r2->state == s && r1->sign * r2->sign == 1))
                        ok = false;
                }
            }
        }
        if (!ok) break;
    }
    h.check("fock/mode-roundtrip", ok);
}

void check_young(Harness& h) {
    using young::DominanceRelation;
    using young::YoungDiagram;

    bool order_ok = true;
    for (int M = 1; M <= 8; ++M) {
        const auto ds = young::enumerate_diagrams(M, 4);
        for (const auto& a : ds) {
            for (const auto& b : ds) {
                const auto ab = young::dominates(a, b);
                const auto ba = young::dominates(b, a);
                if (a == b && ab != DominanceRelation::Equal) order_ok = false;
                if (ab == DominanceRelation::StrictlyAbove &&
                    ba != DominanceRelation::StrictlyBelow)
                    order_ok = false;
                for (const auto& c : ds) {
                    if (young::dominates(a, b) == DominanceRelation::StrictlyAbove &&
                        young::dominates(b, c) == DominanceRelation::StrictlyAbove &&
                        young::dominates(a, c) != DominanceRelation::StrictlyAbove)
                        order_ok = false;
                }
            }
        }
    }
    h.check("young/dominance-order", order_ok);

    bool conj_ok = true;
    for (int M = 1; M <= 8; ++M) {
        const auto ds = young::enumerate_diagrams(M, M);
        for (const auto& a : ds) {
            if (!(young::conjugate(young::conjugate(a)) == a)) conj_ok = false;
            for (const auto& b : ds) {
                const auto rel = young::dominates(a, b);
                const auto conj_rel =
                    young::dominates(young::conjugate(a), young::conjugate(b));
                const auto expect =
                    rel == DominanceRelation::StrictlyAbove
                        ? DominanceRelation::StrictlyBelow
                    : rel == DominanceRelation::StrictlyBelow
                        ? DominanceRelation::StrictlyAbove
                        : rel;
                if (conj_rel != expect) conj_ok = false;
            }
        }
    }
    h.check("young/conjugation-inverts-order", conj_ok);

    bool dim_ok = true;
    for (int N = 1; N <= 5; ++N)
        for (int k = 1; k <= N; ++k)
            if (young::irrep_dimension(
                    YoungDiagram(std::vector<int>(k, 1)), N) !=
                fock::binomial(N, k))
                dim_ok = false;
    if (young::irrep_dimension(YoungDiagram({2, 1}), 3) != 8) dim_ok = false;
    h.check("young/antisymmetric-dimension", dim_ok);

    bool gs_ok = true;
    for (int N = 2; N <= 4; ++N) {
        for (int M = 1; M <= 8; ++M) {
            const auto gs = young::ground_diagram(M, N);
            for (const auto& d : young::enumerate_diagrams(M, N))
                if (!(d == gs) &&
                    young::dominates(d, gs) != DominanceRelation::StrictlyAbove)
                    gs_ok = false;
        }
    }
    h.check("young/ground-diagram-minimal", gs_ok);
}

void check_structure(Harness& h, const SelftestOptions& opts,
                     std::mt19937_64& rng) {
    bool symmetric = true, nonpositive = true, connected = true;
    for (int N = 2; N <= 3; ++N) {
        for (int L = 2; L <= 4; ++L) {
            const auto config = random_chain(L, N, rng);
            for (const auto& sector : sectors_up_to(L, N)) {
                if (sector.total() == 0) continue;
                auto matrix = hamiltonian::build_sector_matrix(config, sector);
                if (opts.corrupt_sign) {
                    std::vector<std::tuple<std::size_t, std::size_t, double>>
                        triples;
                    bool flipped = false;
                    matrix.for_each_entry([&](std::size_t r, std::size_t c,
                                              double v) {
                        if (!flipped && r < c) {
                            triples.emplace_back(r, c, -v);
                            triples.emplace_back(c, r, -v);
                            flipped = true;
                        } else if (r <= c) {
                            triples.emplace_back(r, c, v);
                            if (r < c) triples.emplace_back(c, r, v);
                        }
                    });
                    matrix = hamiltonian::SparseSectorMatrix::from_triples(
                        matrix.dimension(), triples);
                }
                symmetric &= matrix.is_symmetric();
                nonpositive &= hamiltonian::check_offdiagonal_nonpositive(matrix);
                connected &= hamiltonian::check_connectivity(matrix);
            }
        }
    }
    h.check("hamiltonian/symmetric", symmetric);
    h.check("hamiltonian/offdiagonal-nonpositive", nonpositive);
    h.check("hamiltonian/connectivity", connected);
}

void check_commutant(Harness& h, std::mt19937_64& rng) {
    const int L = 4, N = 3;
    const auto config = random_chain(L, N, rng);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    bool ok = true;
    for (const Sector source : {Sector{{1, 2, 1}}, Sector{{2, 1, 1}},
                                Sector{{0, 1, 2}}}) {
        const auto source_basis = fock::SectorBasis::build(L, N, source);
        const auto h_source =
            hamiltonian::build_sector_matrix(config, source_basis);
        std::vector<double> v(source_basis.size());
        for (auto& c : v) c = dist(rng);
        for (int a = 1; a <= N; ++a) {
            for (int b = a + 1; b <= N; ++b) {
                Sector target = source;
                target.counts[a - 1] += 1;
                target.counts[b - 1] -= 1;
                if (target.counts[b - 1] < 0 || target.counts[a - 1] > L)
                    continue;
                const auto target_basis = fock::SectorBasis::build(L, N, target);
                const auto h_target =
                    hamiltonian::build_sector_matrix(config, target_basis);
                std::vector<double> hv(source_basis.size());
                h_source.apply(v, hv);
                const auto f_hv =
                    hamiltonian::apply_raising(source_basis, target_basis, hv,
                                               a, b);
                const auto f_v = hamiltonian::apply_raising(
                    source_basis, target_basis, v, a, b);
                std::vector<double> h_fv(target_basis.size());
                h_target.apply(f_v, h_fv);
                for (std::size_t i = 0; i < h_fv.size(); ++i)
                    if (std::abs(h_fv[i] - f_hv[i]) > 1e-10) ok = false;
            }
        }
    }
    h.check("hamiltonian/raising-commutes", ok);
}

void check_permutation_spectra(Harness& h, std::mt19937_64& rng) {
    const int L = 3, N = 3;
    const auto config = random_chain(L, N, rng);
    spectra::SolverOptions exact;
    exact.dense_cutoff = 100000;
    bool ok = true;
    const Sector base{{2, 1, 0}};
    std::vector<double> reference;
    std::vector<int> counts = base.counts;
    std::sort(counts.begin(), counts.end());
    do {
        const auto matrix =
            hamiltonian::build_sector_matrix(config, Sector{counts});
        const auto eig =
            spectra::lowest_eigenpairs(matrix, matrix.dimension(), exact);
        std::vector<double> values;
        for (const auto& e : eig) values.push_back(e.energy);
        if (reference.empty())
            reference = values;
        else
            for (std::size_t i = 0; i < values.size(); ++i)
                if (std::abs(values[i] - reference[i]) > 1e-10) ok = false;
    } while (std::next_permutation(counts.begin(), counts.end()));
    h.check("hamiltonian/permutation-spectra", ok);
}

void check_theorems(Harness& h, const SelftestOptions& opts,
                    std::mt19937_64& rng) {
    spectra::ReportOptions ropts;
    ropts.jobs = opts.jobs;
    bool ordering = true, ground = true, pf = true, hw = true;
    const std::vector<std::pair<int, int>> grid = {{2, 4}, {3, 3}};
    for (const auto& [N, L] : grid) {
        const auto config = random_chain(L, N, rng);
        for (int M = 1; M <= N * L; ++M) {
            const auto report = spectra::level_ordering_report(config, M, ropts);
            ordering &= report.violations.empty();
            ground &=
                report.ground_diagram_check == spectra::CheckOutcome::Pass &&
                report.multiplicity_check == spectra::CheckOutcome::Pass;
            for (const auto& s : report.sectors) pf &= s.positive && s.unique;
            for (const auto& d : report.diagrams)
                if (d.feasible) hw &= d.multiplet.pass;
        }
    }
    h.check("spectra/level-ordering", ordering);
    h.check("spectra/ground-multiplet", ground);
    h.check("spectra/perron-frobenius", pf);
    h.check("spectra/highest-weight", hw);
}

void check_freefermion(Harness& h, std::mt19937_64& rng) {
    bool agree = true;
    spectra::SolverOptions solver;
    for (int N = 1; N <= 3; ++N) {
        for (int L = 2; L <= 4; ++L) {
            std::uniform_real_distribution<double> dist(0.5, 1.5);
            ChainConfig config;
            config.num_sites = L;
            config.num_flavors = N;
            for (int x = 1; x < L; ++x) config.hopping.push_back(dist(rng));
            config.exchange.assign(static_cast<std::size_t>(L - 1), 0.0);
            config.pair_hopping.assign(static_cast<std::size_t>(L - 1), 0.0);
            const auto spectrum = freefermion::single_particle_energies(
                config.hopping, L, freefermion::Boundary::Open);
            for (const auto& sector : sectors_up_to(L, N)) {
                if (sector.total() == 0) continue;
                const auto matrix =
                    hamiltonian::build_sector_matrix(config, sector);
                const auto eig = spectra::lowest_eigenpairs(matrix, 1, solver);
                const double free_energy =
                    freefermion::free_sector_energy(spectrum, sector);
                if (std::abs(eig[0].energy - free_energy) > 1e-10)
                    agree = false;
            }
        }
    }
    h.check("freefermion/filled-levels-agreement", agree);

    bool formula = true;
    for (int L = 2; L <= 10; ++L) {
        const double t = 0.75;
        const auto matrix_spectrum = freefermion::single_particle_energies(
            std::vector<double>(static_cast<std::size_t>(L), t), L,
            freefermion::Boundary::Periodic);
        const auto formula_spectrum = freefermion::periodic_dispersion(t, L);
        for (int k = 0; k < L; ++k) {
            const double shifted =
                matrix_spectrum.energies[static_cast<std::size_t>(k)] +
                formula_spectrum.offset;
            if (std::abs(shifted -
                         formula_spectrum.energies[static_cast<std::size_t>(k)]) >
                1e-12)
                formula = false;
        }
    }
    h.check("freefermion/periodic-dispersion", formula);
}

void check_report_determinism(Harness& h, const SelftestOptions& opts) {
    std::mt19937_64 rng_a(opts.seed + 17);
    std::mt19937_64 rng_b(opts.seed + 17);
    spectra::ReportOptions ropts;
    ropts.jobs = opts.jobs;
    const auto config_a = random_chain(4, 2, rng_a);
    const auto config_b = random_chain(4, 2, rng_b);
    const auto a = spectra::to_json(
        spectra::level_ordering_report(config_a, 4, ropts));
    const auto b = spectra::to_json(
        spectra::level_ordering_report(config_b, 4, ropts));
    h.check("report/determinism", a.dump() == b.dump());
}

}  // namespace

SelftestResult run_selftest_suite(const SelftestOptions& opts,
                                  std::ostream& log) {
    Harness h{log, {}};
    std::mt19937_64 rng(opts.seed);

    check_sign_absorption(h);
    check_ising_consistency(h);
    check_sector_counts(h);
    check_mode_roundtrip(h);
    check_young(h);
    check_structure(h, opts, rng);
    check_commutant(h, rng);
    check_permutation_spectra(h, rng);
    check_theorems(h, opts, rng);
    check_freefermion(h, rng);
    check_report_determinism(h, opts);

    return h.result;
}

}  // namespace suned::cli
