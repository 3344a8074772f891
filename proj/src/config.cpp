#include "suned/config.hpp"

#include <algorithm>
#include <fstream>

#include "suned/errors.hpp"

namespace suned::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ConfigError("config field '" + field + "': " + what);
}

void reject_unknown(const json& j, const std::string& context,
                    std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : j.items()) {
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) {
                return key == a;
            }) == allowed.end())
            fail(context.empty() ? key : context + "." + key, "unknown field");
    }
}

const json& require(const json& j, const std::string& context,
                    const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        fail(context.empty() ? key : context + "." + key, "missing");
    return *it;
}

int get_int(const json& j, const std::string& field) {
    if (!j.is_number_integer()) fail(field, "expected an integer");
    return j.get<int>();
}

double get_double(const json& j, const std::string& field) {
    if (!j.is_number()) fail(field, "expected a number");
    return j.get<double>();
}

std::vector<double> get_double_array(const json& j, const std::string& field) {
    if (!j.is_array()) fail(field, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) fail(field, "expected an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

hamiltonian::PotentialSpec parse_potential(const json& j) {
    if (!j.is_object()) fail("chain.potential", "expected an object");
    const std::string kind = require(j, "chain.potential", "kind")
                                 .get<std::string>();
    if (kind == "none") {
        reject_unknown(j, "chain.potential", {"kind"});
        return hamiltonian::PotentialSpec::none();
    }
    if (kind == "hubbard") {
        reject_unknown(j, "chain.potential", {"kind", "U"});
        return hamiltonian::PotentialSpec::hubbard(
            get_double(require(j, "chain.potential", "U"),
                       "chain.potential.U"));
    }
    if (kind == "site-diagonal") {
        reject_unknown(j, "chain.potential", {"kind", "values"});
        return hamiltonian::PotentialSpec::site_diagonal(get_double_array(
            require(j, "chain.potential", "values"),
            "chain.potential.values"));
    }
    fail("chain.potential.kind",
         "expected one of none, hubbard, site-diagonal");
}

CouplingSpec parse_couplings(const json& j, int num_sites) {
    if (!j.is_object()) fail("couplings", "expected an object");
    CouplingSpec c;
    const bool has_fixed = j.contains("t") || j.contains("J") || j.contains("K");
    const bool has_dist = j.contains("distribution");
    if (has_fixed == has_dist)
        fail("couplings",
             "give exactly one of fixed arrays (t, J, K) or a distribution");
    if (has_fixed) {
        reject_unknown(j, "couplings", {"t", "J", "K"});
        c.is_distribution = false;
        c.t = get_double_array(require(j, "couplings", "t"), "couplings.t");
        c.J = get_double_array(require(j, "couplings", "J"), "couplings.J");
        c.K = get_double_array(require(j, "couplings", "K"), "couplings.K");
        (void)num_sites;  // lengths checked by ChainConfig::validate
        return c;
    }
    reject_unknown(j, "couplings",
                   {"distribution", "low", "high", "seed", "draws"});
    const std::string dist = j.at("distribution").get<std::string>();
    if (dist != "uniform")
        fail("couplings.distribution", "only 'uniform' is supported");
    c.is_distribution = true;
    if (!j.contains("seed"))
        fail("couplings.seed", "mandatory when a distribution is used");
    if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
        fail("couplings.seed", "expected an integer");
    c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("low")) c.low = get_double(j.at("low"), "couplings.low");
    if (j.contains("high")) c.high = get_double(j.at("high"), "couplings.high");
    if (j.contains("draws"))
        c.draws = get_int(j.at("draws"), "couplings.draws");
    return c;
}

void parse_tolerances(const json& j, spectra::Tolerances& tol,
                      spectra::SolverOptions& solver) {
    reject_unknown(j, "tolerances",
                   {"degeneracy", "positivity_floor", "trial_overlap",
                    "raising_norm", "ordering_margin", "permutation_agreement",
                    "solver_residual"});
    if (j.contains("degeneracy"))
        tol.degeneracy = get_double(j.at("degeneracy"), "tolerances.degeneracy");
    if (j.contains("positivity_floor"))
        tol.positivity_floor =
            get_double(j.at("positivity_floor"), "tolerances.positivity_floor");
    if (j.contains("trial_overlap"))
        tol.trial_overlap =
            get_double(j.at("trial_overlap"), "tolerances.trial_overlap");
    if (j.contains("raising_norm"))
        tol.raising_norm =
            get_double(j.at("raising_norm"), "tolerances.raising_norm");
    if (j.contains("ordering_margin"))
        tol.ordering_margin =
            get_double(j.at("ordering_margin"), "tolerances.ordering_margin");
    if (j.contains("permutation_agreement"))
        tol.permutation_agreement = get_double(
            j.at("permutation_agreement"), "tolerances.permutation_agreement");
    if (j.contains("solver_residual"))
        solver.residual_tol =
            get_double(j.at("solver_residual"), "tolerances.solver_residual");
}

void parse_solver(const json& j, spectra::SolverOptions& solver) {
    reject_unknown(j, "solver", {"dense_cutoff", "max_iterations"});
    if (j.contains("dense_cutoff")) {
        const int v = get_int(j.at("dense_cutoff"), "solver.dense_cutoff");
        if (v < 1) fail("solver.dense_cutoff", "must be at least 1");
        solver.dense_cutoff = static_cast<std::size_t>(v);
    }
    if (j.contains("max_iterations")) {
        const int v = get_int(j.at("max_iterations"), "solver.max_iterations");
        if (v < 1) fail("solver.max_iterations", "must be at least 1");
        solver.max_iterations = static_cast<std::size_t>(v);
    }
}

OutputOptions parse_outputs(const json& j) {
    reject_unknown(j, "outputs", {"dir", "format"});
    OutputOptions o;
    if (j.contains("dir")) o.out_dir = j.at("dir").get<std::string>();
    if (j.contains("format")) {
        const std::string f = j.at("format").get<std::string>();
        if (f == "json")
            o.format = OutputFormat::Json;
        else if (f == "csv")
            o.format = OutputFormat::Csv;
        else if (f == "both")
            o.format = OutputFormat::Both;
        else
            fail("outputs.format", "expected json, csv, or both");
    }
    return o;
}

}  // namespace

ExperimentConfig parse_experiment_config(const json& j) {
    if (!j.is_object()) throw ConfigError("config root must be an object");
    reject_unknown(j, "",
                   {"chain", "particles", "couplings", "tolerances", "solver",
                    "outputs", "jobs"});
    ExperimentConfig cfg;

    const json& chain = require(j, "", "chain");
    reject_unknown(chain, "chain", {"L", "N", "potential"});
    cfg.num_sites = get_int(require(chain, "chain", "L"), "chain.L");
    cfg.num_flavors = get_int(require(chain, "chain", "N"), "chain.N");
    if (chain.contains("potential"))
        cfg.potential = parse_potential(chain.at("potential"));

    const json& particles = require(j, "", "particles");
    reject_unknown(particles, "particles", {"total", "sectors"});
    const bool has_total = particles.contains("total");
    const bool has_sectors = particles.contains("sectors");
    if (has_total == has_sectors)
        fail("particles", "give exactly one of total or sectors");
    if (has_total)
        cfg.total_particles =
            get_int(particles.at("total"), "particles.total");
    else {
        const json& secs = particles.at("sectors");
        if (!secs.is_array() || secs.empty())
            fail("particles.sectors", "expected a non-empty array");
        for (const auto& s : secs) {
            if (!s.is_array()) fail("particles.sectors", "expected arrays");
            fock::Sector sector;
            for (const auto& v : s)
                sector.counts.push_back(get_int(v, "particles.sectors"));
            cfg.sectors.push_back(std::move(sector));
        }
    }

    cfg.couplings = parse_couplings(require(j, "", "couplings"), cfg.num_sites);
    if (j.contains("tolerances"))
        parse_tolerances(j.at("tolerances"), cfg.tolerances, cfg.solver);
    if (j.contains("solver")) parse_solver(j.at("solver"), cfg.solver);
    if (j.contains("outputs")) cfg.outputs = parse_outputs(j.at("outputs"));
    if (j.contains("jobs")) {
        const int v = get_int(j.at("jobs"), "jobs");
        if (v < 0) fail("jobs", "must be non-negative");
        cfg.jobs = static_cast<unsigned>(v);
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
    return parse_experiment_config(j);
}

void ExperimentConfig::validate() const {
    // Build a chain with representative couplings; its validation covers the
    // caps, array lengths, and sign requirements.
    hamiltonian::ChainConfig chain;
    chain.num_sites = num_sites;
    chain.num_flavors = num_flavors;
    chain.potential = potential;
    if (couplings.is_distribution) {
        if (!(couplings.low > 0.0) || !(couplings.high >= couplings.low))
            fail("couplings", "distribution needs 0 < low <= high");
        if (couplings.draws < 1) fail("couplings.draws", "must be at least 1");
        const std::size_t bonds =
            num_sites >= 1 ? static_cast<std::size_t>(num_sites - 1) : 0;
        chain.hopping.assign(bonds, couplings.low);
        chain.exchange.assign(bonds, couplings.low);
        chain.pair_hopping.assign(bonds, couplings.low);
    } else {
        chain.hopping = couplings.t;
        chain.exchange = couplings.J;
        chain.pair_hopping = couplings.K;
    }
    chain.validate();

    if (total_particles) {
        if (*total_particles < 1 || *total_particles > num_sites * num_flavors)
            fail("particles.total",
                 "must lie in 1..N*L = 1.." +
                     std::to_string(num_sites * num_flavors));
    }
    for (const auto& s : sectors) {
        if (s.num_flavors() != num_flavors)
            fail("particles.sectors", "sector " + s.to_string() + " needs " +
                                          std::to_string(num_flavors) +
                                          " counts");
        for (int m : s.counts) {
            if (m < 0) fail("particles.sectors", "counts must be non-negative");
            if (m > num_sites)
                fail("particles.sectors",
                     "sector " + s.to_string() +
                         " infeasible: the chain must be large enough to "
                         "contain all particles (L >= max M_a)");
        }
        if (s.total() == 0)
            fail("particles.sectors",
                 "sector " + s.to_string() + " holds no particles");
    }

    auto positive = [&](double v, const char* name) {
        if (!(v > 0.0)) fail(name, "must be positive");
    };
    positive(tolerances.degeneracy, "tolerances.degeneracy");
    positive(tolerances.positivity_floor, "tolerances.positivity_floor");
    positive(tolerances.trial_overlap, "tolerances.trial_overlap");
    positive(tolerances.raising_norm, "tolerances.raising_norm");
    positive(tolerances.ordering_margin, "tolerances.ordering_margin");
    positive(tolerances.permutation_agreement,
             "tolerances.permutation_agreement");
    positive(solver.residual_tol, "tolerances.solver_residual");
}

nlohmann::json config_echo(const ExperimentConfig& cfg) {
    json chain = {{"L", cfg.num_sites}, {"N", cfg.num_flavors}};
    switch (cfg.potential.kind) {
        case hamiltonian::PotentialSpec::Kind::None:
            chain["potential"] = {{"kind", "none"}};
            break;
        case hamiltonian::PotentialSpec::Kind::Hubbard:
            chain["potential"] = {{"kind", "hubbard"},
                                  {"U", cfg.potential.hubbard_u}};
            break;
        case hamiltonian::PotentialSpec::Kind::SiteDiagonal:
            chain["potential"] = {{"kind", "site-diagonal"},
                                  {"values", cfg.potential.site_values}};
            break;
        case hamiltonian::PotentialSpec::Kind::Custom:
            chain["potential"] = {{"kind", "custom"}};
            break;
    }

    json particles;
    if (cfg.total_particles)
        particles = {{"total", *cfg.total_particles}};
    else {
        json secs = json::array();
        for (const auto& s : cfg.sectors) secs.push_back(s.counts);
        particles = {{"sectors", secs}};
    }

    json couplings;
    if (cfg.couplings.is_distribution)
        couplings = {{"distribution", "uniform"},
                     {"low", cfg.couplings.low},
                     {"high", cfg.couplings.high},
                     {"seed", cfg.couplings.seed},
                     {"draws", cfg.couplings.draws}};
    else
        couplings = {{"t", cfg.couplings.t},
                     {"J", cfg.couplings.J},
                     {"K", cfg.couplings.K}};

    return {{"chain", chain},
            {"particles", particles},
            {"couplings", couplings},
            {"tolerances",
             {{"degeneracy", cfg.tolerances.degeneracy},
              {"positivity_floor", cfg.tolerances.positivity_floor},
              {"trial_overlap", cfg.tolerances.trial_overlap},
              {"raising_norm", cfg.tolerances.raising_norm},
              {"ordering_margin", cfg.tolerances.ordering_margin},
              {"permutation_agreement", cfg.tolerances.permutation_agreement},
              {"solver_residual", cfg.solver.residual_tol}}},
            {"solver",
             {{"dense_cutoff", cfg.solver.dense_cutoff},
              {"max_iterations", cfg.solver.max_iterations}}},
            {"outputs",
             {{"dir", cfg.outputs.out_dir},
              {"format", cfg.outputs.format == OutputFormat::Json   ? "json"
                         : cfg.outputs.format == OutputFormat::Csv ? "csv"
                                                                   : "both"}}}};
}

}  // namespace suned::cli
