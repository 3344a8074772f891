#include "suned/report.hpp"

#include <cstdio>

namespace suned::spectra {

namespace {

using nlohmann::json;

json sector_json(const fock::Sector& s) { return json(s.counts); }

json positivity_json(const PositivityVerdict& v) {
    return {{"pass", v.pass},
            {"min_component", v.min_component},
            {"max_component", v.max_component}};
}

json uniqueness_json(const UniquenessVerdict& v) {
    return {{"pass", v.pass}, {"trivial", v.trivial}, {"gap", v.gap}};
}

json multiplet_json(const MultipletVerdict& v) {
    return {{"pass", v.pass},
            {"trial_component", v.trial_component},
            {"max_raising_norm", v.max_raising_norm}};
}

json gap_json(const std::optional<double>& gap) {
    return gap ? json(*gap) : json(nullptr);
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json to_json(const SpectrumReport& report) {
    json diagrams = json::array();
    for (const auto& d : report.diagrams) {
        json e = {{"diagram", d.diagram.to_string()},
                  {"sector", sector_json(d.sector)},
                  {"feasible", d.feasible}};
        if (d.feasible) {
            e["dimension"] = d.dimension;
            e["energy"] = d.energy;
            e["gap"] = gap_json(d.gap);
            e["positivity"] = positivity_json(d.positivity);
            e["uniqueness"] = uniqueness_json(d.uniqueness);
            e["highest_weight"] = multiplet_json(d.multiplet);
        }
        diagrams.push_back(std::move(e));
    }

    json sectors = json::array();
    for (const auto& s : report.sectors) {
        sectors.push_back({{"sector", sector_json(s.sector)},
                           {"dimension", s.dimension},
                           {"energy", s.energy},
                           {"gap", gap_json(s.gap)},
                           {"positive", s.positive},
                           {"unique", s.unique},
                           {"offdiagonal_nonpositive",
                            s.offdiagonal_nonpositive},
                           {"connected", s.connected},
                           {"count_at_minimum", s.count_at_minimum}});
    }

    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"above", v.above},
                              {"below", v.below},
                              {"energy_above", v.energy_above},
                              {"energy_below", v.energy_below}});
    }

    json out = {
        {"total_particles", report.total_particles},
        {"couplings_warning", report.couplings_warning},
        {"diagrams", diagrams},
        {"sectors", sectors},
        {"ordering",
         {{"comparable_pairs", report.comparable_pairs},
          {"violations", violations}}},
        {"ground_multiplet",
         {{"expected_diagram", report.expected_ground
                                   ? json(report.expected_ground->to_string())
                                   : json(nullptr)},
          {"observed_diagram", report.observed_ground
                                   ? json(report.observed_ground->to_string())
                                   : json(nullptr)},
          {"diagram_check", to_string(report.ground_diagram_check)},
          {"global_minimum", report.global_minimum},
          {"expected_multiplicity", report.expected_multiplicity},
          {"observed_multiplicity", report.observed_multiplicity},
          {"multiplicity_check", to_string(report.multiplicity_check)}}},
        {"structure",
         {{"offdiagonal_nonpositive", report.offdiagonal_nonpositive},
          {"connected", report.connected},
          {"sectors_checked", report.sectors.size()}}},
        {"permutation_consistency",
         {{"pass", report.permutation_ok},
          {"max_spread", report.permutation_spread}}},
        {"all_pass", report.all_checks_pass()},
        {"failed_checks", report.failed_checks()},
    };
    return out;
}

json to_json(const SectorVerification& v) {
    return {{"sector", sector_json(v.sector)},
            {"labeled_sector", sector_json(v.labeled_sector)},
            {"diagram", young::diagram_from_sector(v.sector).to_string()},
            {"dimension", v.dimension},
            {"energy", v.energy},
            {"gap", gap_json(v.gap)},
            {"positivity", positivity_json(v.positivity)},
            {"uniqueness", uniqueness_json(v.uniqueness)},
            {"highest_weight", multiplet_json(v.multiplet)},
            {"offdiagonal_nonpositive", v.offdiagonal_nonpositive},
            {"connected", v.connected},
            {"all_pass", v.all_pass()}};
}

std::string csv_header(bool verdicts) {
    std::string h = "draw,particles,diagram,sector,dimension,feasible,energy,gap";
    if (verdicts) h += ",positive,unique,highest_weight";
    return h + "\n";
}

namespace {

void csv_row(std::string& out, int draw, int particles,
             const std::string& diagram, const std::string& sector,
             std::uint64_t dimension, bool feasible, double energy,
             const std::optional<double>& gap, const bool* flags) {
    out += std::to_string(draw);
    out += ',' + std::to_string(particles);
    out += ',' + quoted(diagram);
    out += ',' + quoted(sector);
    out += ',' + std::to_string(dimension);
    out += feasible ? ",1" : ",0";
    out += ',';
    if (feasible) out += format_double(energy);
    out += ',';
    if (feasible && gap) out += format_double(*gap);
    if (flags) {
        for (int i = 0; i < 3; ++i) out += flags[i] ? ",1" : ",0";
    }
    out += '\n';
}

}  // namespace

void append_csv(std::string& out, const SpectrumReport& report, int draw,
                bool verdicts) {
    for (const auto& d : report.diagrams) {
        bool flags[3] = {d.positivity.pass, d.uniqueness.pass,
                         d.multiplet.pass};
        csv_row(out, draw, report.total_particles, d.diagram.to_string(),
                d.sector.to_string(), d.dimension, d.feasible, d.energy, d.gap,
                verdicts ? flags : nullptr);
    }
}

void append_csv(std::string& out, const SectorVerification& v, int draw,
                bool verdicts) {
    bool flags[3] = {v.positivity.pass, v.uniqueness.pass, v.multiplet.pass};
    csv_row(out, draw, v.sector.total(),
            young::diagram_from_sector(v.sector).to_string(),
            v.sector.to_string(), v.dimension, true, v.energy, v.gap,
            verdicts ? flags : nullptr);
}

std::size_t check_count(const SpectrumReport& report) {
    std::size_t n = 6;  // ordering, diagram, multiplicity, structure x2, perms
    for (const auto& d : report.diagrams)
        if (d.feasible) n += 3;
    n += report.sectors.size() * 2;
    return n;
}

std::size_t check_count(const SectorVerification&) { return 5; }

}  // namespace suned::spectra
