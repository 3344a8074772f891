#pragma once

#include <string>

#include "json.hpp"
#include "suned/spectra.hpp"

namespace suned::spectra {

/// JSON form of one level-ordering run (the documented report schema).
nlohmann::json to_json(const SpectrumReport& report);
nlohmann::json to_json(const SectorVerification& v);

/// Flat CSV, one row per diagram (or per sector in sector-list mode).
/// `verdicts` switches between the verify and spectrum column sets.
std::string csv_header(bool verdicts);
void append_csv(std::string& out, const SpectrumReport& report, int draw,
                bool verdicts);
void append_csv(std::string& out, const SectorVerification& v, int draw,
                bool verdicts);

/// Shortest round-trip formatting, used everywhere a double lands in a file
/// so identical runs stay byte-identical.
std::string format_double(double v);

/// Number of individual pass/fail verdicts a report contributes; used for
/// manifest bookkeeping.
std::size_t check_count(const SpectrumReport& report);
std::size_t check_count(const SectorVerification& v);

}  // namespace suned::spectra
