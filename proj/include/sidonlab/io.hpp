// Set file format and JSON report serialization.
//
// Set files are plain text: one decimal integer per line, strictly
// increasing, with '#' comment lines; "# n=<value>" carries the ambient
// bound and "# family=<name>" an optional construction label.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "sidonlab/primes.hpp"
#include "sidonlab/search.hpp"
#include "sidonlab/sidon.hpp"

namespace sidonlab {

struct SetFile {
    SidonSet set;        // verified on read
    std::string family;  // empty if absent
};

SetFile read_set_file(std::istream& in);
SetFile read_set_file(const std::filesystem::path& path);

void write_set_file(std::ostream& out, const SidonSet& set, const std::string& family = "");
void write_set_file(const std::filesystem::path& path, const SidonSet& set,
                    const std::string& family = "");

nlohmann::json to_json(const DefectValue& v);
nlohmann::json to_json(const DiscrepancyReport& r);
nlohmann::json to_json(const SweepSummary& s);
nlohmann::json to_json(const ElementErrorRecord& r);
nlohmann::json to_json(const ElementErrorSummary& s);
nlohmann::json to_json(const PowerSumRecord& r);
nlohmann::json to_json(const DingReport& r);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const DefectRecord& r);
nlohmann::json to_json(const ExceptionReport& r);
nlohmann::json to_json(const GapExponentReport& r);
nlohmann::json to_json(const HeathBrownSum& r);

DiscrepancyReport discrepancy_from_json(const nlohmann::json& j);
ElementErrorRecord element_error_from_json(const nlohmann::json& j);
PowerSumRecord power_sum_from_json(const nlohmann::json& j);

// Write-to-temp-then-rename; no partial files on error paths.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace sidonlab
