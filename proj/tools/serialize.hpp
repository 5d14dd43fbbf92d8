#pragma once

#include <string>

#include <json.hpp>

#include "grlie/analysis.hpp"

namespace grlie::cli {

/// Stable machine-readable forms. Field names and ordering are part of the
/// interface; identical inputs serialize to identical bytes.
nlohmann::ordered_json table_to_json(const HilbertTable& table);
HilbertTable table_from_json(const nlohmann::json& j);
std::string table_to_tsv(const HilbertTable& table);

nlohmann::ordered_json compare_to_json(const ComparisonReport& report);
std::string compare_to_tsv(const ComparisonReport& report);

nlohmann::ordered_json exactness_to_json(const ExactnessReport& report);
std::string exactness_to_tsv(const ExactnessReport& report);

std::string torsion_to_string(const std::vector<Int>& torsion);

}  // namespace grlie::cli
