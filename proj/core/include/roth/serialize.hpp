#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "roth/configurations.hpp"
#include "roth/experiment.hpp"
#include "roth/extremal.hpp"
#include "roth/harmadik.hpp"
#include "roth/subgroup.hpp"
#include "roth/tripartite.hpp"

namespace roth {

/// Version stamped into every JSON document as "schema_version". Bumped on
/// any incompatible change to the layouts in schemas/.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const ConfigWitness& witness);
/// Accepts both a bare witness object and a find report carrying "witness".
/// Throws Error(kParse) on missing or ill-typed fields.
ConfigWitness witness_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const DegeneracyPolicy& policy);
nlohmann::json to_json(const CensusReport& census);
nlohmann::json to_json(const CosetPairChoice& choice);
nlohmann::json to_json(const HarmadikTrace& trace);
nlohmann::json to_json(const GroupFacts& facts);
nlohmann::json to_json(const ExperimentReport& report);
/// Header plus one row per density.
std::string to_csv(const ExperimentReport& report);

}  // namespace roth
