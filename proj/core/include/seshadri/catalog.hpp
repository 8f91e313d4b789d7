#pragma once

#include "seshadri/variety.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace seshadri {

struct ParamSpec {
    std::string name;
    std::string doc;
    long min_value;
    long max_value;
};

using ParamMap = std::map<std::string, long>;

/// A built-in family of worked examples: a parametric constructor producing
/// fully populated VarietyData (Chow ring, normal bundle, polarization and
/// the Seshadri rule that applies to the family). Expected exact values live
/// in the verification harness, never in the constructors.
struct CatalogEntry {
    std::string name;
    std::string summary;
    std::vector<ParamSpec> params;
    std::function<VarietyData(const ParamMap&)> build;
};

/// All entries, ordered by name.
const std::vector<CatalogEntry>& catalog_entries();

/// Throws UnknownEntry (with a nearest-name suggestion) when absent.
const CatalogEntry& find_entry(const std::string& name);

VarietyData build_entry(const std::string& name, const ParamMap& params);

/// Same, with raw string parameters as they arrive from the command line.
VarietyData build_entry(const std::string& name, const std::map<std::string, std::string>& raw_params);

} // namespace seshadri
