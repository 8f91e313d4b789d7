#pragma once

#include "seshadri/variety.hpp"

#include <string>

namespace seshadri {

/// Parses a variety description document. Throws SchemaError (with a dotted
/// field path) on malformed input; all rationals travel as strings.
VarietyData load_variety_spec(const std::string& json_text);

/// Normalized re-emission of a variety description: the presentation keeps
/// its kind, the normal bundle becomes an explicit Chern series, and the
/// Seshadri information is resolved to exact/lower_bound. Loading the
/// emitted document recomputes to identical results.
std::string emit_variety_spec(const VarietyData& v);

} // namespace seshadri
