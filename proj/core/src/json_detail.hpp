#pragma once

#include "seshadri/chern.hpp"
#include "seshadri/chow.hpp"

#include <json.hpp>

#include <string>

namespace seshadri::detail {

nlohmann::json class_to_json(const CycleClass& c);
CycleClass class_from_json(const nlohmann::json& j, const PresentationPtr& pres, const std::string& field);

nlohmann::json series_to_json(const ChernSeries& s);
ChernSeries series_from_json(const nlohmann::json& j, const PresentationPtr& pres, const std::string& field);

nlohmann::json presentation_to_json(const ChowPresentation& pres);
PresentationPtr presentation_from_json(const nlohmann::json& j, const std::string& field);

} // namespace seshadri::detail
