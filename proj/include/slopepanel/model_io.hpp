#pragma once

#include "slopepanel/counting.hpp"
#include "slopepanel/variety_model.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string_view>

namespace slopepanel {

struct ModelFile {
    VarietyModel model;
    std::optional<CountingConfig> counting;
};

/// Parses the JSON model document. Unknown fields, missing required fields
/// and malformed values raise InvalidModel (or InvalidConfig inside the
/// `counting` block). Structural problems from shape_problems() are errors
/// too.
ModelFile parse_model(const nlohmann::json& doc);
ModelFile parse_model_text(std::string_view text);
ModelFile load_model(const std::filesystem::path& path);

nlohmann::json to_json(const VarietyModel& model);
nlohmann::json to_json(const CountingConfig& cfg);

}  // namespace slopepanel
