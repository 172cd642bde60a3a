#pragma once

// JSON model files.
//
//   {"n_x": 2, "n_y": 2, "pF": {"01": "1/2", "10": "1/2"}}
//   {"n_x": 2, "n_y": 2, "joint": {"0|00": "1/2", "1|11": "1/2"}}
//
// Keys are output digit strings (f(0) first); probabilities are "p/q" strings.
// Omitted tables have weight zero.

#include <filesystem>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "qcf/causal_core.hpp"

namespace qcf {

using Model = std::variant<FunctionDistribution, ConfoundedModel>;

/// Nonzero weights only, keyed by digit string.
nlohmann::json weights_to_json(const FunctionDistribution& pF);

nlohmann::json to_json(const FunctionDistribution& pF);
nlohmann::json to_json(const ConfoundedModel& m);

/// ValidationError naming the violated invariant.
Model model_from_json(const nlohmann::json& j);

/// ParseError with line and column for malformed JSON.
Model parse_model(std::string_view text);
Model load_model(const std::filesystem::path& path);

/// p(F) itself, or p(R_Y) for a confounded model (what interventions expose).
FunctionDistribution response_distribution(const Model& m);

}  // namespace qcf
