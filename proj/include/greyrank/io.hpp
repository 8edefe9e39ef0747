#pragma once

#include "greyrank/decision_model.hpp"
#include "greyrank/pipeline.hpp"

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace greyrank {

using Json = nlohmann::ordered_json;

struct LoadedInput {
    DecisionProblem problem;
    // Present when the document is an earlier report carrying a normalized matrix.
    std::optional<NormalizedMatrix> normalized;
};

// Accepts a problem document, or a report document whose "problem" key holds
// one (its "normalized" matrix, if any, is loaded as precomputed input).
// Throws ValidationError naming the offending field or cell.
LoadedInput parse_input(const Json& doc);
LoadedInput parse_input_text(const std::string& text);
LoadedInput load_input(const std::filesystem::path& path);

Json to_json(const DecisionProblem& problem);
Json to_json(const Report& report);
Json to_json(const WhatIfResult& result);

// Pretty JSON with every floating-point number written to 17 significant
// digits. Arrays of scalars stay on one line.
std::string dump_json(const Json& value);

std::string render_text(const Report& report);
std::string render_text(const WhatIfResult& result);

} // namespace greyrank
