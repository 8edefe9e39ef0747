#pragma once

#include "greyrank/decision_model.hpp"
#include "greyrank/ranking.hpp"
#include "greyrank/weighting.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace greyrank {

// normalize -> weights -> rank (three methods) -> all (rank + Borda fusion).
enum class Stage { Normalize, Weights, Rank, All };

std::string_view to_string(Stage stage) noexcept;
Stage parse_stage(std::string_view text);

enum class OutputFormat { Text, Json };

inline constexpr std::array<Method, 3> kAllMethods{Method::GreyTopsis, Method::GreyIncidence,
                                                   Method::MaxEntropyIncidence};

// A what-if replacement. Accepted forms:
//   <plan>.<attribute>=[lo,hi]    decision matrix cell
//   q.<plan>=[lo,hi]              plan preference
//   expert<k>=[w1,...,wm]         k-th (1-based) expert weight vector
struct Override {
    enum class Kind { Cell, Preference, ExpertWeights };
    Kind kind = Kind::Cell;
    std::string target;
    std::size_t plan = 0;
    std::size_t attribute = 0;
    std::size_t expert = 0;
    GreyInterval value;
    std::vector<double> weights;
};

Override parse_override(std::string_view text, const DecisionProblem& problem);
void apply_override(DecisionProblem& problem, const Override& change);

struct RunConfig {
    std::string input_path;
    OutputFormat format = OutputFormat::Json;
    Stage stage = Stage::All;
    std::vector<Method> methods{kAllMethods.begin(), kAllMethods.end()};
    std::vector<std::string> overrides;
    // Command-line parameter overrides; they take precedence over the file.
    std::optional<double> rho;
    std::optional<double> theta_plus;
    std::optional<std::array<double, 3>> borda_weights;
};

struct BordaFusion {
    std::vector<Method> methods;
    std::vector<double> weights;  // renormalized over the selected methods
    BordaResult result;
};

struct Report {
    DecisionProblem problem;
    Stage stage = Stage::All;
    std::vector<Method> methods;
    std::optional<NormalizedMatrix> normalized;
    bool normalized_precomputed = false;
    std::optional<WeightSet> weights;
    std::optional<WeightedMatrix> weighted;
    std::optional<IdealVectors> ideals;
    std::optional<IncidenceMatrices> incidence;
    std::vector<RankingResult> rankings;
    std::optional<BordaFusion> borda;
    std::vector<std::string> warnings;

    const RankingResult* ranking(Method method) const;
};

// Runs the pipeline up to `stage`. A precomputed normalized matrix, when
// given, replaces the normalization step.
Report evaluate(const DecisionProblem& problem, Stage stage, std::span<const Method> methods,
                const std::optional<NormalizedMatrix>& precomputed = std::nullopt);

// Problem with command-line parameters applied.
DecisionProblem apply_params(DecisionProblem problem, const RunConfig& config);

Report run(const RunConfig& config);

struct RankChange {
    std::string plan;
    int baseline = 0;
    int perturbed = 0;
};

struct WhatIfResult {
    Report baseline;
    Report perturbed;
    std::vector<std::string> applied;
    std::vector<RankChange> changes;  // plans whose final rank moved
    // Tie flags appearing only after the perturbation, e.g. "topsis", "borda".
    std::vector<std::string> new_ties;
    std::vector<std::string> resolved_ties;
};

// Baseline and perturbed full runs (stage All) of the same loaded problem,
// compared on the Borda final rank.
WhatIfResult whatif(const RunConfig& config);
WhatIfResult whatif(const DecisionProblem& problem, std::span<const Override> overrides,
                    std::span<const Method> methods);

} // namespace greyrank
