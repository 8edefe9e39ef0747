#pragma once

#include "greyrank/grey_interval.hpp"
#include "greyrank/grid.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace greyrank {

using IntervalMatrix = Grid<GreyInterval>;
using NormalizedMatrix = IntervalMatrix;

// Tolerance for "sums to one" checks on weight vectors.
inline constexpr double kWeightSumTolerance = 1e-9;

enum class AttributeKind { Cost, Effect };

std::string_view to_string(AttributeKind kind) noexcept;
// Accepts "cost" or "effect"; throws ValidationError otherwise.
AttributeKind parse_attribute_kind(std::string_view text);

struct Attribute {
    std::string name;
    AttributeKind kind = AttributeKind::Effect;
};

struct MethodParams {
    // Resolution coefficient of the incidence coefficients, in (0, 1).
    double rho = 0.5;
    // Preference coefficients of the incidence approach degree. They sum to
    // one; theta_minus may be zero only in the pure (theta_plus = 1) case.
    double theta_plus = 0.5;
    double theta_minus = 0.5;
    // Borda fusion weights for (TOPSIS, incidence, max-entropy incidence).
    std::array<double, 3> borda_weights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

    void validate() const;
};

// Plans x attributes interval decision problem.
struct DecisionProblem {
    std::vector<std::string> plans;
    std::vector<Attribute> attributes;
    IntervalMatrix matrix;
    // One row per expert, one column per attribute.
    std::vector<std::vector<double>> expert_weights;
    std::optional<std::vector<GreyInterval>> preferences;
    MethodParams params;

    std::size_t plan_count() const noexcept { return plans.size(); }
    std::size_t attribute_count() const noexcept { return attributes.size(); }

    // Checks every structural invariant. Requires at least min_plans plans;
    // ranking pipelines need two, normalization alone needs one.
    void validate(std::size_t min_plans = 2) const;

    // Index lookups by name; throw ValidationError for unknown names.
    std::size_t plan_index(std::string_view name) const;
    std::size_t attribute_index(std::string_view name) const;
};

// Effect (benefit) column: lo / sum(hi), hi / sum(lo).
std::vector<GreyInterval> normalize_effect_column(std::span<const GreyInterval> column,
                                                  std::string_view attribute = {});

// Cost column: reciprocal bounds, each over the opposite reciprocal sum.
// Requires strictly positive lower bounds; `plans` only labels error messages.
std::vector<GreyInterval> normalize_cost_column(std::span<const GreyInterval> column,
                                                std::string_view attribute = {},
                                                std::span<const std::string> plans = {});

NormalizedMatrix normalize(const DecisionProblem& problem);

} // namespace greyrank
