#include "greyrank/decision_model.hpp"

#include "greyrank/errors.hpp"

#include <cmath>
#include <numeric>
#include <set>

namespace greyrank {

namespace {

std::string label(std::string_view attribute) {
    return attribute.empty() ? std::string("attribute") : "attribute '" + std::string(attribute) + "'";
}

void check_weight_row(std::span<const double> row, std::size_t expected, const std::string& what) {
    if (row.size() != expected)
        throw ValidationError(what + " has " + std::to_string(row.size()) + " entries, expected " +
                              std::to_string(expected));
    double sum = 0.0;
    for (double v : row) {
        if (!std::isfinite(v) || v < 0.0)
            throw ValidationError(what + " has a negative or non-finite entry");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kWeightSumTolerance)
        throw ValidationError(what + " does not sum to 1");
}

} // namespace

std::string_view to_string(AttributeKind kind) noexcept {
    return kind == AttributeKind::Cost ? "cost" : "effect";
}

AttributeKind parse_attribute_kind(std::string_view text) {
    if (text == "cost")
        return AttributeKind::Cost;
    if (text == "effect")
        return AttributeKind::Effect;
    throw ValidationError("unknown attribute kind '" + std::string(text) + "' (expected \"cost\" or \"effect\")");
}

void MethodParams::validate() const {
    if (!(rho > 0.0 && rho < 1.0))
        throw ValidationError("params.rho must lie in (0, 1)");
    if (!(theta_plus > 0.0 && theta_plus <= 1.0))
        throw ValidationError("params.theta_plus must lie in (0, 1]");
    if (!(theta_minus >= 0.0 && theta_minus <= 1.0))
        throw ValidationError("params.theta_minus must lie in [0, 1]");
    if (theta_minus == 0.0 && theta_plus != 1.0)
        throw ValidationError("params.theta_minus may be 0 only when theta_plus is 1");
    if (std::abs(theta_plus + theta_minus - 1.0) > kWeightSumTolerance)
        throw ValidationError("params.theta_plus + params.theta_minus must equal 1");
    check_weight_row(borda_weights, 3, "params.borda_weights");
}

void DecisionProblem::validate(std::size_t min_plans) const {
    const std::size_t n = plans.size();
    const std::size_t m = attributes.size();
    if (n < min_plans)
        throw ValidationError("plans: at least " + std::to_string(min_plans) + " plan(s) required, got " +
                              std::to_string(n));
    if (m < 1)
        throw ValidationError("attributes: at least one attribute required");

    std::set<std::string_view> seen;
    for (const auto& p : plans)
        if (!seen.insert(p).second)
            throw ValidationError("plans: duplicate plan name '" + p + "'");
    seen.clear();
    for (const auto& a : attributes)
        if (!seen.insert(a.name).second)
            throw ValidationError("attributes: duplicate attribute name '" + a.name + "'");

    if (matrix.rows() != n || matrix.cols() != m)
        throw ValidationError("matrix: expected " + std::to_string(n) + "x" + std::to_string(m) + ", got " +
                              std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!matrix(i, j).is_nonnegative())
                throw ValidationError("matrix cell " + plans[i] + "." + attributes[j].name +
                                      " has a negative lower bound");

    if (expert_weights.empty())
        throw ValidationError("expert_weights: at least one expert weight vector required");
    for (std::size_t l = 0; l < expert_weights.size(); ++l)
        check_weight_row(expert_weights[l], m, "expert_weights[" + std::to_string(l) + "]");

    if (preferences) {
        if (preferences->size() != n)
            throw ValidationError("preferences: expected " + std::to_string(n) + " entries, got " +
                                  std::to_string(preferences->size()));
        for (std::size_t i = 0; i < n; ++i)
            if (!(*preferences)[i].within(0.0, 1.0))
                throw ValidationError("preferences entry for plan " + plans[i] + " must lie within [0, 1]");
    }
    params.validate();
}

std::size_t DecisionProblem::plan_index(std::string_view name) const {
    for (std::size_t i = 0; i < plans.size(); ++i)
        if (plans[i] == name)
            return i;
    throw ValidationError("unknown plan '" + std::string(name) + "'");
}

std::size_t DecisionProblem::attribute_index(std::string_view name) const {
    for (std::size_t j = 0; j < attributes.size(); ++j)
        if (attributes[j].name == name)
            return j;
    throw ValidationError("unknown attribute '" + std::string(name) + "'");
}

std::vector<GreyInterval> normalize_effect_column(std::span<const GreyInterval> column,
                                                  std::string_view attribute) {
    double sum_lo = 0.0;
    double sum_hi = 0.0;
    for (const auto& a : column) {
        if (!a.is_nonnegative())
            throw ValidationError(label(attribute) + " has a negative lower bound");
        sum_lo += a.lo();
        sum_hi += a.hi();
    }
    if (!(sum_lo > 0.0))
        throw ComputationError("effect normalization undefined for " + label(attribute) +
                               ": lower bounds sum to zero");

    std::vector<GreyInterval> out;
    out.reserve(column.size());
    for (const auto& a : column)
        out.emplace_back(a.lo() / sum_hi, a.hi() / sum_lo);
    return out;
}

std::vector<GreyInterval> normalize_cost_column(std::span<const GreyInterval> column,
                                                std::string_view attribute,
                                                std::span<const std::string> plans) {
    double recip_lo_sum = 0.0; // sum of 1/lo
    double recip_hi_sum = 0.0; // sum of 1/hi
    for (std::size_t i = 0; i < column.size(); ++i) {
        if (!(column[i].lo() > 0.0)) {
            const std::string row = i < plans.size() ? plans[i] : "row " + std::to_string(i);
            throw ComputationError("cost normalization undefined at cell " + row + "." +
                                   (attribute.empty() ? std::string("?") : std::string(attribute)) +
                                   ": lower bound must be strictly positive");
        }
        recip_lo_sum += 1.0 / column[i].lo();
        recip_hi_sum += 1.0 / column[i].hi();
    }

    std::vector<GreyInterval> out;
    out.reserve(column.size());
    for (const auto& a : column)
        out.emplace_back((1.0 / a.hi()) / recip_lo_sum, (1.0 / a.lo()) / recip_hi_sum);
    return out;
}

NormalizedMatrix normalize(const DecisionProblem& problem) {
    problem.validate(1);
    const std::size_t n = problem.plan_count();
    const std::size_t m = problem.attribute_count();
    NormalizedMatrix x(n, m);
    for (std::size_t j = 0; j < m; ++j) {
        const auto& attr = problem.attributes[j];
        const auto column = problem.matrix.column(j);
        const auto normalized = attr.kind == AttributeKind::Effect
                                    ? normalize_effect_column(column, attr.name)
                                    : normalize_cost_column(column, attr.name, problem.plans);
        x.set_column(j, normalized);
    }
    return x;
}

} // namespace greyrank
