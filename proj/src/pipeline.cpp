#include "greyrank/pipeline.hpp"

#include "greyrank/errors.hpp"
#include "greyrank/io.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace greyrank {

namespace {

bool selected(std::span<const Method> methods, Method m) {
    return std::find(methods.begin(), methods.end(), m) != methods.end();
}

std::size_t method_slot(Method m) {
    switch (m) {
    case Method::GreyTopsis:
        return 0;
    case Method::GreyIncidence:
        return 1;
    case Method::MaxEntropyIncidence:
        return 2;
    }
    return 0;
}

// Selected methods in canonical order, without duplicates.
std::vector<Method> canonical_methods(std::span<const Method> methods) {
    std::vector<Method> out;
    for (Method m : kAllMethods)
        if (selected(methods, m))
            out.push_back(m);
    if (out.empty())
        throw ValidationError("at least one ranking method must be selected");
    return out;
}

std::vector<std::string> tie_sources(const Report& r) {
    std::vector<std::string> out;
    for (const auto& res : r.rankings)
        if (res.tied)
            out.emplace_back(to_string(res.method));
    if (r.borda && r.borda->result.order.tied)
        out.emplace_back("borda");
    return out;
}

} // namespace

std::string_view to_string(Stage stage) noexcept {
    switch (stage) {
    case Stage::Normalize:
        return "normalize";
    case Stage::Weights:
        return "weights";
    case Stage::Rank:
        return "rank";
    case Stage::All:
        return "all";
    }
    return "all";
}

Stage parse_stage(std::string_view text) {
    if (text == "normalize")
        return Stage::Normalize;
    if (text == "weights")
        return Stage::Weights;
    if (text == "rank")
        return Stage::Rank;
    if (text == "all")
        return Stage::All;
    throw ValidationError("unknown stage '" + std::string(text) + "' (expected normalize, weights, rank or all)");
}

const RankingResult* Report::ranking(Method method) const {
    for (const auto& r : rankings)
        if (r.method == method)
            return &r;
    return nullptr;
}

Override parse_override(std::string_view text, const DecisionProblem& problem) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ValidationError("override '" + std::string(text) + "' must have the form target=[...]");
    const std::string target(text.substr(0, eq));
    const std::string value(text.substr(eq + 1));

    Json parsed;
    try {
        parsed = Json::parse(value);
    } catch (const Json::parse_error&) {
        throw ValidationError("override '" + target + "': value '" + value + "' is not a JSON array");
    }
    if (!parsed.is_array() || parsed.empty())
        throw ValidationError("override '" + target + "': value must be a non-empty array");
    std::vector<double> numbers;
    for (const auto& v : parsed) {
        if (!v.is_number())
            throw ValidationError("override '" + target + "': value must contain only numbers");
        numbers.push_back(v.get<double>());
    }

    Override o;
    o.target = target;

    auto as_interval = [&]() {
        if (numbers.size() != 2)
            throw ValidationError("override '" + target + "': expected [lo, hi]");
        try {
            return GreyInterval(numbers[0], numbers[1]);
        } catch (const ValidationError& e) {
            throw ValidationError("override '" + target + "': " + e.what());
        }
    };

    if (target.rfind("expert", 0) == 0 && target.size() > 6 &&
        std::all_of(target.begin() + 6, target.end(), [](unsigned char c) { return std::isdigit(c); })) {
        const std::size_t k = std::stoul(target.substr(6));
        if (k < 1 || k > problem.expert_weights.size())
            throw ValidationError("override '" + target + "': no such expert (have " +
                                  std::to_string(problem.expert_weights.size()) + ")");
        o.kind = Override::Kind::ExpertWeights;
        o.expert = k - 1;
        o.weights = std::move(numbers);
        return o;
    }

    const auto dot = target.find('.');
    if (dot == std::string::npos)
        throw ValidationError("override '" + target + "': expected <plan>.<attribute>, q.<plan> or expert<k>");
    const std::string head = target.substr(0, dot);
    const std::string tail = target.substr(dot + 1);
    if (head == "q") {
        o.kind = Override::Kind::Preference;
        o.plan = problem.plan_index(tail);
        o.value = as_interval();
        return o;
    }
    o.kind = Override::Kind::Cell;
    o.plan = problem.plan_index(head);
    o.attribute = problem.attribute_index(tail);
    o.value = as_interval();
    return o;
}

void apply_override(DecisionProblem& problem, const Override& change) {
    switch (change.kind) {
    case Override::Kind::Cell:
        problem.matrix.at(change.plan, change.attribute) = change.value;
        break;
    case Override::Kind::Preference:
        if (!problem.preferences)
            throw ValidationError("override '" + change.target + "': the problem has no preferences");
        problem.preferences->at(change.plan) = change.value;
        break;
    case Override::Kind::ExpertWeights:
        problem.expert_weights.at(change.expert) = change.weights;
        break;
    }
}

Report evaluate(const DecisionProblem& problem, Stage stage, std::span<const Method> methods,
                const std::optional<NormalizedMatrix>& precomputed) {
    problem.validate(stage == Stage::Normalize ? 1 : 2);

    Report report;
    report.problem = problem;
    report.stage = stage;
    report.methods = canonical_methods(methods);

    if (precomputed) {
        if (precomputed->rows() != problem.plan_count() || precomputed->cols() != problem.attribute_count())
            throw ValidationError("normalized: dimensions do not match the problem");
        report.normalized = *precomputed;
        report.normalized_precomputed = true;
    } else {
        report.normalized = normalize(problem);
    }
    if (stage == Stage::Normalize)
        return report;

    report.weights = compute_weights(problem, *report.normalized);
    for (std::size_t j = 0; j < problem.attribute_count(); ++j)
        if (report.weights->final[j].hi() == 1.0 && problem.attribute_count() > 1)
            report.warnings.push_back("final weight upper bound of attribute " + problem.attributes[j].name +
                                      " clamped to 1");
    if (stage == Stage::Weights)
        return report;

    const auto z = blend_preference(*report.normalized, problem.preferences);
    report.weighted = weighted_matrix(z, report.weights->final);
    const auto& y = report.weighted->weighted;
    report.ideals = ideal_vectors(y);

    if (selected(report.methods, Method::GreyTopsis))
        report.rankings.push_back(topsis_scores(y, *report.ideals));

    if (selected(report.methods, Method::GreyIncidence) || selected(report.methods, Method::MaxEntropyIncidence)) {
        report.incidence = incidence_coefficients(y, *report.ideals, problem.params.rho);
        if (report.incidence->degenerate_plus)
            report.warnings.emplace_back("all distances to the positive ideal are zero; incidence coefficients set to 1");
        if (report.incidence->degenerate_minus)
            report.warnings.emplace_back("all distances to the negative ideal are zero; incidence coefficients set to 1");
        const auto g = incidence_degrees(*report.incidence);
        if (selected(report.methods, Method::GreyIncidence))
            report.rankings.push_back(
                incidence_scores(g.plus, g.minus, problem.params.theta_plus, problem.params.theta_minus));
        if (selected(report.methods, Method::MaxEntropyIncidence)) {
            const auto beta = max_entropy_weights(g.plus, g.minus);
            auto r = entropy_incidence_scores(g.plus, g.minus, beta.beta1, beta.beta2);
            r.trace.push_back({"exponent", {beta.exponent}});
            report.rankings.push_back(std::move(r));
        }
    }

    for (const auto& r : report.rankings)
        for (const auto& f : r.flags)
            report.warnings.push_back(std::string(to_string(r.method)) + ": " + f);

    if (stage == Stage::Rank)
        return report;

    BordaFusion fusion;
    fusion.methods = report.methods;
    std::vector<std::vector<int>> ranks;
    for (Method m : fusion.methods) {
        fusion.weights.push_back(problem.params.borda_weights[method_slot(m)]);
        ranks.push_back(report.ranking(m)->ranks);
    }
    const double total = std::accumulate(fusion.weights.begin(), fusion.weights.end(), 0.0);
    if (!(total > 0.0))
        throw ValidationError("params.borda_weights: selected methods have zero total weight");
    for (double& w : fusion.weights)
        w /= total;
    fusion.result = weighted_borda(ranks, fusion.weights);
    if (fusion.result.order.tied)
        report.warnings.emplace_back("borda: tie in fused scores ordered by plan index");
    report.borda = std::move(fusion);
    return report;
}

DecisionProblem apply_params(DecisionProblem problem, const RunConfig& config) {
    if (config.rho)
        problem.params.rho = *config.rho;
    if (config.theta_plus) {
        problem.params.theta_plus = *config.theta_plus;
        problem.params.theta_minus = 1.0 - *config.theta_plus;
    }
    if (config.borda_weights)
        problem.params.borda_weights = *config.borda_weights;
    return problem;
}

Report run(const RunConfig& config) {
    auto input = load_input(config.input_path);
    auto problem = apply_params(std::move(input.problem), config);
    for (const auto& text : config.overrides) {
        const auto change = parse_override(text, problem);
        if (change.kind == Override::Kind::Cell && input.normalized)
            throw ValidationError("override '" + change.target +
                                  "': cell overrides cannot be combined with a precomputed normalized matrix");
        apply_override(problem, change);
    }
    return evaluate(problem, config.stage, config.methods, input.normalized);
}

WhatIfResult whatif(const DecisionProblem& problem, std::span<const Override> overrides,
                    std::span<const Method> methods) {
    WhatIfResult out;
    out.baseline = evaluate(problem, Stage::All, methods);
    DecisionProblem changed = problem;
    for (const auto& o : overrides) {
        apply_override(changed, o);
        out.applied.push_back(o.target);
    }
    out.perturbed = evaluate(changed, Stage::All, methods);

    const auto& before = out.baseline.borda->result.order.ranks;
    const auto& after = out.perturbed.borda->result.order.ranks;
    for (std::size_t i = 0; i < before.size(); ++i)
        if (before[i] != after[i])
            out.changes.push_back({problem.plans[i], before[i], after[i]});

    const auto ties_before = tie_sources(out.baseline);
    const auto ties_after = tie_sources(out.perturbed);
    for (const auto& t : ties_after)
        if (std::find(ties_before.begin(), ties_before.end(), t) == ties_before.end())
            out.new_ties.push_back(t);
    for (const auto& t : ties_before)
        if (std::find(ties_after.begin(), ties_after.end(), t) == ties_after.end())
            out.resolved_ties.push_back(t);
    return out;
}

WhatIfResult whatif(const RunConfig& config) {
    auto input = load_input(config.input_path);
    const auto problem = apply_params(std::move(input.problem), config);
    std::vector<Override> overrides;
    for (const auto& text : config.overrides)
        overrides.push_back(parse_override(text, problem));
    return whatif(problem, overrides, config.methods);
}

} // namespace greyrank
