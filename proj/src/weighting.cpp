#include "greyrank/weighting.hpp"

#include "greyrank/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace greyrank {

namespace {

constexpr double kPowerTolerance = 1e-10;
constexpr int kPowerMaxIterations = 1000;

// Saaty's random consistency index, indexed by matrix order.
constexpr std::array<double, 16> kRandomIndex{0.0,  0.0,  0.0,  0.58, 0.90, 1.12, 1.24, 1.32,
                                              1.41, 1.45, 1.49, 1.51, 1.48, 1.56, 1.57, 1.59};

std::string attribute_label(std::span<const std::string> names, std::size_t j) {
    return j < names.size() ? "attribute '" + names[j] + "'" : "attribute " + std::to_string(j);
}

WeightVector normalize_sum(std::vector<double> v, const char* what) {
    const double total = std::accumulate(v.begin(), v.end(), 0.0);
    if (!(total > 0.0))
        throw ComputationError(std::string(what) + " undefined: every column is constant");
    for (double& x : v)
        x /= total;
    return v;
}

} // namespace

IntervalWeightVector subjective_weights(std::span<const std::vector<double>> expert_weights) {
    if (expert_weights.empty())
        throw ValidationError("subjective weights need at least one expert weight vector");
    const std::size_t m = expert_weights.front().size();
    for (std::size_t l = 0; l < expert_weights.size(); ++l) {
        const auto& row = expert_weights[l];
        if (row.size() != m)
            throw ValidationError("expert weight vector " + std::to_string(l) + " has " +
                                  std::to_string(row.size()) + " entries, expected " + std::to_string(m));
        double sum = 0.0;
        for (double v : row) {
            if (!std::isfinite(v) || v < 0.0)
                throw ValidationError("expert weight vector " + std::to_string(l) + " has a negative entry");
            sum += v;
        }
        if (std::abs(sum - 1.0) > kWeightSumTolerance)
            throw ValidationError("expert weight vector " + std::to_string(l) + " does not sum to 1");
    }

    IntervalWeightVector out;
    out.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        double lo = expert_weights.front()[j];
        double hi = lo;
        for (const auto& row : expert_weights) {
            lo = std::min(lo, row[j]);
            hi = std::max(hi, row[j]);
        }
        out.emplace_back(lo, hi);
    }
    return out;
}

AhpResult ahp_eigenvector(const Grid<double>& pairwise) {
    const std::size_t m = pairwise.rows();
    if (m == 0 || pairwise.cols() != m)
        throw ValidationError("pairwise comparison matrix must be square and non-empty");
    if (m >= kRandomIndex.size())
        throw ValidationError("pairwise comparison matrix order " + std::to_string(m) +
                              " exceeds the random index table (max 15)");
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double p = pairwise(i, j);
            if (!std::isfinite(p) || p <= 0.0)
                throw ValidationError("pairwise comparison entries must be positive");
            if (std::abs(p * pairwise(j, i) - 1.0) > 1e-9)
                throw ValidationError("pairwise comparison matrix is not reciprocal at (" + std::to_string(i) +
                                      ", " + std::to_string(j) + ")");
        }
    }

    std::vector<double> v(m, 1.0 / static_cast<double>(m));
    std::vector<double> next(m);
    AhpResult result;
    bool converged = false;
    for (int it = 1; it <= kPowerMaxIterations; ++it) {
        for (std::size_t i = 0; i < m; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < m; ++j)
                acc += pairwise(i, j) * v[j];
            next[i] = acc;
        }
        const double total = std::accumulate(next.begin(), next.end(), 0.0);
        double change = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            next[i] /= total;
            change = std::max(change, std::abs(next[i] - v[i]));
        }
        v.swap(next);
        result.iterations = it;
        if (change < kPowerTolerance) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw ComputationError("AHP power iteration did not converge in " + std::to_string(kPowerMaxIterations) +
                               " iterations");

    double lambda = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m; ++j)
            acc += pairwise(i, j) * v[j];
        lambda += acc / v[i];
    }
    lambda /= static_cast<double>(m);

    result.weights = std::move(v);
    result.lambda_max = lambda;
    result.consistency_index = m > 1 ? std::max(0.0, (lambda - static_cast<double>(m)) / static_cast<double>(m - 1)) : 0.0;
    const double ri = kRandomIndex[m];
    result.consistency_ratio = ri > 0.0 ? result.consistency_index / ri : 0.0;
    return result;
}

std::vector<double> deviation_totals(const NormalizedMatrix& x) {
    const std::size_t n = x.rows();
    std::vector<double> totals(x.cols(), 0.0);
    for (std::size_t j = 0; j < x.cols(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                totals[j] += distance(x(i, j), x(k, j));
    return totals;
}

WeightVector objective_weights_opt(const NormalizedMatrix& x) {
    if (x.rows() < 2)
        throw ValidationError("optimization weights need at least two plans");
    return normalize_sum(deviation_totals(x), "optimization weights");
}

std::vector<double> column_entropies(const Grid<double>& bounds, std::span<const std::string> attributes) {
    const std::size_t n = bounds.rows();
    if (n < 2)
        throw ValidationError("entropy weights need at least two plans");
    const double k = 1.0 / std::log(static_cast<double>(n));

    std::vector<double> entropy(bounds.cols());
    for (std::size_t j = 0; j < bounds.cols(); ++j) {
        double total = 0.0;
        bool uniform = true;
        for (std::size_t i = 0; i < n; ++i) {
            const double v = bounds(i, j);
            if (!std::isfinite(v) || v < 0.0)
                throw ValidationError("entropy input for " + attribute_label(attributes, j) + " must be non-negative");
            total += v;
            uniform = uniform && v == bounds(0, j);
        }
        if (!(total > 0.0))
            throw ComputationError("entropy undefined for " + attribute_label(attributes, j) + ": column sums to zero");
        if (uniform) {
            entropy[j] = 1.0;
            continue;
        }
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double p = bounds(i, j) / total;
            if (p > 0.0)
                acc -= p * std::log(p);
        }
        entropy[j] = std::clamp(k * acc, 0.0, 1.0);
    }
    return entropy;
}

WeightVector entropy_weights(const Grid<double>& bounds, std::span<const std::string> attributes) {
    auto eta = column_entropies(bounds, attributes);
    for (double& e : eta)
        e = 1.0 - e;
    const double total = std::accumulate(eta.begin(), eta.end(), 0.0);
    if (!(total > 0.0))
        throw ComputationError("entropy weights undefined: every column has maximal entropy");
    for (double& e : eta)
        e /= total;
    return eta;
}

Grid<double> lower_bounds(const IntervalMatrix& x) {
    Grid<double> out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            out(i, j) = x(i, j).lo();
    return out;
}

Grid<double> upper_bounds(const IntervalMatrix& x) {
    Grid<double> out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            out(i, j) = x(i, j).hi();
    return out;
}

IntervalWeightVector comprehensive_objective(std::span<const double> beta_opt, std::span<const double> beta_lo,
                                             std::span<const double> beta_hi) {
    const std::size_t m = beta_opt.size();
    if (beta_lo.size() != m || beta_hi.size() != m)
        throw ValidationError("objective weight vectors differ in length");
    IntervalWeightVector out;
    out.reserve(m);
    for (std::size_t j = 0; j < m; ++j)
        out.emplace_back(std::min({beta_opt[j], beta_lo[j], beta_hi[j]}),
                         std::max({beta_opt[j], beta_lo[j], beta_hi[j]}));
    return out;
}

IntervalWeightVector final_weights(std::span<const GreyInterval> alpha, std::span<const GreyInterval> beta) {
    const std::size_t m = alpha.size();
    if (beta.size() != m)
        throw ValidationError("subjective and objective weight vectors differ in length");

    std::vector<GreyInterval> products;
    products.reserve(m);
    double sum_lo = 0.0;
    double sum_hi = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        products.push_back(mul(alpha[j], beta[j]));
        sum_lo += products.back().lo();
        sum_hi += products.back().hi();
    }
    if (!(sum_lo > 0.0))
        throw ComputationError("final weights undefined: lower bounds of alpha*beta sum to zero");

    IntervalWeightVector out;
    out.reserve(m);
    for (const auto& p : products)
        out.emplace_back(p.lo() / sum_hi, std::min(1.0, p.hi() / sum_lo));
    return out;
}

WeightSet compute_weights(const DecisionProblem& problem, const NormalizedMatrix& x) {
    std::vector<std::string> names;
    names.reserve(problem.attribute_count());
    for (const auto& a : problem.attributes)
        names.push_back(a.name);

    WeightSet ws;
    ws.subjective = subjective_weights(problem.expert_weights);
    ws.optimization = objective_weights_opt(x);
    ws.entropy_lower = entropy_weights(lower_bounds(x), names);
    ws.entropy_upper = entropy_weights(upper_bounds(x), names);
    ws.objective = comprehensive_objective(ws.optimization, ws.entropy_lower, ws.entropy_upper);
    ws.final = final_weights(ws.subjective, ws.objective);
    return ws;
}

} // namespace greyrank
