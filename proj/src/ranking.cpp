#include "greyrank/ranking.hpp"

#include "greyrank/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace greyrank {

namespace {

void check_same_length(std::span<const double> a, std::span<const double> b, const char* what) {
    if (a.size() != b.size())
        throw ValidationError(std::string(what) + ": degree vectors differ in length");
}

RankingResult finish(Method method, std::vector<double> scores) {
    RankingResult r;
    r.method = method;
    auto order = scores_to_ranks(scores);
    r.scores = std::move(scores);
    r.ranks = std::move(order.ranks);
    r.tied = order.tied;
    if (r.tied)
        r.flags.emplace_back("tie: equal scores ordered by plan index");
    return r;
}

} // namespace

std::string_view to_string(Method method) noexcept {
    switch (method) {
    case Method::GreyTopsis:
        return "topsis";
    case Method::GreyIncidence:
        return "incidence";
    case Method::MaxEntropyIncidence:
        return "entropy";
    }
    return "unknown";
}

Method parse_method(std::string_view text) {
    if (text == "topsis")
        return Method::GreyTopsis;
    if (text == "incidence")
        return Method::GreyIncidence;
    if (text == "entropy")
        return Method::MaxEntropyIncidence;
    throw ValidationError("unknown method '" + std::string(text) + "' (expected topsis, incidence or entropy)");
}

IntervalMatrix blend_preference(const NormalizedMatrix& x, const std::optional<std::vector<GreyInterval>>& q) {
    if (!q)
        return x;
    if (q->size() != x.rows())
        throw ValidationError("preferences: expected " + std::to_string(x.rows()) + " entries, got " +
                              std::to_string(q->size()));
    IntervalMatrix z(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const auto& qi = (*q)[i];
        if (!qi.within(0.0, 1.0))
            throw ValidationError("preference " + std::to_string(i) + " must lie within [0, 1]");
        for (std::size_t j = 0; j < x.cols(); ++j)
            z(i, j) = add(scale(0.5, qi), scale(0.5, x(i, j)));
    }
    return z;
}

WeightedMatrix weighted_matrix(const IntervalMatrix& z, std::span<const GreyInterval> w) {
    if (w.size() != z.cols())
        throw ValidationError("weight vector has " + std::to_string(w.size()) + " entries for " +
                              std::to_string(z.cols()) + " attributes");
    WeightedMatrix out{z, IntervalMatrix(z.rows(), z.cols())};
    for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t j = 0; j < z.cols(); ++j)
            out.weighted(i, j) = mul(w[j], z(i, j));
    return out;
}

IdealVectors ideal_vectors(const IntervalMatrix& y) {
    if (y.rows() == 0)
        throw ValidationError("ideal vectors need at least one plan");
    IdealVectors ideals;
    for (std::size_t j = 0; j < y.cols(); ++j) {
        double max_lo = y(0, j).lo(), max_hi = y(0, j).hi();
        double min_lo = max_lo, min_hi = max_hi;
        for (std::size_t i = 1; i < y.rows(); ++i) {
            max_lo = std::max(max_lo, y(i, j).lo());
            max_hi = std::max(max_hi, y(i, j).hi());
            min_lo = std::min(min_lo, y(i, j).lo());
            min_hi = std::min(min_hi, y(i, j).hi());
        }
        ideals.positive.emplace_back(max_lo, max_hi);
        ideals.negative.emplace_back(min_lo, min_hi);
    }
    return ideals;
}

RankingResult topsis_scores(const IntervalMatrix& y, const IdealVectors& ideals) {
    const std::size_t n = y.rows();
    const std::size_t m = y.cols();
    if (ideals.positive.size() != m || ideals.negative.size() != m)
        throw ValidationError("ideal vectors do not match the weighted matrix");

    std::vector<double> d_plus(n), d_minus(n), scores(n);
    std::vector<std::string> degenerate;
    for (std::size_t i = 0; i < n; ++i) {
        double sp = 0.0, sm = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const auto& v = y(i, j);
            const auto& p = ideals.positive[j];
            const auto& q = ideals.negative[j];
            sp += (v.hi() - p.hi()) * (v.hi() - p.hi()) + (v.lo() - p.lo()) * (v.lo() - p.lo());
            sm += (v.hi() - q.hi()) * (v.hi() - q.hi()) + (v.lo() - q.lo()) * (v.lo() - q.lo());
        }
        d_plus[i] = std::sqrt(sp);
        d_minus[i] = std::sqrt(sm);
        const double denom = d_plus[i] + d_minus[i];
        if (denom > 0.0) {
            scores[i] = d_minus[i] / denom;
        } else {
            scores[i] = 0.5;
            degenerate.push_back(std::to_string(i));
        }
    }

    auto r = finish(Method::GreyTopsis, std::move(scores));
    r.trace.push_back({"d_plus", std::move(d_plus)});
    r.trace.push_back({"d_minus", std::move(d_minus)});
    for (const auto& i : degenerate)
        r.flags.push_back("degenerate: plan index " + i + " coincides with both ideals, score set to 0.5");
    return r;
}

IncidenceMatrices incidence_coefficients(const IntervalMatrix& y, const IdealVectors& ideals, double rho) {
    if (!(rho > 0.0 && rho < 1.0))
        throw ValidationError("rho must lie in (0, 1)");
    const std::size_t n = y.rows();
    const std::size_t m = y.cols();
    if (ideals.positive.size() != m || ideals.negative.size() != m)
        throw ValidationError("ideal vectors do not match the weighted matrix");

    auto coefficients = [&](const std::vector<GreyInterval>& ideal, bool& degenerate) {
        Grid<double> d(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                d(i, j) = distance(y(i, j), ideal[j]);
        const auto [lo_it, hi_it] = std::minmax_element(d.data().begin(), d.data().end());
        const double dmin = *lo_it;
        const double dmax = *hi_it;
        Grid<double> r(n, m, 1.0);
        degenerate = !(dmax > 0.0);
        if (degenerate)
            return r;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                r(i, j) = d(i, j) == dmin ? 1.0 : (dmin + rho * dmax) / (d(i, j) + rho * dmax);
        return r;
    };

    IncidenceMatrices out;
    out.r_plus = coefficients(ideals.positive, out.degenerate_plus);
    out.r_minus = coefficients(ideals.negative, out.degenerate_minus);
    return out;
}

IncidenceDegrees incidence_degrees(const IncidenceMatrices& r) {
    const std::size_t n = r.r_plus.rows();
    const auto m = static_cast<double>(r.r_plus.cols());
    IncidenceDegrees g{std::vector<double>(n), std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const auto rp = r.r_plus.row(i);
        const auto rm = r.r_minus.row(i);
        g.plus[i] = std::accumulate(rp.begin(), rp.end(), 0.0) / m;
        g.minus[i] = std::accumulate(rm.begin(), rm.end(), 0.0) / m;
    }
    return g;
}

RankingResult incidence_scores(std::span<const double> g_plus, std::span<const double> g_minus, double theta_plus,
                               double theta_minus) {
    check_same_length(g_plus, g_minus, "incidence scores");
    MethodParams check;
    check.theta_plus = theta_plus;
    check.theta_minus = theta_minus;
    check.validate();

    std::vector<double> scores(g_plus.size());
    const bool pure = theta_plus == 1.0 && theta_minus == 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (pure) {
            scores[i] = g_plus[i];
        } else {
            const double a = g_plus[i] * theta_plus;
            scores[i] = a / (a + g_minus[i] * theta_minus);
        }
    }
    auto r = finish(Method::GreyIncidence, std::move(scores));
    r.trace.push_back({"g_plus", {g_plus.begin(), g_plus.end()}});
    r.trace.push_back({"g_minus", {g_minus.begin(), g_minus.end()}});
    return r;
}

MaxEntropyWeights logistic_weights(double s) {
    if (std::isnan(s))
        throw ComputationError("max-entropy exponent is NaN");
    MaxEntropyWeights w;
    w.exponent = s;
    if (s >= 0.0) {
        const double e = std::exp(-s);  // in (0, 1]
        w.beta2 = e / (1.0 + e);
        w.beta1 = 1.0 - w.beta2;
    } else {
        const double e = std::exp(s);
        w.beta1 = e / (1.0 + e);
        w.beta2 = 1.0 - w.beta1;
    }
    return w;
}

MaxEntropyWeights max_entropy_weights(std::span<const double> g_plus, std::span<const double> g_minus) {
    check_same_length(g_plus, g_minus, "max-entropy weights");
    if (g_plus.empty())
        throw ValidationError("max-entropy weights need at least one plan");
    double s = 0.0;
    for (std::size_t i = 0; i < g_plus.size(); ++i)
        s += g_plus[i] + g_minus[i] - 1.0;
    return logistic_weights(s);
}

RankingResult entropy_incidence_scores(std::span<const double> g_plus, std::span<const double> g_minus,
                                       double beta1, double beta2) {
    check_same_length(g_plus, g_minus, "comprehensive incidence scores");
    if (!(beta1 >= 0.0 && beta2 >= 0.0) || std::abs(beta1 + beta2 - 1.0) > kWeightSumTolerance)
        throw ValidationError("beta1 and beta2 must be non-negative and sum to 1");
    std::vector<double> scores(g_plus.size());
    for (std::size_t i = 0; i < scores.size(); ++i)
        scores[i] = beta1 * g_plus[i] + beta2 * (1.0 - g_minus[i]);
    auto r = finish(Method::MaxEntropyIncidence, std::move(scores));
    r.trace.push_back({"g_plus", {g_plus.begin(), g_plus.end()}});
    r.trace.push_back({"g_minus", {g_minus.begin(), g_minus.end()}});
    r.trace.push_back({"beta", {beta1, beta2}});
    return r;
}

RankOrder scores_to_ranks(std::span<const double> scores, double tie_tolerance) {
    for (double s : scores)
        if (!std::isfinite(s))
            throw ValidationError("scores must be finite");
    RankOrder out;
    out.order.resize(scores.size());
    std::iota(out.order.begin(), out.order.end(), std::size_t{0});
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    // Consecutive scores within the tolerance form one tie group, reordered by
    // plan index.
    for (std::size_t begin = 0; begin < out.order.size();) {
        std::size_t end = begin + 1;
        while (end < out.order.size() && scores[out.order[end - 1]] - scores[out.order[end]] <= tie_tolerance)
            ++end;
        if (end - begin > 1) {
            out.tied = true;
            std::sort(out.order.begin() + static_cast<std::ptrdiff_t>(begin),
                      out.order.begin() + static_cast<std::ptrdiff_t>(end));
        }
        begin = end;
    }

    out.ranks.resize(scores.size());
    for (std::size_t r = 0; r < out.order.size(); ++r)
        out.ranks[out.order[r]] = static_cast<int>(r + 1);
    return out;
}

BordaResult weighted_borda(std::span<const std::vector<int>> rank_vectors, std::span<const double> weights) {
    if (rank_vectors.empty())
        throw ValidationError("Borda fusion needs at least one rank vector");
    if (weights.size() != rank_vectors.size())
        throw ValidationError("Borda fusion: " + std::to_string(weights.size()) + " weights for " +
                              std::to_string(rank_vectors.size()) + " rank vectors");
    double weight_sum = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0)
            throw ValidationError("Borda weights must be non-negative");
        weight_sum += w;
    }
    if (std::abs(weight_sum - 1.0) > kWeightSumTolerance)
        throw ValidationError("Borda weights must sum to 1");

    const std::size_t n = rank_vectors.front().size();
    for (const auto& ranks : rank_vectors) {
        if (ranks.size() != n)
            throw ValidationError("Borda fusion: rank vectors differ in length");
        std::vector<bool> seen(n, false);
        for (int r : ranks) {
            if (r < 1 || static_cast<std::size_t>(r) > n || seen[r - 1])
                throw ValidationError("Borda fusion: rank vector is not a permutation of 1..n");
            seen[r - 1] = true;
        }
    }

    BordaResult out;
    out.scores.assign(n, 0.0);
    for (std::size_t k = 0; k < rank_vectors.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            out.scores[i] += weights[k] * static_cast<double>(static_cast<int>(n) - rank_vectors[k][i]);
    out.order = scores_to_ranks(out.scores, kBordaTieTolerance);
    return out;
}

} // namespace greyrank
