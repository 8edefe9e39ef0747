#pragma once

#include "greyrank/decision_model.hpp"
#include "greyrank/grey_interval.hpp"
#include "greyrank/grid.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace greyrank {

enum class Method { GreyTopsis, GreyIncidence, MaxEntropyIncidence };

std::string_view to_string(Method method) noexcept;
// Accepts "topsis", "incidence" or "entropy"; throws ValidationError otherwise.
Method parse_method(std::string_view text);

struct WeightedMatrix {
    IntervalMatrix blended;   // z: normalized matrix blended with plan preferences
    IntervalMatrix weighted;  // y = w_j * z_ij
};

struct IdealVectors {
    std::vector<GreyInterval> positive;
    std::vector<GreyInterval> negative;
};

struct IncidenceMatrices {
    Grid<double> r_plus;
    Grid<double> r_minus;
    // Set when every distance of that sign was zero and all coefficients were
    // defined as 1.
    bool degenerate_plus = false;
    bool degenerate_minus = false;
};

// Descending-score ordering. Ties break by ascending plan index.
struct RankOrder {
    std::vector<int> ranks;          // ranks[i] is the 1-based rank of plan i
    std::vector<std::size_t> order;  // order[r] is the plan at rank r + 1
    bool tied = false;               // some plans share an exactly equal score
};

struct TraceEntry {
    std::string name;
    std::vector<double> values;
};

struct RankingResult {
    Method method = Method::GreyTopsis;
    std::vector<double> scores;
    std::vector<int> ranks;
    bool tied = false;
    std::vector<TraceEntry> trace;
    std::vector<std::string> flags;
};

// z_ij = q_i / 2 + x_ij / 2, or z = x when no preferences are given.
IntervalMatrix blend_preference(const NormalizedMatrix& x, const std::optional<std::vector<GreyInterval>>& q);

WeightedMatrix weighted_matrix(const IntervalMatrix& z, std::span<const GreyInterval> w);

// Bound-wise column maxima (positive) and minima (negative).
IdealVectors ideal_vectors(const IntervalMatrix& y);

// Relative approach degree C_i = D_i- / (D_i+ + D_i-). A plan with
// D+ + D- = 0 scores 0.5 and is flagged.
RankingResult topsis_scores(const IntervalMatrix& y, const IdealVectors& ideals);

// Incidence coefficients against both ideals; min and max distances are
// global over all cells, separately per sign.
IncidenceMatrices incidence_coefficients(const IntervalMatrix& y, const IdealVectors& ideals, double rho);

struct IncidenceDegrees {
    std::vector<double> plus;
    std::vector<double> minus;
};

// Row means of the coefficient matrices.
IncidenceDegrees incidence_degrees(const IncidenceMatrices& r);

// C'_i = G+ theta+ / (G+ theta+ + G- theta-); equals G+ when theta+ = 1, theta- = 0.
RankingResult incidence_scores(std::span<const double> g_plus, std::span<const double> g_minus, double theta_plus,
                               double theta_minus);

struct MaxEntropyWeights {
    double beta1 = 0.5;
    double beta2 = 0.5;
    double exponent = 0.0;  // s = sum_i (G+_i + G-_i - 1)
};

// Logistic split (e^s / (1 + e^s), 1 / (1 + e^s)), stable for any finite s.
MaxEntropyWeights logistic_weights(double s);

// Entropy-regularized combination weights of the two incidence degrees.
MaxEntropyWeights max_entropy_weights(std::span<const double> g_plus, std::span<const double> g_minus);

// C''_i = beta1 G+_i + beta2 (1 - G-_i).
RankingResult entropy_incidence_scores(std::span<const double> g_plus, std::span<const double> g_minus,
                                       double beta1, double beta2);

// Scores closer than tie_tolerance to their neighbour in sorted order count as
// tied; the default treats only exactly equal scores as ties.
RankOrder scores_to_ranks(std::span<const double> scores, double tie_tolerance = 0.0);

// Borda scores are sums of weighted integers, so summation order can split
// mathematically equal totals by a few ulps.
inline constexpr double kBordaTieTolerance = 1e-12;

struct BordaResult {
    std::vector<double> scores;
    RankOrder order;
};

// Plan score sum_k weight_k (n - rank_k,i), ranked descending.
BordaResult weighted_borda(std::span<const std::vector<int>> rank_vectors, std::span<const double> weights);

} // namespace greyrank
