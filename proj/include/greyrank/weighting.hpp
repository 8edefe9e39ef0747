#pragma once

#include "greyrank/decision_model.hpp"
#include "greyrank/grey_interval.hpp"
#include "greyrank/grid.hpp"

#include <span>
#include <string>
#include <vector>

namespace greyrank {

using WeightVector = std::vector<double>;
using IntervalWeightVector = std::vector<GreyInterval>;

// Componentwise [min, max] envelope of the experts' weight vectors.
IntervalWeightVector subjective_weights(std::span<const std::vector<double>> expert_weights);

struct AhpResult {
    WeightVector weights;      // normalized principal eigenvector
    double lambda_max = 0.0;
    double consistency_index = 0.0;
    double consistency_ratio = 0.0;
    int iterations = 0;
    // Consistency ratio above 0.1.
    bool inconsistent() const noexcept { return consistency_ratio > 0.1; }
};

// Priority vector of a positive reciprocal pairwise comparison matrix by power
// iteration (tolerance 1e-10, at most 1000 iterations). Consistency ratio uses
// Saaty's random index table, which covers orders up to 15.
AhpResult ahp_eigenvector(const Grid<double>& pairwise);

// D_j: sum over all ordered plan pairs of the interval distance in column j.
std::vector<double> deviation_totals(const NormalizedMatrix& x);

// Deviation-maximizing objective weights, D_j normalized to sum 1.
WeightVector objective_weights_opt(const NormalizedMatrix& x);

// Normalized entropy E_j of each column of a non-negative real matrix, with
// 0 ln 0 = 0. A column of identical entries has entropy exactly 1.
std::vector<double> column_entropies(const Grid<double>& bounds, std::span<const std::string> attributes = {});

// Entropy weights (1 - E_j) / sum(1 - E_k).
WeightVector entropy_weights(const Grid<double>& bounds, std::span<const std::string> attributes = {});

// Lower- or upper-bound matrix of an interval matrix.
Grid<double> lower_bounds(const IntervalMatrix& x);
Grid<double> upper_bounds(const IntervalMatrix& x);

// Componentwise envelope of the optimization weights and the two entropy weights.
IntervalWeightVector comprehensive_objective(std::span<const double> beta_opt, std::span<const double> beta_lo,
                                             std::span<const double> beta_hi);

// Multiplicative composition normalized by outer-bound interval division:
// w_j = [p_j.lo / sum(p.hi), min(1, p_j.hi / sum(p.lo))] with p_j = alpha_j * beta_j.
IntervalWeightVector final_weights(std::span<const GreyInterval> alpha, std::span<const GreyInterval> beta);

struct WeightSet {
    IntervalWeightVector subjective;   // alpha
    WeightVector optimization;         // beta^opt
    WeightVector entropy_lower;        // beta^ent from lower bounds
    WeightVector entropy_upper;        // beta^ent from upper bounds
    IntervalWeightVector objective;    // beta
    IntervalWeightVector final;        // w
};

// Full weighting stage on an already normalized matrix.
WeightSet compute_weights(const DecisionProblem& problem, const NormalizedMatrix& x);

} // namespace greyrank
