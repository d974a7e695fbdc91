#pragma once

#include <functional>

#include "facloc/core.hpp"
#include "facloc/mechanisms.hpp"

namespace facloc {

/// Expected distance from x to the nearest facility of the outcome.
double agent_expected_cost(const OutcomeDistribution& dist, const Point& x);

/// Expected k-medians cost of X under the outcome distribution.
double expected_social_cost(const OutcomeDistribution& dist, const Dataset& X);

/// A mechanism under audit: maps a report vector to an exact outcome
/// distribution. Predictions and any other exogenous inputs are baked into
/// the closure and stay fixed under deviations.
using MechanismEval = std::function<OutcomeDistribution(const Dataset& reports)>;

struct AuditViolation {
    std::size_t agent = 0;
    Point deviation;
    double cost_true = 0.0;
    double cost_dev = 0.0;
};

struct AuditReport {
    std::vector<AuditViolation> violations;
    double max_gain = 0.0;
};

/// Finite refutation search: for every agent and every candidate deviation
/// (other reports, an axis grid over twice the bounding box, far sentinels),
/// rerun the mechanism with that single report replaced and compare the
/// agent's expected cost at its true location. Strict improvements beyond
/// tolerance are reported; an empty report is evidence, not proof.
AuditReport strategyproofness_audit(const MechanismEval& mech, const Dataset& true_X,
                                    int axis_points = 21);

/// ALG/OPT with the zero conventions: 0/0 -> 1, positive/0 -> infinity.
double approx_ratio(double alg_cost, double opt_cost);

struct RatioSummary {
    std::size_t trials = 0;
    double mean = 0.0;
    double max = 0.0;
    double p95 = 0.0;
};

RatioSummary summarize_ratios(const std::vector<double>& ratios);

}  // namespace facloc
