#pragma once

#include <optional>

#include "facloc/core.hpp"

namespace facloc {

/// Result of the iterative 1-median solver. `converged` is false when the
/// iteration cap is hit; callers can inspect `residual` in that case.
struct GeoMedianResult {
    Point point;
    int iterations = 0;
    double residual = 0.0;
    double objective = 0.0;
    bool converged = true;
};

/// Config for the exact balanced k-medians solver on the line.
struct BalancedSolverConfig {
    int k = 1;
    double beta = 0.0;  // each cluster must hold at least ceil(beta*n) points
};

/// Lower median: element at 0-based sorted index ceil(n/2)-1. Minimizes the
/// sum of absolute deviations.
double median_1d(const std::vector<double>& values);

/// Per-coordinate lower median.
Point coordinatewise_median(const Dataset& X);

/// 1-median by damped fixed-point iteration starting at the coordinatewise
/// median. Iterates landing on a data point use the modified step so the
/// update stays well defined. d=1 delegates to median_1d and is exact.
GeoMedianResult geometric_median(const Dataset& X, double tol = 1e-9,
                                 int max_iter = 10000);

/// Mean absolute deviation: kmed_1 cost at the 1-median divided by n.
double mad(const Dataset& X);

/// Exact optimum over contiguous partitions of the sorted points into k
/// segments of at least ceil(beta*n) points each, segment centers at lower
/// medians. Ties broken by the smallest split-index vector. Returns nullopt
/// when n < k*ceil(beta*n), the only infeasible case.
/// beta=0 gives the exact unconstrained k-medians on the line.
std::optional<FacilitySolution> balanced_kmedians_line(const Dataset& X,
                                                       const BalancedSolverConfig& cfg);

/// Brute force over center k-tuples drawn from the data points, with
/// balance-seeking induced partitions filtered by the beta constraint.
/// Test oracle; rejects instances with more than 1e6 candidate tuples.
FacilitySolution kmedians_bruteforce(const Dataset& X, int k, double beta = 0.0);

/// Big Cluster Center: balanced 2-medians of Xp at beta=(b-1)*delta, then the
/// center whose side (by distance, ties to the left center) holds at least
/// half the points. Throws if the inner solver is infeasible.
Point bcc(const Dataset& Xp, double b, double delta);

struct SecondFacilityResult {
    Point facility;
    double cost = 0.0;  // kmed_2 of X against {h_S, facility}
};

/// Exact best second facility on the line, searched over data-point
/// candidates. OPT oracle only; not strategyproof as a mechanism.
SecondFacilityResult best_second_facility(const Dataset& X, const Point& h_S);

}  // namespace facloc
