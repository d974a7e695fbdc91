#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace facloc {

/// A point in R^d. Coordinates must be finite.
using Point = std::vector<double>;

/// An indexed multi-set of n points sharing one dimension. Index order is
/// stable and meaningful: index i identifies agent i. Duplicates permitted,
/// never deduplicated.
struct Dataset {
    int dim = 1;
    std::vector<Point> points;

    Dataset() = default;
    Dataset(int d, std::vector<Point> pts);

    /// Convenience for 1-D data.
    static Dataset from_values(const std::vector<double>& values);

    std::size_t size() const { return points.size(); }
    /// 1-D view; throws unless dim == 1.
    std::vector<double> values() const;
    /// Length of the bounding-box diagonal (0 for a single location).
    double diameter() const;
    void validate() const;
};

/// Predictions for a reference dataset together with the claimed accuracy
/// parameters: at most a delta fraction arbitrarily wrong, the rest within
/// eps. delta must lie in [0, 0.5).
struct PredictionSet {
    Dataset predictions;
    double epsilon = 0.0;
    double delta = 0.0;
};

enum class TieRule {
    lowest_center_index,
    balance_seeking,
};

/// k centers plus the center-induced assignment of every dataset index and
/// the resulting k-medians cost.
struct FacilitySolution {
    std::vector<Point> centers;
    std::vector<int> assignment;  // dataset index -> center index
    double cost = 0.0;

    std::vector<std::size_t> cluster_sizes() const;
};

double distance(const Point& p, const Point& q);

/// k-medians (social) cost: sum over points of the distance to the nearest
/// center. F must be nonempty.
double kmed_cost(const Dataset& X, const std::vector<Point>& centers);

/// Hausdorff distance between two nonempty finite point sets.
double hausdorff(const std::vector<Point>& U, const std::vector<Point>& W);

/// Assign every point to a nearest center. Under lowest_center_index,
/// equidistant points go to the smallest center index; under balance_seeking,
/// ties are spent greedily on the currently smallest eligible cluster.
FacilitySolution induced_partition(const Dataset& X,
                                   const std::vector<Point>& centers,
                                   TieRule tie_rule = TieRule::lowest_center_index);

/// Largest beta for which the partition is beta-balanced: min_i |C_i| / n.
double balance_of(const FacilitySolution& sol);

/// |{i : d(x_i, x'_i) > eps}|. The predictions meet the (eps, delta) accuracy
/// claim iff this is at most floor(delta * n).
std::size_t count_incorrect(const Dataset& X, const Dataset& Xp, double eps);

}  // namespace facloc
