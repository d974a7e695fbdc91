#include "facloc/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace facloc {

Dataset::Dataset(int d, std::vector<Point> pts) : dim(d), points(std::move(pts)) {
    validate();
}

Dataset Dataset::from_values(const std::vector<double>& values) {
    Dataset ds;
    ds.dim = 1;
    ds.points.reserve(values.size());
    for (double v : values) ds.points.push_back({v});
    ds.validate();
    return ds;
}

std::vector<double> Dataset::values() const {
    if (dim != 1) throw std::invalid_argument("Dataset::values: dimension is not 1");
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p[0]);
    return out;
}

double Dataset::diameter() const {
    if (points.empty()) return 0.0;
    double sq = 0.0;
    for (int j = 0; j < dim; ++j) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const auto& p : points) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
        }
        sq += (hi - lo) * (hi - lo);
    }
    return std::sqrt(sq);
}

void Dataset::validate() const {
    if (dim < 1) throw std::invalid_argument("Dataset: dimension must be >= 1");
    if (points.empty()) throw std::invalid_argument("Dataset: needs at least one point");
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("Dataset: point dimension mismatch");
        for (double c : p)
            if (!std::isfinite(c))
                throw std::invalid_argument("Dataset: non-finite coordinate");
    }
}

std::vector<std::size_t> FacilitySolution::cluster_sizes() const {
    std::vector<std::size_t> sizes(centers.size(), 0);
    for (int c : assignment) sizes.at(static_cast<std::size_t>(c))++;
    return sizes;
}

double distance(const Point& p, const Point& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("distance: dimension mismatch");
    double sq = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        const double d = p[j] - q[j];
        sq += d * d;
    }
    return std::sqrt(sq);
}

double kmed_cost(const Dataset& X, const std::vector<Point>& centers) {
    if (centers.empty()) throw std::invalid_argument("kmed_cost: empty center set");
    double total = 0.0;
    for (const auto& x : X.points) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& f : centers) best = std::min(best, distance(x, f));
        total += best;
    }
    return total;
}

namespace {

double dist_to_set(const Point& p, const std::vector<Point>& S) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : S) best = std::min(best, distance(p, s));
    return best;
}

}  // namespace

double hausdorff(const std::vector<Point>& U, const std::vector<Point>& W) {
    if (U.empty() || W.empty())
        throw std::invalid_argument("hausdorff: empty point set");
    double h = 0.0;
    for (const auto& u : U) h = std::max(h, dist_to_set(u, W));
    for (const auto& w : W) h = std::max(h, dist_to_set(w, U));
    return h;
}

FacilitySolution induced_partition(const Dataset& X,
                                   const std::vector<Point>& centers,
                                   TieRule tie_rule) {
    if (centers.empty())
        throw std::invalid_argument("induced_partition: empty center set");
    const std::size_t n = X.size();
    const std::size_t k = centers.size();

    FacilitySolution sol;
    sol.centers = centers;
    sol.assignment.assign(n, -1);

    std::vector<std::vector<int>> eligible(n);
    std::vector<double> nearest(n);
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::vector<double> d(k);
        for (std::size_t c = 0; c < k; ++c) {
            d[c] = distance(X.points[i], centers[c]);
            best = std::min(best, d[c]);
        }
        nearest[i] = best;
        const double tol = 1e-12 * (1.0 + best);
        for (std::size_t c = 0; c < k; ++c)
            if (d[c] <= best + tol) eligible[i].push_back(static_cast<int>(c));
    }

    if (tie_rule == TieRule::lowest_center_index) {
        for (std::size_t i = 0; i < n; ++i) sol.assignment[i] = eligible[i].front();
    } else {
        std::vector<std::size_t> counts(k, 0);
        // Forced points first, then spend ties on the smallest cluster.
        for (std::size_t i = 0; i < n; ++i)
            if (eligible[i].size() == 1) {
                sol.assignment[i] = eligible[i].front();
                counts[static_cast<std::size_t>(eligible[i].front())]++;
            }
        for (std::size_t i = 0; i < n; ++i) {
            if (sol.assignment[i] >= 0) continue;
            int pick = eligible[i].front();
            for (int c : eligible[i])
                if (counts[static_cast<std::size_t>(c)] < counts[static_cast<std::size_t>(pick)]) pick = c;
            sol.assignment[i] = pick;
            counts[static_cast<std::size_t>(pick)]++;
        }
    }

    sol.cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) sol.cost += nearest[i];
    return sol;
}

double balance_of(const FacilitySolution& sol) {
    const auto sizes = sol.cluster_sizes();
    std::size_t mn = sol.assignment.size();
    for (std::size_t s : sizes) mn = std::min(mn, s);
    return static_cast<double>(mn) / static_cast<double>(sol.assignment.size());
}

std::size_t count_incorrect(const Dataset& X, const Dataset& Xp, double eps) {
    if (X.size() != Xp.size() || X.dim != Xp.dim)
        throw std::invalid_argument("count_incorrect: size or dimension mismatch");
    std::size_t bad = 0;
    for (std::size_t i = 0; i < X.size(); ++i)
        if (distance(X.points[i], Xp.points[i]) > eps) ++bad;
    return bad;
}

}  // namespace facloc
