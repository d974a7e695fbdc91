#include "facloc/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace facloc {

double median_1d(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("median_1d: empty list");
    std::vector<double> v = values;
    const std::size_t idx = (v.size() - 1) / 2;  // lower median
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(idx), v.end());
    return v[idx];
}

Point coordinatewise_median(const Dataset& X) {
    Point m(static_cast<std::size_t>(X.dim));
    std::vector<double> col(X.size());
    for (int j = 0; j < X.dim; ++j) {
        for (std::size_t i = 0; i < X.size(); ++i) col[i] = X.points[i][static_cast<std::size_t>(j)];
        m[static_cast<std::size_t>(j)] = median_1d(col);
    }
    return m;
}

GeoMedianResult geometric_median(const Dataset& X, double tol, int max_iter) {
    GeoMedianResult res;
    if (X.dim == 1) {
        res.point = {median_1d(X.values())};
        res.objective = kmed_cost(X, {res.point});
        return res;
    }

    Point y = coordinatewise_median(X);
    const double scale = std::max(1.0, X.diameter());
    const std::size_t d = static_cast<std::size_t>(X.dim);

    for (int it = 0; it < max_iter; ++it) {
        // Vardi-Zhang step: split off points coinciding with the iterate.
        Point T(d, 0.0);
        Point R(d, 0.0);
        double wsum = 0.0;
        double eta = 0.0;
        for (const auto& x : X.points) {
            const double dist = distance(x, y);
            if (dist <= 1e-15 * scale) {
                eta += 1.0;
                continue;
            }
            const double w = 1.0 / dist;
            wsum += w;
            for (std::size_t j = 0; j < d; ++j) {
                T[j] += w * x[j];
                R[j] += w * (x[j] - y[j]);
            }
        }
        res.iterations = it + 1;
        if (wsum == 0.0) break;  // all points coincide with y
        double rnorm = 0.0;
        for (std::size_t j = 0; j < d; ++j) rnorm += R[j] * R[j];
        rnorm = std::sqrt(rnorm);
        if (eta > 0.0 && rnorm <= eta) break;  // y is optimal
        for (std::size_t j = 0; j < d; ++j) T[j] /= wsum;

        Point y_next(d);
        if (eta == 0.0) {
            y_next = T;
        } else {
            const double gamma = std::min(1.0, eta / rnorm);
            for (std::size_t j = 0; j < d; ++j)
                y_next[j] = (1.0 - gamma) * T[j] + gamma * y[j];
        }
        const double step = distance(y, y_next);
        y = y_next;
        res.residual = step / scale;
        if (res.residual <= tol) break;
        if (it + 1 == max_iter) res.converged = false;
    }

    res.point = y;
    res.objective = kmed_cost(X, {y});
    return res;
}

double mad(const Dataset& X) {
    const auto gm = geometric_median(X);
    return gm.objective / static_cast<double>(X.size());
}

namespace {

struct SortedView {
    std::vector<double> vals;        // sorted values
    std::vector<std::size_t> order;  // sorted position -> original index
};

SortedView sorted_view(const Dataset& X) {
    SortedView sv;
    sv.order.resize(X.size());
    std::iota(sv.order.begin(), sv.order.end(), std::size_t{0});
    const auto v = X.values();
    std::stable_sort(sv.order.begin(), sv.order.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    sv.vals.reserve(X.size());
    for (std::size_t i : sv.order) sv.vals.push_back(v[i]);
    return sv;
}

double segment_median(const std::vector<double>& sorted, std::size_t lo, std::size_t hi) {
    // [lo, hi), lower median of a sorted range
    return sorted[lo + (hi - lo - 1) / 2];
}

double segment_cost(const std::vector<double>& sorted, std::size_t lo, std::size_t hi,
                    double center) {
    double c = 0.0;
    for (std::size_t i = lo; i < hi; ++i) c += std::abs(sorted[i] - center);
    return c;
}

}  // namespace

std::optional<FacilitySolution> balanced_kmedians_line(const Dataset& X,
                                                       const BalancedSolverConfig& cfg) {
    if (X.dim != 1) throw std::invalid_argument("balanced_kmedians_line: needs d=1");
    if (cfg.k < 1) throw std::invalid_argument("balanced_kmedians_line: k must be >= 1");
    const std::size_t n = X.size();
    const std::size_t k = static_cast<std::size_t>(cfg.k);
    std::size_t m = static_cast<std::size_t>(
        std::max(0.0, std::ceil(cfg.beta * static_cast<double>(n) - 1e-9)));
    m = std::max<std::size_t>(m, 1);
    if (m * k > n) return std::nullopt;

    const auto sv = sorted_view(X);

    std::vector<std::size_t> bounds(k + 1, 0);  // segment i = [bounds[i], bounds[i+1])
    bounds[k] = n;
    std::vector<std::size_t> best_bounds;
    double best_cost = std::numeric_limits<double>::infinity();
    bool found = false;

    std::vector<double> centers(k);
    // Enumerate boundaries in lexicographic order; strict improvement keeps
    // the smallest split-index vector on cost ties.
    auto enumerate = [&](auto&& self, std::size_t seg) -> void {
        if (seg == k - 1) {
            if (n - bounds[seg] < m) return;
            for (std::size_t i = 0; i < k; ++i)
                centers[i] = segment_median(sv.vals, bounds[i], bounds[i + 1]);
            double cost = 0.0;
            for (std::size_t i = 0; i < k; ++i)
                cost += segment_cost(sv.vals, bounds[i], bounds[i + 1], centers[i]);
            if (cost < best_cost) {
                best_cost = cost;
                best_bounds.assign(bounds.begin(), bounds.end());
                found = true;
            }
            return;
        }
        const std::size_t lo = bounds[seg] + m;
        const std::size_t remaining = (k - seg - 1) * m;
        if (lo + remaining > n) return;
        for (std::size_t b = lo; b + remaining <= n; ++b) {
            bounds[seg + 1] = b;
            self(self, seg + 1);
        }
    };
    enumerate(enumerate, 0);
    if (!found) return std::nullopt;

    FacilitySolution sol;
    sol.centers.resize(k);
    sol.assignment.assign(n, -1);
    for (std::size_t i = 0; i < k; ++i) {
        sol.centers[i] = {segment_median(sv.vals, best_bounds[i], best_bounds[i + 1])};
        for (std::size_t p = best_bounds[i]; p < best_bounds[i + 1]; ++p)
            sol.assignment[sv.order[p]] = static_cast<int>(i);
    }
    sol.cost = best_cost;
    return sol;
}

FacilitySolution kmedians_bruteforce(const Dataset& X, int k, double beta) {
    if (k < 1) throw std::invalid_argument("kmedians_bruteforce: k must be >= 1");
    const std::size_t n = X.size();
    const std::size_t ku = static_cast<std::size_t>(k);
    if (ku > n) throw std::invalid_argument("kmedians_bruteforce: k > n");
    double combos = 1.0;
    for (std::size_t i = 0; i < ku; ++i)
        combos *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (combos > 1e6)
        throw std::invalid_argument("kmedians_bruteforce: instance too large");

    std::vector<std::size_t> idx(ku);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    FacilitySolution best;
    double best_cost = std::numeric_limits<double>::infinity();
    bool found = false;

    auto consider = [&]() {
        std::vector<Point> centers;
        centers.reserve(ku);
        for (std::size_t i : idx) centers.push_back(X.points[i]);
        auto sol = induced_partition(X, centers, TieRule::balance_seeking);
        if (beta > 0.0 && balance_of(sol) + 1e-12 < beta) return;
        if (sol.cost < best_cost) {
            best_cost = sol.cost;
            best = std::move(sol);
            found = true;
        }
    };

    // Enumerate index combinations in lexicographic order.
    while (true) {
        consider();
        std::size_t i = ku;
        while (i > 0 && idx[i - 1] == n - ku + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < ku; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found)
        throw std::runtime_error("kmedians_bruteforce: no beta-balanced candidate");
    return best;
}

Point bcc(const Dataset& Xp, double b, double delta) {
    const double beta = (b - 1.0) * delta;
    if (beta >= 0.5)
        throw std::invalid_argument("bcc: (b-1)*delta must be below 0.5");
    auto sol = balanced_kmedians_line(Xp, BalancedSolverConfig{2, beta});
    if (!sol) throw std::runtime_error("bcc: balanced 2-medians infeasible");
    const double hL = std::min(sol->centers[0][0], sol->centers[1][0]);
    const double hR = std::max(sol->centers[0][0], sol->centers[1][0]);
    const double tol = 1e-12 * (1.0 + Xp.diameter());
    std::size_t left = 0;
    for (const auto& p : Xp.points)
        if (std::abs(p[0] - hL) <= std::abs(p[0] - hR) + tol) ++left;
    const std::size_t right = Xp.size() - left;
    return {left >= right ? hL : hR};
}

SecondFacilityResult best_second_facility(const Dataset& X, const Point& h_S) {
    SecondFacilityResult best;
    best.cost = std::numeric_limits<double>::infinity();
    for (const auto& x : X.points) {
        const double c = kmed_cost(X, {h_S, x});
        if (c < best.cost) {
            best.cost = c;
            best.facility = x;
        }
    }
    return best;
}

}  // namespace facloc
