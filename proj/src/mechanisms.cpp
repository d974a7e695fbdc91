#include "facloc/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>
#include <stdexcept>

#include "facloc/estimators.hpp"

namespace facloc {

void MechanismInput::validate() const {
    reports.validate();
    predictions.predictions.validate();
    if (reports.size() != predictions.predictions.size() ||
        reports.dim != predictions.predictions.dim)
        throw std::invalid_argument("MechanismInput: reports/predictions shape mismatch");
    if (predictions.delta < 0.0 || predictions.delta >= 0.5)
        throw std::invalid_argument("MechanismInput: delta must lie in [0, 0.5)");
}

bool prediction_branch(double delta, int dim) {
    return 1.0 + 4.0 * delta / (1.0 - 2.0 * delta) <= std::sqrt(static_cast<double>(dim));
}

Point best_choice_single(const MechanismInput& inp) {
    inp.validate();
    if (prediction_branch(inp.predictions.delta, inp.reports.dim))
        return geometric_median(inp.predictions.predictions).point;
    return coordinatewise_median(inp.reports);
}

Point minbb(const Dataset& X, const Point& o) {
    if (o.size() != static_cast<std::size_t>(X.dim))
        throw std::invalid_argument("minbb: dimension mismatch");
    Point out = o;
    for (std::size_t j = 0; j < o.size(); ++j) {
        double lo = X.points[0][j], hi = X.points[0][j];
        for (const auto& p : X.points) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
        }
        out[j] = std::clamp(out[j], lo, hi);
    }
    return out;
}

Point bounded_best_choice(const MechanismInput& inp) {
    return minbb(inp.reports, best_choice_single(inp));
}

FacilitySolution balanced_k_facility(const MechanismInput& inp, int k, double b) {
    inp.validate();
    if (b <= 2.0 * k + 2.0)
        std::cerr << "balanced_k_facility: b <= 2k+2, approximation guarantee void\n";
    const double beta = (b - 1.0) * inp.predictions.delta;
    auto sol = balanced_kmedians_line(inp.predictions.predictions,
                                      BalancedSolverConfig{k, beta});
    if (!sol) throw std::runtime_error("balanced_k_facility: balanced solver infeasible");
    return *sol;
}

OutcomeDistribution prop_mech_distribution(const Dataset& X, const Point& h_S) {
    OutcomeDistribution dist;
    std::vector<double> a(X.size());
    double total = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        a[i] = distance(X.points[i], h_S);
        total += a[i];
    }
    if (total == 0.0) {
        dist.support.push_back({{h_S, X.points[0]}, 1.0});
        return dist;
    }
    // Merge duplicate picks; first-occurrence order keeps output stable.
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (a[i] == 0.0) continue;
        bool merged = false;
        for (auto& e : dist.support) {
            if (e.facilities[1] == X.points[i]) {
                e.p += a[i] / total;
                merged = true;
                break;
            }
        }
        if (!merged) dist.support.push_back({{h_S, X.points[i]}, a[i] / total});
    }
    return dist;
}

Point prop_mech_sample(const Dataset& X, const Point& h_S, std::uint64_t seed) {
    const auto dist = prop_mech_distribution(X, h_S);
    std::mt19937_64 rng(seed);
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double acc = 0.0;
    for (const auto& e : dist.support) {
        acc += e.p;
        if (u < acc) return e.facilities[1];
    }
    return dist.support.back().facilities[1];
}

OutcomeDistribution predict_and_choose(const MechanismInput& inp) {
    inp.validate();
    if (inp.reports.dim != 1)
        throw std::invalid_argument("predict_and_choose: needs d=1");
    const Point h1 = bcc(inp.predictions.predictions, inp.b, inp.predictions.delta);
    return prop_mech_distribution(inp.reports, h1);
}

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Point project_segment(const Point& a, const Point& b, const Point& o) {
    const double vx = b[0] - a[0], vy = b[1] - a[1];
    const double len2 = vx * vx + vy * vy;
    if (len2 == 0.0) return a;
    double t = ((o[0] - a[0]) * vx + (o[1] - a[1]) * vy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return {a[0] + t * vx, a[1] + t * vy};
}

std::vector<Point> convex_hull_2d(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Point> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    return hull;
}

}  // namespace

Point convex_hull_clamp(const Dataset& X, const Point& o) {
    if (X.dim == 1) {
        double lo = X.points[0][0], hi = lo;
        for (const auto& p : X.points) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return {std::clamp(o[0], lo, hi)};
    }
    if (X.dim != 2)
        throw std::invalid_argument("convex_hull_clamp: supports d <= 2 only");
    const auto hull = convex_hull_2d(X.points);
    if (hull.size() == 1) return hull[0];
    if (hull.size() == 2) return project_segment(hull[0], hull[1], o);
    bool inside = true;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        if (cross(a, b, o) < 0) {  // hull is counterclockwise
            inside = false;
            break;
        }
    }
    if (inside) return o;
    Point best = hull[0];
    double best_d = distance(o, best);
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point cand =
            project_segment(hull[i], hull[(i + 1) % hull.size()], o);
        const double d = distance(o, cand);
        if (d < best_d) {
            best_d = d;
            best = cand;
        }
    }
    return best;
}

}  // namespace facloc
