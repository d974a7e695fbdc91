#include "facloc/robustness.hpp"

#include "facloc/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace facloc {

namespace {

std::size_t corruption_budget(double delta, std::size_t n) {
    if (delta < 0.0 || delta >= 0.5)
        throw std::invalid_argument("delta must lie in [0, 0.5)");
    return static_cast<std::size_t>(std::floor(delta * static_cast<double>(n) + 1e-9));
}

}  // namespace

Dataset apply_corruption(const Dataset& X, const Corruption& c, double delta) {
    if (c.indices.size() != c.replacements.size())
        throw std::invalid_argument("apply_corruption: index/replacement length mismatch");
    if (c.indices.size() > corruption_budget(delta, X.size()))
        throw std::invalid_argument("apply_corruption: corruption exceeds budget");
    Dataset Xp = X;
    std::vector<bool> seen(X.size(), false);
    for (std::size_t t = 0; t < c.indices.size(); ++t) {
        const std::size_t i = c.indices[t];
        if (i >= X.size()) throw std::invalid_argument("apply_corruption: index out of range");
        if (seen[i]) throw std::invalid_argument("apply_corruption: duplicate index");
        seen[i] = true;
        if (c.replacements[t].size() != static_cast<std::size_t>(X.dim))
            throw std::invalid_argument("apply_corruption: replacement dimension mismatch");
        Xp.points[i] = c.replacements[t];
    }
    Xp.validate();
    return Xp;
}

std::vector<Point> corruption_candidate_pool(const Dataset& X, int axis_points) {
    if (axis_points < 2) throw std::invalid_argument("corruption_candidate_pool: axis_points < 2");
    const std::size_t d = static_cast<std::size_t>(X.dim);
    std::vector<double> lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
        lo[j] = hi[j] = X.points[0][j];
        for (const auto& p : X.points) {
            lo[j] = std::min(lo[j], p[j]);
            hi[j] = std::max(hi[j], p[j]);
        }
    }

    std::vector<Point> pool = X.points;

    // Axis grid spanning twice the bounding box.
    std::vector<std::vector<double>> axis(d);
    for (std::size_t j = 0; j < d; ++j) {
        const double c = 0.5 * (lo[j] + hi[j]);
        const double w = hi[j] - lo[j];
        if (w == 0.0) {
            axis[j] = {c};
        } else {
            for (int t = 0; t < axis_points; ++t)
                axis[j].push_back(c - w + 2.0 * w * t / (axis_points - 1));
        }
    }
    Point g(d);
    auto product = [&](auto&& self, std::size_t j) -> void {
        if (j == d) {
            pool.push_back(g);
            return;
        }
        for (double v : axis[j]) {
            g[j] = v;
            self(self, j + 1);
        }
    };
    product(product, 0);

    const double far = 1e6 * std::max(X.diameter(), 1.0);
    for (std::size_t j = 0; j < d; ++j) {
        Point c(d);
        for (std::size_t t = 0; t < d; ++t) c[t] = 0.5 * (lo[t] + hi[t]);
        c[j] += far;
        pool.push_back(c);
        c[j] -= 2.0 * far;
        pool.push_back(c);
    }
    return pool;
}

void for_each_corruption(const Dataset& X, double delta,
                         const std::vector<Point>& pool,
                         const std::function<void(const Dataset&, const Corruption&)>& visit) {
    const std::size_t n = X.size();
    const std::size_t r = corruption_budget(delta, n);

    Corruption c;
    Dataset work = X;
    visit(work, c);
    if (r == 0 || pool.empty()) return;

    std::vector<std::size_t> idx;
    std::vector<std::size_t> rep;  // pool indices, non-decreasing

    auto fill_reps = [&](auto&& self, std::size_t slot, std::size_t min_pool) -> void {
        if (slot == idx.size()) {
            c.indices = idx;
            c.replacements.clear();
            for (std::size_t t = 0; t < idx.size(); ++t) {
                c.replacements.push_back(pool[rep[t]]);
                work.points[idx[t]] = pool[rep[t]];
            }
            visit(work, c);
            for (std::size_t t = 0; t < idx.size(); ++t)
                work.points[idx[t]] = X.points[idx[t]];
            return;
        }
        for (std::size_t p = min_pool; p < pool.size(); ++p) {
            rep[slot] = p;
            self(self, slot + 1, p);
        }
    };
    auto pick_indices = [&](auto&& self, std::size_t start, std::size_t left) -> void {
        if (left == 0) {
            rep.assign(idx.size(), 0);
            fill_reps(fill_reps, 0, 0);
            return;
        }
        for (std::size_t i = start; i + left <= n; ++i) {
            idx.push_back(i);
            self(self, i + 1, left - 1);
            idx.pop_back();
        }
    };
    for (std::size_t s = 1; s <= r; ++s) pick_indices(pick_indices, 0, s);
}

RobustnessReport adversary_search(const Dataset& X, double delta, const Estimator& f,
                                  AdvObjective objective, AdvMode mode,
                                  int budget, std::uint64_t seed) {
    const std::size_t n = X.size();
    const std::size_t r = corruption_budget(delta, n);
    const auto F = f(X);
    const double base = kmed_cost(X, F);

    RobustnessReport rep;
    double best = -1.0;
    auto consider = [&](const Dataset& Xp, const Corruption& c) {
        const auto Fp = f(Xp);
        const double rho = hausdorff(F, Fp);
        const double cost = kmed_cost(X, Fp);
        double gamma;
        if (base > 0.0)
            gamma = cost / base;
        else
            gamma = cost > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
        const double score = objective == AdvObjective::distance ? rho : gamma;
        if (score > best) {
            best = score;
            rep.rho_observed = rho;
            rep.gamma_observed = gamma;
            rep.witness = c;
        }
    };

    if (mode == AdvMode::exhaustive) {
        if (n > 12 || r > 3)
            throw std::invalid_argument("adversary_search: instance too large for exhaustive mode");
        const auto pool = corruption_candidate_pool(X);
        for_each_corruption(X, delta, pool, consider);
    } else {
        const auto pool = corruption_candidate_pool(X);
        std::mt19937_64 rng(seed);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        Corruption c;
        Dataset work = X;
        consider(work, c);
        for (int t = 0; t < budget && r > 0; ++t) {
            const std::size_t s =
                std::uniform_int_distribution<std::size_t>(1, r)(rng);
            std::shuffle(perm.begin(), perm.end(), rng);
            c.indices.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(s));
            c.replacements.clear();
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            for (std::size_t q = 0; q < s; ++q) c.replacements.push_back(pool[pick(rng)]);
            work = apply_corruption(X, c, delta);
            consider(work, c);
        }
    }
    return rep;
}

double one_median_rho_bound(const Dataset& X, double delta) {
    const double opt = geometric_median(X).objective;
    return 2.0 * opt / ((1.0 - 2.0 * delta) * static_cast<double>(X.size()));
}

double one_median_gamma_bound(double delta) {
    return 1.0 + 4.0 * delta / (1.0 - 2.0 * delta);
}

double balanced_gamma_bound(int k, double b) {
    return 1.0 + 4.0 * static_cast<double>(k) / (b - 2.0 - 2.0 * static_cast<double>(k));
}

double balanced_rho_bound(int k, double b, double delta, std::size_t n, double opt) {
    return 2.0 * static_cast<double>(k) * opt /
           (delta * static_cast<double>(n) * (b - 2.0 - 2.0 * static_cast<double>(k)));
}

SwitchCheck switch_inequality_check(const std::vector<Point>& F,
                               const std::vector<Point>& Fp,
                               const Dataset& X, double delta) {
    SwitchCheck sc;
    sc.rho = hausdorff(F, Fp);
    sc.lhs = kmed_cost(X, Fp);
    const double r = std::floor(delta * static_cast<double>(X.size()) + 1e-9);
    sc.rhs = kmed_cost(X, F) + 2.0 * r * sc.rho;
    sc.holds = sc.lhs <= sc.rhs + 1e-9 * (1.0 + sc.rhs);
    return sc;
}

namespace {

std::size_t as_count(double v, const char* what) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9 || r < 0.0)
        throw std::invalid_argument(std::string("named_instance: ") + what +
                                    " must be a nonnegative integer");
    return static_cast<std::size_t>(r);
}

double param(const std::map<std::string, double>& p, const std::string& key, double dflt) {
    auto it = p.find(key);
    return it == p.end() ? dflt : it->second;
}

Dataset repeat_1d(const std::vector<std::pair<double, std::size_t>>& groups) {
    std::vector<double> v;
    for (const auto& [val, cnt] : groups)
        for (std::size_t i = 0; i < cnt; ++i) v.push_back(val);
    return Dataset::from_values(v);
}

}  // namespace

NamedInstance named_instance(const std::string& id,
                             const std::map<std::string, double>& params) {
    NamedInstance ni;
    ni.id = id;
    ni.params = params;

    if (id == "example-1-1") {
        const std::size_t n = as_count(param(params, "n", 10), "n");
        const double M = param(params, "M", 1e6);
        if (n < 4 || n % 2 != 0)
            throw std::invalid_argument("example-1-1: n must be even and >= 4");
        ni.X = repeat_1d({{0.0, n / 2}, {1.0, n / 2}});
        ni.Xp = repeat_1d({{0.0, n / 2}, {1.0, n / 2 - 1}, {M, 1}});
        ni.params["n"] = static_cast<double>(n);
        ni.params["M"] = M;
        ni.params["delta"] = 1.0 / static_cast<double>(n);
        ni.expected["hausdorff_lb"] = M / 2.0;
        return ni;
    }
    if (id == "cor-tight") {
        const std::size_t n = as_count(param(params, "n", 100), "n");
        const double delta = param(params, "delta", 0.1);
        const std::size_t r = as_count(delta * static_cast<double>(n), "delta*n");
        const std::size_t zeros = as_count((0.5 - delta) * static_cast<double>(n) + 1.0,
                                           "(0.5-delta)n+1");
        const std::size_t ones = n - zeros;
        if (r == 0 || ones < r)
            throw std::invalid_argument("cor-tight: inconsistent (n, delta)");
        ni.X = repeat_1d({{0.0, zeros}, {1.0, ones}});
        ni.Xp = repeat_1d({{0.0, zeros}, {1.0, ones - r}, {0.0, r}});
        ni.params["n"] = static_cast<double>(n);
        ni.params["delta"] = delta;
        ni.expected["gamma"] = static_cast<double>(ones) / static_cast<double>(zeros);
        ni.expected["gamma_bound"] = one_median_gamma_bound(delta);
        return ni;
    }
    if (id == "propmech-tight") {
        const std::size_t n = as_count(param(params, "n", 10), "n");
        if (n < 4 || n % 2 != 0)
            throw std::invalid_argument("propmech-tight: n must be even and >= 4");
        ni.X = repeat_1d({{0.0, n / 2}, {1.0, n / 2 - 1}, {2.0, 1}});
        ni.Xp = ni.X;
        ni.params["n"] = static_cast<double>(n);
        ni.params["h_S"] = 0.0;
        const double half = static_cast<double>(n) / 2.0;
        ni.expected["ratio"] = 3.0 * (half - 1.0) / (half + 1.0);
        return ni;
    }
    if (id == "bcc-5-3") {
        const std::size_t n = as_count(param(params, "n", 800), "n");
        const double eps = param(params, "eps", 0.01);
        const double M = param(params, "M", 1e6);
        if (n % 4 != 0) throw std::invalid_argument("bcc-5-3: n must be divisible by 4");
        ni.X = repeat_1d({{0.0, n / 2}, {-0.5 - eps, n / 4}, {-1.0, n / 4}, {M, 1}});
        ni.Xp = repeat_1d({{0.0, n / 2}, {-0.5 - eps, n / 4}, {-1.0, n / 4}, {-1.0, 1}});
        ni.params["n"] = static_cast<double>(n);
        ni.params["eps"] = eps;
        ni.params["M"] = M;
        ni.params["delta"] = 1.0 / static_cast<double>(n + 1);
        ni.params["b"] = 46.0;
        ni.expected["ratio_lb"] = 5.0 / 3.0;
        return ni;
    }
    if (id == "minbb-tight") {
        const std::size_t n = as_count(param(params, "n", 4), "n");
        const std::size_t d = as_count(param(params, "d", 2), "d");
        if (n < 2 || d < 1) throw std::invalid_argument("minbb-tight: need n >= 2, d >= 1");
        std::vector<Point> pts(n, Point(d, -1.0));
        pts.back() = Point(d, 1.0);
        ni.X = Dataset(static_cast<int>(d), pts);
        ni.Xp = ni.X;
        ni.params["n"] = static_cast<double>(n);
        ni.params["d"] = static_cast<double>(d);
        ni.expected["ratio"] = static_cast<double>(n - 1);
        return ni;
    }
    if (id == "second-fac-manip") {
        ni.X = Dataset::from_values({3.0, 5.0, 14.0});
        ni.Xp = ni.X;
        ni.params["h_S"] = 0.0;
        ni.expected["agent"] = 0.0;
        ni.expected["deviation"] = 5.0;
        ni.expected["cost_true"] = 3.0;
        ni.expected["cost_dev"] = 2.0;
        return ni;
    }
    if (id == "convexhull-manip") {
        ni.X = Dataset(2, {{-0.5, 0.0}, {0.5, 0.0}, {0.0, 1.0}});
        ni.Xp = ni.X;
        // Target point for the hull-projection variant; deviating the apex
        // agent to (0.5, 1) drags the projection toward it.
        ni.params["o_x"] = 1.0;
        ni.params["o_y"] = 0.5;
        ni.expected["agent"] = 2.0;
        ni.expected["dev_x"] = 0.5;
        ni.expected["dev_y"] = 1.0;
        return ni;
    }
    throw std::invalid_argument("named_instance: unknown id " + id);
}

}  // namespace facloc
