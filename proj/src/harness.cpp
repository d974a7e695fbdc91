#include "facloc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "facloc/estimators.hpp"
#include "json.hpp"

namespace facloc {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial) {
    // splitmix64 over a trial-indexed stream
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

double param(const std::map<std::string, double>& p, const std::string& key, double dflt) {
    auto it = p.find(key);
    return it == p.end() ? dflt : it->second;
}

double required(const std::map<std::string, double>& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end())
        throw std::invalid_argument("generate: missing required param " + key);
    return it->second;
}

/// Perturbs kept entries by at most eps and replaces floor(delta*n) entries
/// with far corruptions. hit_small > 0 concentrates corruptions on the
/// highest-index entries first (generators place the small cluster last).
PredictionSet corrupt(const Dataset& X, double eps, double delta, bool hit_small,
                      std::mt19937_64& rng) {
    PredictionSet P;
    P.predictions = X;
    P.epsilon = eps;
    P.delta = delta;
    const std::size_t n = X.size();
    const std::size_t d = static_cast<std::size_t>(X.dim);

    if (eps > 0.0) {
        const double e = eps / std::sqrt(static_cast<double>(d));
        std::uniform_real_distribution<double> u(-e, e);
        for (auto& p : P.predictions.points)
            for (double& c : p) c += u(rng);
    }

    const std::size_t r =
        static_cast<std::size_t>(std::floor(delta * static_cast<double>(n) + 1e-9));
    if (r == 0) return P;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (hit_small)
        std::reverse(order.begin(), order.end());
    else
        std::shuffle(order.begin(), order.end(), rng);

    std::vector<double> lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
        lo[j] = hi[j] = X.points[0][j];
        for (const auto& p : X.points) {
            lo[j] = std::min(lo[j], p[j]);
            hi[j] = std::max(hi[j], p[j]);
        }
    }
    for (std::size_t t = 0; t < r; ++t) {
        Point& p = P.predictions.points[order[t]];
        for (std::size_t j = 0; j < d; ++j) {
            const double w = std::max(hi[j] - lo[j], 1.0);
            std::uniform_real_distribution<double> u(lo[j] - 2.0 * w, hi[j] + 2.0 * w);
            p[j] = u(rng);
        }
    }
    return P;
}

}  // namespace

GeneratedInstance generate(const GeneratorSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    const double delta = param(spec.params, "delta", 0.0);
    const double eps = param(spec.params, "eps", 0.0);
    if (delta < 0.0 || delta >= 0.5)
        throw std::invalid_argument("generate: delta must lie in [0, 0.5)");
    if (eps < 0.0) throw std::invalid_argument("generate: eps must be nonnegative");
    const bool hit_small = param(spec.params, "hit_small", 0.0) > 0.0;

    GeneratedInstance gi;
    if (spec.id == "uniform") {
        const std::size_t n = static_cast<std::size_t>(required(spec.params, "n"));
        const int d = static_cast<int>(param(spec.params, "d", 1));
        if (n < 1 || d < 1) throw std::invalid_argument("generate: bad n or d");
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::vector<Point> pts(n, Point(static_cast<std::size_t>(d)));
        for (auto& p : pts)
            for (double& c : p) c = u(rng);
        gi.X = Dataset(d, std::move(pts));
    } else if (spec.id == "gaussian_clusters") {
        const std::size_t n = static_cast<std::size_t>(required(spec.params, "n"));
        const int d = static_cast<int>(param(spec.params, "d", 2));
        const std::size_t k = static_cast<std::size_t>(param(spec.params, "clusters", 2));
        const double spread = param(spec.params, "spread", 0.05);
        if (n < 1 || d < 1 || k < 1) throw std::invalid_argument("generate: bad params");
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::normal_distribution<double> g(0.0, spread);
        std::vector<Point> centers(k, Point(static_cast<std::size_t>(d)));
        for (auto& c : centers)
            for (double& v : c) v = u(rng);
        std::uniform_int_distribution<std::size_t> pick(0, k - 1);
        std::vector<Point> pts(n, Point(static_cast<std::size_t>(d)));
        for (auto& p : pts) {
            const auto& c = centers[pick(rng)];
            for (std::size_t j = 0; j < p.size(); ++j) p[j] = c[j] + g(rng);
        }
        gi.X = Dataset(d, std::move(pts));
    } else if (spec.id == "two_cluster_line") {
        const std::size_t n = static_cast<std::size_t>(required(spec.params, "n"));
        const double gap = param(spec.params, "gap", 1.0);
        const double frac = param(spec.params, "frac", 0.5);
        const double jitter = param(spec.params, "jitter", 0.0);
        const std::size_t left =
            static_cast<std::size_t>(std::round(frac * static_cast<double>(n)));
        if (n < 2 || left < 1 || left >= n)
            throw std::invalid_argument("generate: bad two_cluster_line params");
        std::uniform_real_distribution<double> u(0.0, jitter > 0.0 ? jitter : 0.0);
        std::vector<double> v;
        for (std::size_t i = 0; i < left; ++i) v.push_back(jitter > 0.0 ? u(rng) : 0.0);
        for (std::size_t i = left; i < n; ++i)
            v.push_back(gap + (jitter > 0.0 ? u(rng) : 0.0));
        gi.X = Dataset::from_values(v);
    } else if (spec.id == "unbalanced_two_cluster") {
        const std::size_t n = static_cast<std::size_t>(required(spec.params, "n"));
        const std::size_t small = static_cast<std::size_t>(required(spec.params, "small"));
        const double gap = param(spec.params, "gap", 100.0);
        if (small < 1 || small >= n)
            throw std::invalid_argument("generate: bad unbalanced_two_cluster params");
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::vector<double> v;
        for (std::size_t i = 0; i < n - small; ++i) v.push_back(u(rng));
        for (std::size_t i = 0; i < small; ++i) v.push_back(gap + u(rng));
        gi.X = Dataset::from_values(v);
    } else if (spec.id == "named") {
        const auto ni = named_instance(spec.name, spec.params);
        gi.X = ni.X;
        gi.predictions.predictions = ni.Xp;
        gi.predictions.epsilon = 0.0;
        gi.predictions.delta = param(ni.params, "delta", delta);
        return gi;
    } else {
        throw std::invalid_argument("generate: unknown generator id " + spec.id);
    }

    gi.predictions = corrupt(gi.X, eps, delta, hit_small, rng);
    return gi;
}

namespace {

using nlohmann::json;

json points_json(const std::vector<Point>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(p);
    return arr;
}

std::vector<Point> parse_points(const json& arr) {
    std::vector<Point> pts;
    for (const auto& p : arr) pts.push_back(p.get<Point>());
    return pts;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) {
        out.close();
        std::remove(path.c_str());
        throw std::runtime_error("write failed for " + path);
    }
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Dataset load_dataset(const std::string& path) {
    const json j = load_json(path);
    return Dataset(j.at("dim").get<int>(), parse_points(j.at("points")));
}

void save_dataset(const Dataset& X, const std::string& path) {
    json j;
    j["dim"] = X.dim;
    j["points"] = points_json(X.points);
    write_text(path, j.dump(2) + "\n");
}

PredictionSet load_predictions(const std::string& path) {
    const json j = load_json(path);
    PredictionSet P;
    P.epsilon = j.at("epsilon").get<double>();
    P.delta = j.at("delta").get<double>();
    auto pts = parse_points(j.at("points"));
    const int dim = static_cast<int>(pts.at(0).size());
    P.predictions = Dataset(dim, std::move(pts));
    return P;
}

void save_predictions(const PredictionSet& P, const std::string& path) {
    json j;
    j["epsilon"] = P.epsilon;
    j["delta"] = P.delta;
    j["points"] = points_json(P.predictions.points);
    write_text(path, j.dump(2) + "\n");
}

std::string outcome_to_json(const std::string& mechanism_id,
                            const OutcomeDistribution& dist, const Dataset& X) {
    json j;
    j["mechanism"] = mechanism_id;
    const auto* modal = &dist.support.front();
    for (const auto& e : dist.support)
        if (e.p > modal->p) modal = &e;
    j["facilities"] = points_json(modal->facilities);
    json d = json::array();
    for (const auto& e : dist.support)
        d.push_back({{"facilities", points_json(e.facilities)}, {"p", e.p}});
    j["distribution"] = std::move(d);
    j["cost_expected"] = expected_social_cost(dist, X);
    return j.dump(2);
}

std::string audit_to_json(const std::string& mechanism_id, const AuditReport& report) {
    json j;
    j["mechanism"] = mechanism_id;
    json v = json::array();
    for (const auto& viol : report.violations)
        v.push_back({{"agent", viol.agent},
                     {"deviation", viol.deviation},
                     {"cost_true", viol.cost_true},
                     {"cost_dev", viol.cost_dev}});
    j["violations"] = std::move(v);
    j["max_gain"] = report.max_gain;
    return j.dump(2);
}

std::string robustness_to_json(const RobustnessReport& report) {
    json j;
    j["rho_observed"] = report.rho_observed;
    j["gamma_observed"] = report.gamma_observed;
    j["rho_theory"] = report.rho_theory ? json(*report.rho_theory) : json();
    j["gamma_theory"] = report.gamma_theory ? json(*report.gamma_theory) : json();
    j["witness_indices"] = report.witness.indices;
    j["witness_points"] = points_json(report.witness.replacements);
    return j.dump(2);
}

namespace {

Point exogenous_target(const MechanismInput& inp) {
    if (!inp.h_S.empty()) return inp.h_S;
    return geometric_median(inp.predictions.predictions).point;
}

}  // namespace

OutcomeDistribution eval_mechanism(const std::string& id, const MechanismInput& inp) {
    OutcomeDistribution dist;
    if (id == "alg1") {
        dist.support.push_back({{best_choice_single(inp)}, 1.0});
    } else if (id == "alg2") {
        dist.support.push_back({{bounded_best_choice(inp)}, 1.0});
    } else if (id == "alg3") {
        dist.support.push_back({balanced_k_facility(inp, 2, inp.b).centers, 1.0});
    } else if (id == "alg5") {
        dist = predict_and_choose(inp);
    } else if (id == "propmech") {
        dist = prop_mech_distribution(inp.reports, exogenous_target(inp));
    } else if (id == "minbb") {
        dist.support.push_back({{minbb(inp.reports, exogenous_target(inp))}, 1.0});
    } else {
        throw std::invalid_argument("eval_mechanism: unknown id " + id);
    }
    return dist;
}

double opt_cost(const std::string& id, const Dataset& true_X, const MechanismInput& inp) {
    if (id == "alg1" || id == "alg2" || id == "minbb")
        return geometric_median(true_X).objective;
    if (id == "alg5" || id == "propmech") {
        auto sol = balanced_kmedians_line(true_X, BalancedSolverConfig{2, 0.0});
        if (!sol) throw std::runtime_error("opt_cost: 2-medians infeasible");
        return sol->cost;
    }
    if (id == "alg3") {
        const double beta = inp.b * inp.predictions.delta;
        auto sol = balanced_kmedians_line(true_X, BalancedSolverConfig{2, beta});
        if (!sol) throw std::runtime_error("opt_cost: balanced 2-medians infeasible");
        return sol->cost;
    }
    throw std::invalid_argument("opt_cost: unknown id " + id);
}

RatioSummary ratio_suite(const std::string& mechanism_id, const GeneratorSpec& gen,
                         int trials, std::uint64_t master_seed) {
    std::vector<double> ratios;
    for (int t = 0; t < trials; ++t) {
        GeneratorSpec g = gen;
        g.seed = derive_seed(master_seed, static_cast<std::uint64_t>(t));
        const auto gi = generate(g);
        MechanismInput inp;
        inp.reports = gi.X;  // truthful reports
        inp.predictions = gi.predictions;
        const auto dist = eval_mechanism(mechanism_id, inp);
        ratios.push_back(approx_ratio(expected_social_cost(dist, gi.X),
                                      opt_cost(mechanism_id, gi.X, inp)));
    }
    return summarize_ratios(ratios);
}

void run(const ExperimentConfig& cfg) {
    std::ostringstream out;
    out << "trial,mechanism,cost,opt,ratio\n";
    std::map<std::string, std::vector<double>> per_mech;
    for (int t = 0; t < cfg.trials; ++t) {
        GeneratorSpec g = cfg.generator;
        g.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
        const auto gi = generate(g);
        MechanismInput inp;
        inp.reports = gi.X;
        inp.predictions = gi.predictions;
        for (const auto& id : cfg.mechanisms) {
            const auto dist = eval_mechanism(id, inp);
            const double cost = expected_social_cost(dist, gi.X);
            const double opt = opt_cost(id, gi.X, inp);
            const double ratio = approx_ratio(cost, opt);
            per_mech[id].push_back(ratio);
            out << t << ',' << id << ',' << fmt17(cost) << ',' << fmt17(opt) << ','
                << fmt17(ratio) << '\n';
        }
    }
    for (const auto& [id, ratios] : per_mech) {
        const auto s = summarize_ratios(ratios);
        out << "# summary," << id << ",mean=" << fmt17(s.mean)
            << ",max=" << fmt17(s.max) << ",p95=" << fmt17(s.p95) << '\n';
    }
    write_text(cfg.out_path, out.str());
}

}  // namespace facloc
