#include "facloc/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "facloc/robustness.hpp"

namespace facloc {

double agent_expected_cost(const OutcomeDistribution& dist, const Point& x) {
    double e = 0.0;
    for (const auto& entry : dist.support) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& f : entry.facilities) best = std::min(best, distance(x, f));
        e += entry.p * best;
    }
    return e;
}

double expected_social_cost(const OutcomeDistribution& dist, const Dataset& X) {
    double e = 0.0;
    for (const auto& entry : dist.support)
        e += entry.p * kmed_cost(X, entry.facilities);
    return e;
}

AuditReport strategyproofness_audit(const MechanismEval& mech, const Dataset& true_X,
                                    int axis_points) {
    AuditReport report;
    const auto truthful = mech(true_X);
    const auto grid = corruption_candidate_pool(true_X, axis_points);
    const double tol = 1e-9;

    Dataset reports = true_X;
    for (std::size_t i = 0; i < true_X.size(); ++i) {
        const Point& truth = true_X.points[i];
        const double cost_true = agent_expected_cost(truthful, truth);
        for (const auto& dev : grid) {
            if (dev == truth) continue;
            reports.points[i] = dev;
            const double cost_dev = agent_expected_cost(mech(reports), truth);
            if (cost_dev < cost_true - tol * (1.0 + cost_true)) {
                report.violations.push_back({i, dev, cost_true, cost_dev});
                report.max_gain = std::max(report.max_gain, cost_true - cost_dev);
            }
        }
        reports.points[i] = truth;
    }
    return report;
}

double approx_ratio(double alg_cost, double opt_cost) {
    if (alg_cost < 0.0 || opt_cost < 0.0)
        throw std::invalid_argument("approx_ratio: negative cost");
    if (opt_cost == 0.0)
        return alg_cost == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return alg_cost / opt_cost;
}

RatioSummary summarize_ratios(const std::vector<double>& ratios) {
    RatioSummary s;
    s.trials = ratios.size();
    if (ratios.empty()) return s;
    std::vector<double> sorted = ratios;
    std::sort(sorted.begin(), sorted.end());
    double sum = 0.0;
    for (double r : sorted) sum += r;
    s.mean = sum / static_cast<double>(sorted.size());
    s.max = sorted.back();
    const std::size_t idx = static_cast<std::size_t>(
        std::ceil(0.95 * static_cast<double>(sorted.size()))) - 1;
    s.p95 = sorted[std::min(idx, sorted.size() - 1)];
    return s;
}

}  // namespace facloc
