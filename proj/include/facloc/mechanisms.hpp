#pragma once

#include <cstdint>

#include "facloc/core.hpp"

namespace facloc {

/// Finite-support distribution over facility tuples. Probabilities are exact;
/// sampling is layered on top so audits and ratio checks stay noise-free.
struct OutcomeDistribution {
    struct Entry {
        std::vector<Point> facilities;
        double p = 0.0;
    };
    std::vector<Entry> support;

    bool deterministic() const { return support.size() == 1; }
};

/// Reports come from the strategic agents; predictions are exogenous advice
/// and are never altered by deviations.
struct MechanismInput {
    Dataset reports;
    PredictionSet predictions;
    double b = 46.0;           // balance tuning parameter
    Point h_S;                 // optional exogenous facility / clamp target;
                               // empty means derive from the predictions
    std::uint64_t seed = 0;

    void validate() const;  // same n and d across reports and predictions
};

/// True when the single-facility mechanism should trust the predictions:
/// 1 + 4*delta/(1-2*delta) <= sqrt(dim). Depends on (delta, dim) only.
bool prediction_branch(double delta, int dim);

/// Single facility: geometric median of the predictions on the prediction
/// branch, coordinatewise median of the reports otherwise.
Point best_choice_single(const MechanismInput& inp);

/// Clamp o into the coordinatewise bounding box of X.
Point minbb(const Dataset& X, const Point& o);

/// Single facility with the bounding-box safety wrapper:
/// minbb(reports, best_choice_single(inp)).
Point bounded_best_choice(const MechanismInput& inp);

/// k facilities from the predictions alone (hence strategyproof): exact
/// balanced k-medians on the line at balance (b-1)*delta. Warns on stderr
/// when b <= 2k+2, where the approximation guarantee is void.
FacilitySolution balanced_k_facility(const MechanismInput& inp, int k, double b);

/// Second facility picked among the reported points with probability
/// proportional to the distance from h_S. Identical points are merged; zero
/// weights are dropped. All weights zero yields the degenerate distribution
/// on (h_S, x_1). Every support entry pairs h_S with the picked point.
OutcomeDistribution prop_mech_distribution(const Dataset& X, const Point& h_S);

/// One inverse-CDF draw of the second facility from the distribution above,
/// reproducible from the seed.
Point prop_mech_sample(const Dataset& X, const Point& h_S, std::uint64_t seed);

/// Two facilities on the line: first from the predictions via bcc(b, delta),
/// second proportionally from the reports.
OutcomeDistribution predict_and_choose(const MechanismInput& inp);

/// Nearest point to o in the convex hull of X (d <= 2). Not strategyproof;
/// exists as the negative control for the audit module.
Point convex_hull_clamp(const Dataset& X, const Point& o);

}  // namespace facloc
