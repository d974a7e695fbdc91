#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "facloc/core.hpp"

namespace facloc {

/// Replacement of at most floor(delta*n) dataset entries.
struct Corruption {
    std::vector<std::size_t> indices;  // distinct
    std::vector<Point> replacements;   // same length as indices
};

/// X' identical to X except at the corrupted indices. The budget is
/// floor(delta * n); larger corruptions are rejected.
Dataset apply_corruption(const Dataset& X, const Corruption& c, double delta);

/// Candidate replacement positions for adversary searches: the data points,
/// an axis grid over twice the bounding box (axis_points per axis, full
/// cartesian product), and far sentinels at +-1e6 * diameter along each axis.
std::vector<Point> corruption_candidate_pool(const Dataset& X, int axis_points = 21);

/// Enumerates every corruption of up to floor(delta*n) indices with
/// replacements drawn from the pool (as unordered multisets; every estimator
/// here is symmetric in its input, so replacement order is irrelevant).
/// Invokes visit(corrupted dataset, corruption) for each, including the
/// empty corruption.
void for_each_corruption(const Dataset& X, double delta,
                         const std::vector<Point>& pool,
                         const std::function<void(const Dataset&, const Corruption&)>& visit);

/// A location estimator under audit: maps a dataset to a center set.
using Estimator = std::function<std::vector<Point>(const Dataset&)>;

enum class AdvObjective { distance, approx };
enum class AdvMode { exhaustive, randomized };

struct RobustnessReport {
    double rho_observed = 0.0;    // hausdorff(f(X), f(X')) at the witness
    double gamma_observed = 1.0;  // kmed(X, f(X')) / kmed(X, f(X)) at the witness
    std::optional<double> rho_theory;
    std::optional<double> gamma_theory;
    Corruption witness;
};

/// Maximizes the chosen objective over corruptions. Exhaustive mode sweeps
/// the full pool enumeration and requires n <= 12 and floor(delta*n) <= 3;
/// randomized mode samples `budget` corruptions from the same pool with a
/// deterministic generator. Theory fields are left empty; attach them with
/// the bound helpers below.
RobustnessReport adversary_search(const Dataset& X, double delta, const Estimator& f,
                                  AdvObjective objective, AdvMode mode,
                                  int budget = 0, std::uint64_t seed = 0);

/// Distance-robustness bound for the 1-median: 2 * kmed_1(X) / ((1-2delta)n).
double one_median_rho_bound(const Dataset& X, double delta);

/// Approximation-robustness bound for the 1-median: 1 + 4delta/(1-2delta).
double one_median_gamma_bound(double delta);

/// Approximation bound for the balanced k-medians estimator at balance
/// parameter (b-1)delta on instances whose optimum is b*delta-balanced:
/// 1 + 4k/(b-2-2k).
double balanced_gamma_bound(int k, double b);

/// Matching Hausdorff movement bound: 2k * OPT / (delta * n * (b-2-2k)).
double balanced_rho_bound(int k, double b, double delta, std::size_t n, double opt);

struct SwitchCheck {
    double lhs = 0.0;  // kmed(X, corrupted-input solution)
    double rhs = 0.0;  // kmed(X, clean solution) + 2*floor(delta*n)*rho
    double rho = 0.0;
    bool holds = false;
};

/// Verifies kmed(X, F') <= kmed(X, F) + 2*floor(delta*n)*hausdorff(F, F')
/// for a clean-input solution F and a corrupted-input solution F'.
SwitchCheck switch_inequality_check(const std::vector<Point>& F,
                               const std::vector<Point>& Fp,
                               const Dataset& X, double delta);

/// A constructed instance with a pinned corruption pattern and documented
/// expected quantities.
struct NamedInstance {
    std::string id;
    Dataset X;
    Dataset Xp;
    std::map<std::string, double> params;
    std::map<std::string, double> expected;
};

/// Catalogue ids: example-1-1(n, M), cor-tight(n, delta), propmech-tight(n),
/// bcc-5-3(n, eps, M), minbb-tight(n, d), second-fac-manip, convexhull-manip.
/// Unknown id or inconsistent params are rejected.
NamedInstance named_instance(const std::string& id,
                             const std::map<std::string, double>& params = {});

}  // namespace facloc
