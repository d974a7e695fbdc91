#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "facloc/audit.hpp"
#include "facloc/core.hpp"
#include "facloc/mechanisms.hpp"
#include "facloc/robustness.hpp"

namespace facloc {

/// Instance generator selection. `name` picks the catalogue entry when
/// id == "named". Every generator guarantees
/// count_incorrect(X, predictions, eps) <= floor(delta * n).
struct GeneratorSpec {
    std::string id;  // uniform | gaussian_clusters | two_cluster_line |
                     // unbalanced_two_cluster | named
    std::string name;  // named-instance id when id == "named"
    std::map<std::string, double> params;
    std::uint64_t seed = 0;
};

struct GeneratedInstance {
    Dataset X;
    PredictionSet predictions;
};

GeneratedInstance generate(const GeneratorSpec& spec);

/// Stateless per-trial seed derivation so trial counts can grow without
/// reshuffling earlier trials.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial);

/// JSON IO. Dataset: {"dim": int, "points": [[...],...]}.
/// Predictions: {"epsilon": f, "delta": f, "points": [[...],...]}.
Dataset load_dataset(const std::string& path);
void save_dataset(const Dataset& X, const std::string& path);
PredictionSet load_predictions(const std::string& path);
void save_predictions(const PredictionSet& P, const std::string& path);

std::string outcome_to_json(const std::string& mechanism_id,
                            const OutcomeDistribution& dist, const Dataset& X);
std::string audit_to_json(const std::string& mechanism_id, const AuditReport& report);
std::string robustness_to_json(const RobustnessReport& report);

/// Evaluates a mechanism by id: alg1, alg2, alg3, alg5, propmech, minbb.
/// Deterministic mechanisms come back as single-outcome distributions.
/// propmech's first facility and minbb's target default to the geometric
/// median of the predictions when inp.h_S is empty.
OutcomeDistribution eval_mechanism(const std::string& id, const MechanismInput& inp);

/// Exact OPT on the true locations for the mechanism's objective:
/// one facility for alg1/alg2/minbb, two (beta=0) for alg5/propmech,
/// b*delta-balanced two for alg3. d=1 only for the two-facility oracles.
double opt_cost(const std::string& id, const Dataset& true_X, const MechanismInput& inp);

/// Mean/max/p95 of expected-cost ratios over seeded generated instances
/// with truthful reports.
RatioSummary ratio_suite(const std::string& mechanism_id, const GeneratorSpec& gen,
                         int trials, std::uint64_t master_seed);

struct ExperimentConfig {
    GeneratorSpec generator;
    std::vector<std::string> mechanisms;
    int trials = 1;
    std::uint64_t seed = 0;
    std::string out_path;  // CSV: trial, mechanism, cost, opt, ratio
};

/// Writes per-trial rows plus per-mechanism summary comments. Byte-stable
/// for identical configs (floats at 17 significant digits).
void run(const ExperimentConfig& cfg);

}  // namespace facloc
