#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "facloc/audit.hpp"
#include "facloc/estimators.hpp"
#include "facloc/harness.hpp"
#include "facloc/mechanisms.hpp"
#include "facloc/check_suite.hpp"
#include "facloc/robustness.hpp"

using namespace facloc;
using nlohmann::json;

namespace {

GeneratorSpec parse_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    GeneratorSpec gs;
    gs.id = j.at("id").get<std::string>();
    if (j.contains("name")) gs.name = j["name"].get<std::string>();
    if (j.contains("params"))
        for (auto& [k, v] : j["params"].items()) gs.params[k] = v.get<double>();
    if (j.contains("seed")) gs.seed = j["seed"].get<std::uint64_t>();
    return gs;
}

MechanismInput make_input(const std::string& instance_path,
                          const std::string& predictions_path, double delta,
                          double b, std::uint64_t seed) {
    MechanismInput inp;
    inp.reports = load_dataset(instance_path);
    if (!predictions_path.empty()) {
        inp.predictions = load_predictions(predictions_path);
    } else {
        inp.predictions.predictions = inp.reports;
        inp.predictions.epsilon = 0.0;
        inp.predictions.delta = 0.0;
    }
    if (delta >= 0.0) inp.predictions.delta = delta;
    inp.b = b;
    inp.seed = seed;
    return inp;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"facility location mechanisms with noisy predictions"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance with predictions");
    std::string gen_spec, gen_out;
    gen->add_option("--spec", gen_spec, "generator spec JSON file")->required();
    gen->add_option("--out", gen_out, "output directory")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "exact balanced k-medians on the line");
    std::string solve_instance;
    int solve_k = 2;
    double solve_beta = 0.0;
    solve->add_option("--instance", solve_instance, "dataset JSON file")->required();
    solve->add_option("--k", solve_k, "number of facilities");
    solve->add_option("--beta", solve_beta, "minimum cluster fraction");

    // mech
    auto* mech = app.add_subcommand("mech", "evaluate a mechanism");
    std::string mech_id, mech_instance, mech_predictions;
    double mech_delta = -1.0, mech_b = 46.0;
    std::uint64_t mech_seed = 0;
    mech->add_option("--id", mech_id, "alg1|alg2|alg3|alg5|propmech|minbb")->required();
    mech->add_option("--instance", mech_instance, "reports JSON file")->required();
    mech->add_option("--predictions", mech_predictions, "predictions JSON file");
    mech->add_option("--delta", mech_delta, "override prediction delta");
    mech->add_option("--b", mech_b, "balance tuning parameter");
    mech->add_option("--seed", mech_seed, "sampling seed");
    bool mech_sample = false;
    mech->add_flag("--sample", mech_sample, "also print one sampled outcome");

    // robust
    auto* robust = app.add_subcommand("robust", "adversarial corruption search");
    std::string rob_target, rob_instance, rob_mode = "exhaustive";
    double rob_delta = 0.1, rob_b = 46.0;
    int rob_budget = 1000;
    std::uint64_t rob_seed = 0;
    robust->add_option("--target", rob_target, "1med|bal2med|bcc")->required();
    robust->add_option("--instance", rob_instance, "dataset JSON file")->required();
    robust->add_option("--delta", rob_delta, "corruption fraction");
    robust->add_option("--mode", rob_mode, "exhaustive|randomized");
    robust->add_option("--budget", rob_budget, "randomized trial count");
    robust->add_option("--b", rob_b, "balance tuning parameter");
    robust->add_option("--seed", rob_seed, "randomized mode seed");

    // audit
    auto* audit = app.add_subcommand("audit", "strategyproofness refutation search");
    std::string aud_mech, aud_instance, aud_predictions;
    double aud_delta = -1.0, aud_b = 46.0;
    int aud_grid = 21;
    audit->add_option("--mechanism", aud_mech, "mechanism id")->required();
    audit->add_option("--instance", aud_instance, "true locations JSON file")->required();
    audit->add_option("--predictions", aud_predictions, "predictions JSON file");
    audit->add_option("--delta", aud_delta, "override prediction delta");
    audit->add_option("--b", aud_b, "balance tuning parameter");
    audit->add_option("--grid-density", aud_grid, "deviation grid points per axis");

    // check-suite subcommand
    auto* pc = app.add_subcommand("check-suite", "run the full verification suite");
    std::string pc_out;
    pc->add_option("--out", pc_out, "report output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            const auto gi = generate(parse_spec(gen_spec));
            std::filesystem::create_directories(gen_out);
            save_dataset(gi.X, gen_out + "/dataset.json");
            save_predictions(gi.predictions, gen_out + "/predictions.json");
            std::cout << "wrote " << gen_out << "/dataset.json and predictions.json\n";
        } else if (*solve) {
            const auto X = load_dataset(solve_instance);
            const auto sol = balanced_kmedians_line(
                X, BalancedSolverConfig{solve_k, solve_beta});
            if (!sol) {
                std::cout << "{\"feasible\": false}\n";
                return 1;
            }
            json j;
            j["feasible"] = true;
            j["centers"] = json::array();
            for (const auto& c : sol->centers) j["centers"].push_back(c);
            j["assignment"] = sol->assignment;
            j["cost"] = sol->cost;
            std::cout << j.dump(2) << "\n";
        } else if (*mech) {
            const auto inp =
                make_input(mech_instance, mech_predictions, mech_delta, mech_b, mech_seed);
            const auto dist = eval_mechanism(mech_id, inp);
            std::cout << outcome_to_json(mech_id, dist, inp.reports) << "\n";
            if (mech_sample && mech_id == "propmech") {
                const Point h = prop_mech_sample(
                    inp.reports, geometric_median(inp.predictions.predictions).point,
                    mech_seed);
                std::cout << "sampled: " << json(h).dump() << "\n";
            }
        } else if (*robust) {
            const auto X = load_dataset(rob_instance);
            Estimator f;
            RobustnessReport rep;
            if (rob_target == "1med") {
                f = [](const Dataset& D) {
                    return std::vector<Point>{geometric_median(D).point};
                };
            } else if (rob_target == "bal2med") {
                const double beta = (rob_b - 1.0) * rob_delta;
                f = [beta](const Dataset& D) {
                    auto sol = balanced_kmedians_line(D, BalancedSolverConfig{2, beta});
                    if (!sol) throw std::runtime_error("balanced solver infeasible");
                    return sol->centers;
                };
            } else if (rob_target == "bcc") {
                const double b = rob_b, delta = rob_delta;
                f = [b, delta](const Dataset& D) {
                    return std::vector<Point>{bcc(D, b, delta)};
                };
            } else {
                throw std::invalid_argument("unknown robust target " + rob_target);
            }
            rep = adversary_search(X, rob_delta, f, AdvObjective::approx,
                                   rob_mode == "exhaustive" ? AdvMode::exhaustive
                                                            : AdvMode::randomized,
                                   rob_budget, rob_seed);
            if (rob_target == "1med") {
                rep.rho_theory = one_median_rho_bound(X, rob_delta);
                rep.gamma_theory = one_median_gamma_bound(rob_delta);
            } else if (rob_target == "bal2med") {
                rep.gamma_theory = balanced_gamma_bound(2, rob_b);
            }
            std::cout << robustness_to_json(rep) << "\n";
        } else if (*audit) {
            const auto inp = make_input(aud_instance, aud_predictions, aud_delta, aud_b, 0);
            const PredictionSet preds = inp.predictions;
            const double b = aud_b;
            const std::string id = aud_mech;
            MechanismEval m = [id, preds, b](const Dataset& reports) {
                MechanismInput mi;
                mi.reports = reports;
                mi.predictions = preds;
                mi.b = b;
                return eval_mechanism(id, mi);
            };
            const auto rep = strategyproofness_audit(m, inp.reports, aud_grid);
            std::cout << audit_to_json(aud_mech, rep) << "\n";
        } else if (*pc) {
            return run_check_suite(std::cout, pc_out) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
