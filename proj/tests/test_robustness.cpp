#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "facloc/estimators.hpp"
#include "facloc/robustness.hpp"

using namespace facloc;

namespace {

Point med1(const Dataset& D) { return {median_1d(D.values())}; }

Estimator median_estimator() {
    return [](const Dataset& D) { return std::vector<Point>{med1(D)}; };
}

}  // namespace

TEST_CASE("apply_corruption") {
    const auto X = Dataset::from_values({0, 0, 1});
    const Corruption none;
    CHECK(apply_corruption(X, none, 0.4).points == X.points);

    Corruption c;
    c.indices = {2};
    c.replacements = {{100.0}};
    CHECK(apply_corruption(X, c, 0.4).values() == std::vector<double>{0, 0, 100});

    Corruption big;
    big.indices = {0, 1};
    big.replacements = {{5.0}, {5.0}};
    CHECK_THROWS_AS(apply_corruption(X, big, 0.4), std::invalid_argument);

    Corruption oob;
    oob.indices = {9};
    oob.replacements = {{5.0}};
    CHECK_THROWS_AS(apply_corruption(X, oob, 0.4), std::invalid_argument);
}

TEST_CASE("candidate pool contents") {
    const auto X = Dataset::from_values({0, 10});
    const auto pool = corruption_candidate_pool(X);
    bool has_data = false, has_far = false;
    for (const auto& p : pool) {
        if (p == Point{10.0}) has_data = true;
        if (std::abs(p[0]) > 1e5) has_far = true;
    }
    CHECK(has_data);
    CHECK(has_far);
}

TEST_CASE("for_each_corruption counts") {
    const auto X = Dataset::from_values({0, 1, 2});
    const std::vector<Point> pool = {{5.0}, {6.0}};
    long count = 0;
    for_each_corruption(X, 1.0 / 3.0, pool,
                        [&](const Dataset&, const Corruption&) { ++count; });
    // empty + 3 indices x 2 replacements
    CHECK(count == 1 + 3 * 2);
}

TEST_CASE("adversary on a small instance") {
    const auto X = Dataset::from_values({0, 0, 10});
    const auto rep = adversary_search(X, 1.0 / 3.0, median_estimator(),
                                      AdvObjective::distance, AdvMode::exhaustive);
    CHECK(rep.rho_observed == doctest::Approx(10.0));
    CHECK(rep.rho_observed <= one_median_rho_bound(X, 1.0 / 3.0));
    CHECK(one_median_rho_bound(X, 1.0 / 3.0) == doctest::Approx(20.0));
}

TEST_CASE("delta zero means no movement") {
    const auto X = Dataset::from_values({0, 1, 2, 3});
    const auto rep = adversary_search(X, 0.0, median_estimator(),
                                      AdvObjective::approx, AdvMode::exhaustive);
    CHECK(rep.rho_observed == 0.0);
    CHECK(rep.gamma_observed == doctest::Approx(1.0));
}

TEST_CASE("randomized mode is deterministic given the seed") {
    const auto X = Dataset::from_values({0, 1, 2, 3, 4, 9});
    const auto a = adversary_search(X, 0.3, median_estimator(), AdvObjective::approx,
                                    AdvMode::randomized, 200, 42);
    const auto b = adversary_search(X, 0.3, median_estimator(), AdvObjective::approx,
                                    AdvMode::randomized, 200, 42);
    CHECK(a.gamma_observed == b.gamma_observed);
    CHECK(a.witness.indices == b.witness.indices);
}

TEST_CASE("tight corruption instance gamma") {
    const auto ni = named_instance("cor-tight", {{"n", 100}, {"delta", 0.1}});
    const double mX = median_1d(ni.X.values());
    const double mXp = median_1d(ni.Xp.values());
    CHECK(mX == 1.0);
    CHECK(mXp == 0.0);
    const double gamma = kmed_cost(ni.X, {{mXp}}) / kmed_cost(ni.X, {{mX}});
    CHECK(gamma == doctest::Approx(59.0 / 41.0).epsilon(1e-12));
    CHECK(gamma <= one_median_gamma_bound(0.1));
}

TEST_CASE("switch inequality") {
    const auto X = Dataset::from_values({0, 1, 2});
    const auto same = switch_inequality_check({{1.0}}, {{1.0}}, X, 0.3);
    CHECK(same.holds);
    CHECK(same.rho == 0.0);

    const auto ni = named_instance("cor-tight", {{"n", 100}, {"delta", 0.1}});
    const auto sc = switch_inequality_check({{1.0}}, {{0.0}}, ni.X, 0.1);
    CHECK(sc.lhs == doctest::Approx(59.0));
    CHECK(sc.rhs == doctest::Approx(41.0 + 2.0 * 10.0 * 1.0));
    CHECK(sc.holds);
}

TEST_CASE("switch inequality on exhaustive small sweep") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 10; ++t) {
        std::uniform_real_distribution<double> u(0.0, 10.0);
        std::vector<double> v;
        for (int i = 0; i < 6; ++i) v.push_back(u(rng));
        const auto X = Dataset::from_values(v);
        const Point F = med1(X);
        const auto pool = corruption_candidate_pool(X, 5);
        for_each_corruption(X, 0.3, pool, [&](const Dataset& Xp, const Corruption&) {
            CHECK(switch_inequality_check({F}, {med1(Xp)}, X, 0.3).holds);
        });
    }
}

TEST_CASE("named instance catalogue") {
    const auto ct = named_instance("cor-tight", {{"n", 100}, {"delta", 0.1}});
    long zX = 0, zXp = 0;
    for (double v : ct.X.values()) zX += v == 0.0;
    for (double v : ct.Xp.values()) zXp += v == 0.0;
    CHECK(zX == 41);
    CHECK(zXp == 51);
    CHECK(count_incorrect(ct.X, ct.Xp, 0.0) == 10);

    const auto pt = named_instance("propmech-tight", {{"n", 10}});
    long zeros = 0, ones = 0, twos = 0;
    for (double v : pt.X.values()) {
        zeros += v == 0.0;
        ones += v == 1.0;
        twos += v == 2.0;
    }
    CHECK(zeros == 5);
    CHECK(ones == 4);
    CHECK(twos == 1);

    const auto bc = named_instance("bcc-5-3", {{"n", 800}, {"eps", 0.01}, {"M", 1e6}});
    CHECK(bc.X.size() == 801);
    CHECK(count_incorrect(bc.X, bc.Xp, 0.0) == 1);
    long at_minus1 = 0;
    for (double v : bc.Xp.values()) at_minus1 += v == -1.0;
    CHECK(at_minus1 == 201);

    const auto mb = named_instance("minbb-tight", {{"n", 4}, {"d", 2}});
    CHECK(mb.X.points[3] == Point{1.0, 1.0});
    CHECK(mb.expected.at("ratio") == doctest::Approx(3.0));

    CHECK_THROWS_AS(named_instance("no-such-instance"), std::invalid_argument);
    CHECK_THROWS_AS(named_instance("propmech-tight", {{"n", 7}}), std::invalid_argument);
    CHECK_THROWS_AS(named_instance("bcc-5-3", {{"n", 10}}), std::invalid_argument);
}

TEST_CASE("balanced bound helpers") {
    CHECK(one_median_gamma_bound(0.1) == doctest::Approx(1.5));
    CHECK(balanced_gamma_bound(2, 10) == doctest::Approx(3.0));
    CHECK(balanced_gamma_bound(2, 46) == doctest::Approx(1.2));
    CHECK(balanced_rho_bound(2, 10, 0.1, 10, 5.0) == doctest::Approx(5.0));
}
