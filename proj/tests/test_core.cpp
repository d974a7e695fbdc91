#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "facloc/core.hpp"

using namespace facloc;

namespace {

Dataset random_1d(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(0.0, 10.0);
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(u(rng));
    return Dataset::from_values(v);
}

std::vector<Point> random_points(std::mt19937_64& rng, int n, int d) {
    std::uniform_real_distribution<double> u(0.0, 10.0);
    std::vector<Point> pts(n, Point(static_cast<std::size_t>(d)));
    for (auto& p : pts)
        for (double& c : p) c = u(rng);
    return pts;
}

}  // namespace

TEST_CASE("distance basics") {
    CHECK(distance({0.0}, {0.0}) == 0.0);
    CHECK(distance({0.0, 0.0}, {3.0, 4.0}) == doctest::Approx(5.0));
    CHECK(distance({1.0, 1.0}, {-1.0, -1.0}) == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK_THROWS_AS(distance({0.0}, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("kmed_cost examples") {
    CHECK(kmed_cost(Dataset::from_values({0, 1, 3}), {{1.0}}) == doctest::Approx(3.0));
    const auto X = Dataset::from_values({2, 7, 9});
    CHECK(kmed_cost(X, {{2.0}, {7.0}, {9.0}}) == 0.0);
    CHECK(kmed_cost(Dataset::from_values({0, 0, 0, 0, 0, 1, 1, 2}), {{0.0}, {1.0}}) ==
          doctest::Approx(1.0));
    CHECK_THROWS_AS(kmed_cost(X, {}), std::invalid_argument);
}

TEST_CASE("kmed_cost monotone under center superset") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        Dataset X(2, random_points(rng, 6, 2));
        auto F = random_points(rng, 2, 2);
        auto F2 = F;
        F2.push_back(random_points(rng, 1, 2)[0]);
        CHECK(kmed_cost(X, F2) <= kmed_cost(X, F) + 1e-12);
    }
}

TEST_CASE("hausdorff examples") {
    const std::vector<Point> U = {{0.0}, {10.0}};
    CHECK(hausdorff(U, U) == 0.0);
    CHECK(hausdorff({{0.0}}, {{0.0}, {5.0}}) == doctest::Approx(5.0));
    CHECK(hausdorff(U, {{1.0}, {8.0}}) == doctest::Approx(2.0));
    CHECK_THROWS_AS(hausdorff({}, U), std::invalid_argument);
}

TEST_CASE("hausdorff is a metric on random triples") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        auto A = random_points(rng, 3, 2);
        auto B = random_points(rng, 4, 2);
        auto C = random_points(rng, 2, 2);
        CHECK(hausdorff(A, B) == doctest::Approx(hausdorff(B, A)));
        CHECK(hausdorff(A, B) <= hausdorff(A, C) + hausdorff(C, B) + 1e-12);
        auto A2 = A;
        std::shuffle(A2.begin(), A2.end(), rng);
        CHECK(hausdorff(A, A2) == 0.0);
    }
}

TEST_CASE("induced_partition tie rules") {
    const auto sol = induced_partition(Dataset::from_values({0, 1}), {{0.0}, {1.0}});
    CHECK(sol.assignment == std::vector<int>{0, 1});
    CHECK(sol.cost == 0.0);

    const auto tie = induced_partition(Dataset::from_values({0.5}), {{0.0}, {1.0}});
    CHECK(tie.assignment[0] == 0);  // equidistant goes to the lowest index

    const auto sym = induced_partition(Dataset::from_values({0, 0, 1, 1}), {{0.0}, {1.0}});
    CHECK(sym.cluster_sizes() == std::vector<std::size_t>{2, 2});
    CHECK(balance_of(sym) == doctest::Approx(0.5));
}

TEST_CASE("induced_partition satisfies the center-induced inequality") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Dataset X(2, random_points(rng, 8, 2));
        auto F = random_points(rng, 3, 2);
        for (auto rule : {TieRule::lowest_center_index, TieRule::balance_seeking}) {
            const auto sol = induced_partition(X, F, rule);
            for (std::size_t i = 0; i < X.size(); ++i) {
                const double mine =
                    distance(X.points[i], F[static_cast<std::size_t>(sol.assignment[i])]);
                for (const auto& other : F)
                    CHECK(mine <= distance(X.points[i], other) + 1e-12);
            }
        }
    }
}

TEST_CASE("balance_of from cluster sizes") {
    FacilitySolution s;
    s.centers = {{0.0}, {1.0}};
    s.assignment = {0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
    CHECK(balance_of(s) == doctest::Approx(0.1));
    s.centers = {{0.0}, {1.0}, {2.0}};
    s.assignment = {0, 0, 0, 0, 1, 1, 1, 2, 2, 2};
    CHECK(balance_of(s) == doctest::Approx(0.3));
}

TEST_CASE("count_incorrect") {
    const auto X = Dataset::from_values({0, 1, 2});
    CHECK(count_incorrect(X, X, 0.0) == 0);
    CHECK(count_incorrect(Dataset::from_values({0, 0, 0}),
                          Dataset::from_values({0, 0, 100}), 0.0) == 1);
    CHECK(count_incorrect(X, Dataset::from_values({0.05, 0.9, 7}), 0.1) == 1);
    CHECK_THROWS_AS(count_incorrect(X, Dataset::from_values({0, 1}), 0.0),
                    std::invalid_argument);
}

TEST_CASE("count_incorrect monotone nonincreasing in eps") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 30; ++t) {
        const auto X = random_1d(rng, 8);
        const auto Y = random_1d(rng, 8);
        std::size_t prev = X.size() + 1;
        for (double eps : {0.0, 0.5, 1.0, 2.0, 5.0, 20.0}) {
            const std::size_t c = count_incorrect(X, Y, eps);
            CHECK(c <= prev);
            prev = c;
        }
    }
}

TEST_CASE("dataset validation") {
    CHECK_THROWS_AS(Dataset(2, {{0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Dataset(1, {}), std::invalid_argument);
    CHECK_THROWS_AS(Dataset(1, {{std::nan("")}}), std::invalid_argument);
    const auto X = Dataset::from_values({3, 4});
    CHECK(X.diameter() == doctest::Approx(1.0));
    CHECK(X.values() == std::vector<double>{3, 4});
    CHECK_THROWS_AS(Dataset(2, {{0.0, 0.0}}).values(), std::invalid_argument);
}
