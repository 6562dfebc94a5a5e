// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "greedylab/greedy.hpp"
#include "test_util.hpp"

using namespace greedylab;

namespace {

// independent greedy-set predicate: |L| = m, min_L |x| >= max_{L^c} |x|
bool oracle_is_greedy(const Vector& x, int m, IndexSet lambda) {
    if (lambda.size() != m)
        return false;
    double min_in = 1e300, max_out = 0.0;
    for (int n = 1; n <= x.dim(); ++n) {
        const double mag = std::fabs(x.coord(n));
        if (lambda.contains(n))
            min_in = std::min(min_in, mag);
        else
            max_out = std::max(max_out, mag);
    }
    return m == 0 || min_in >= max_out;
}

std::vector<IndexSet> oracle_greedy_sets(const Vector& x, int m) {
    std::vector<IndexSet> out;
    for (std::uint32_t mask = 0; mask < (1u << x.dim()); ++mask) {
        const IndexSet lambda = IndexSet::from_mask(mask);
        if (oracle_is_greedy(x, m, lambda))
            out.push_back(lambda);
    }
    return out;
}

} // namespace

TEST_CASE("natural greedy ordering") {
    const GreedyOrdering g = natural_greedy_ordering(Vector::of({3, -5, 3, 0}));
    REQUIRE(g.order.size() == 4);
    CHECK(g.order[0] == 2); // |-5|
    CHECK(g.order[1] == 1); // tie |3| broken by index
    CHECK(g.order[2] == 3);
    CHECK(g.order[3] == 4);
    CHECK(g.support_size == 3);

    const GreedyOrdering ones = natural_greedy_ordering(Vector::of({1, 1}));
    CHECK(ones.order == std::vector<int>{1, 2});

    const GreedyOrdering zero = natural_greedy_ordering(Vector::of({0, 0, 0}));
    CHECK(zero.support_size == 0);
    CHECK(zero.order == std::vector<int>{1, 2, 3});
}

TEST_CASE("greedy_sum") {
    const Vector x = Vector::of({3, -5, 3});
    CHECK(greedy_sum(x, 2) == Vector::of({3, -5, 0}));
    CHECK(greedy_sum(x, 0) == Vector::of({0, 0, 0}));
    CHECK(greedy_sum(x, 3) == x);
    CHECK(natural_greedy_set(x, 1) == IndexSet::of({2}));
    CHECK_THROWS_AS(greedy_sum(x, 4), std::out_of_range);
}

TEST_CASE("all_greedy_sets: examples") {
    const auto tie = all_greedy_sets(Vector::of({1, 1}), 1);
    REQUIRE(tie.size() == 2);
    CHECK(tie[0] == IndexSet::of({1}));
    CHECK(tie[1] == IndexSet::of({2}));

    const auto unique = all_greedy_sets(Vector::of({3, -5, 1}), 1);
    REQUIRE(unique.size() == 1);
    CHECK(unique[0] == IndexSet::of({2}));

    const auto pairs = all_greedy_sets(Vector::of({2, 2, 2}), 2);
    CHECK(pairs.size() == 3); // C(3,2), all pairs qualify

    const auto empty = all_greedy_sets(Vector::of({1, 2}), 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());
}

TEST_CASE("all_greedy_sets matches the exhaustive oracle") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> level(-2, 2);
    std::uniform_int_distribution<int> dims(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const int dim = dims(rng);
        Vector x(dim);
        for (int i = 0; i < dim; ++i)
            x.set0(i, static_cast<double>(level(rng))); // integer levels force ties
        for (int m = 0; m <= dim; ++m) {
            const auto got = all_greedy_sets(x, m);
            const auto want = oracle_greedy_sets(x, m);
            REQUIRE(got.size() == want.size());
            auto sorted = got;
            std::sort(sorted.begin(), sorted.end(),
                      [](IndexSet a, IndexSet b) { return a.mask() < b.mask(); });
            for (std::size_t i = 0; i < sorted.size(); ++i)
                CHECK(sorted[i] == want[i]);
            // natural set is always the first enumerated
            CHECK(got.front() == natural_greedy_set(x, m));
            for (const IndexSet& lambda : got)
                CHECK(is_greedy_set(x, m, lambda));
        }
    }
}

TEST_CASE("truncate") {
    CHECK(truncate(Vector::of({3, -5, 1}), 2.0) == Vector::of({2, -2, 1}));
    CHECK(truncate(Vector::of({3, -5, 1}), 5.0) == Vector::of({3, -5, 1}));
    CHECK(truncate(Vector::of({-4, 4}), 1.0) == Vector::of({-1, 1}));
    CHECK_THROWS_AS(truncate(Vector::of({1.0}), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(truncate(Vector::of({1.0}), -1.0), std::invalid_argument);

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> alpha_dist(0.01, 4.0);
    for (int trial = 0; trial < 300; ++trial) {
        const Vector x = testutil::random_vector(rng, 6, 3.0);
        const double alpha = alpha_dist(rng);
        const Vector t = truncate(x, alpha);
        for (int i = 0; i < 6; ++i) {
            CHECK(std::fabs(t.at0(i)) == std::min(alpha, std::fabs(x.at0(i))));
            CHECK(t.at0(i) * x.at0(i) >= 0.0); // sign preserved
        }
    }
}
