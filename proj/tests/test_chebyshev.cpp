// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "greedylab/chebyshev.hpp"
#include "test_util.hpp"

using namespace greedylab;

namespace {

Vector apply_coeffs(const Vector& x, const std::vector<std::pair<int, double>>& coeffs) {
    Vector r = x;
    for (const auto& [n, a] : coeffs)
        r.set0(n - 1, r.at0(n - 1) - a);
    return r;
}

double big_span(const Vector& x) {
    double mx = 0.0, sum = 0.0;
    for (int i = 0; i < x.dim(); ++i) {
        mx = std::max(mx, std::fabs(x.at0(i)));
        sum += std::fabs(x.at0(i));
    }
    return mx + 2.0 * sum + 1.0; // contains every optimal coefficient
}

} // namespace

TEST_CASE("chebyshev_min: diagonal closed forms") {
    const NormModel l2 = NormModel::lp(2.0, 3);
    const Vector x = Vector::of({3, -5, 1});
    const ChebyshevResult r = chebyshev_min(l2, x, IndexSet::of({2}));
    REQUIRE(r.coeffs.size() == 1);
    CHECK(r.coeffs[0].first == 2);
    CHECK(r.coeffs[0].second == doctest::Approx(-5.0));
    CHECK(r.value == doctest::Approx(std::sqrt(10.0)));
    CHECK(r.certified_gap == 0.0);

    // min_a max(|4-a|, 1): the descent start a = 4 is already optimal
    const ChebyshevResult s =
        chebyshev_min(NormModel::sup(3), Vector::of({4, 1, 0}), IndexSet::of({1}));
    CHECK(s.value == doctest::Approx(1.0));
    CHECK(s.coeffs[0].second == doctest::Approx(4.0));
    CHECK(std::fabs(chebyshev_oracle(NormModel::sup(3), Vector::of({4, 1, 0}),
                                     IndexSet::of({1})) -
                    1.0) <= 1e-4);

    // diagonal value coincides bitwise with the projection residual
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        const Vector y = testutil::random_vector(rng, 5, 2.0);
        const IndexSet a = testutil::random_subset(rng, 5, 2);
        for (const char* cfg : {"lp:1", "lp:2", "lp:inf", "sup", "wl1:2,1"}) {
            const NormModel model = NormModel::parse(cfg, 5);
            CHECK(chebyshev_min(model, y, a).value ==
                  norm(model, project(y, IndexSet::full(5).setminus(a))));
        }
    }
}

TEST_CASE("chebyshev_min: summing norm vs hand value and oracle") {
    const NormModel sm = NormModel::summing(3);
    const Vector x = Vector::of({1, -1, 1});
    const ChebyshevResult r = chebyshev_min(sm, x, IndexSet::of({2}));
    // residual (1, t, 1): min over t of max(1, |1+t|, |2+t|) = 1
    CHECK(std::fabs(r.value - 1.0) <= 1e-6);
    const double oracle = chebyshev_oracle(sm, x, IndexSet::of({2}), big_span(x), 81);
    CHECK(std::fabs(r.value - oracle) <= 1e-4);

    // empty support returns the plain norm
    CHECK(chebyshev_min(sm, x, IndexSet()).value == doctest::Approx(norm(sm, x)));
    CHECK(chebyshev_oracle(sm, x, IndexSet()) == doctest::Approx(norm(sm, x)));
}

TEST_CASE("chebyshev_min: deterministic") {
    const NormModel sm = NormModel::summing(5);
    const Vector x = Vector::of({2, -1, 3, 0.5, -2});
    const ChebyshevResult a = chebyshev_min(sm, x, IndexSet::of({1, 3, 5}));
    const ChebyshevResult b = chebyshev_min(sm, x, IndexSet::of({1, 3, 5}));
    CHECK(a.value == b.value);
    CHECK(a.certified_gap == kChebEps); // descent converged
    REQUIRE(a.coeffs.size() == b.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        CHECK(a.coeffs[i].second == b.coeffs[i].second);
}

TEST_CASE("chebyshev_greedy_sum") {
    const Vector x = Vector::of({3, -5, 1});
    const ChebyshevResult l1 =
        chebyshev_greedy_sum(NormModel::lp(1.0, 3), x, 1, IndexSet::of({2}));
    CHECK(l1.value == doctest::Approx(4.0)); // l1 keeps its own coefficient
    CHECK(l1.coeffs[0].second == doctest::Approx(-5.0));

    const NormModel sm = NormModel::summing(3);
    CHECK(chebyshev_greedy_sum(sm, x, 0, IndexSet()).value == doctest::Approx(norm(sm, x)));
    CHECK(chebyshev_greedy_sum(sm, x, 3, IndexSet::full(3)).value <= 1e-12);

    CHECK_THROWS_AS(chebyshev_greedy_sum(sm, x, 1, IndexSet::of({1})), std::invalid_argument);
    CHECK_THROWS_AS(chebyshev_greedy_sum(sm, x, 2, IndexSet::of({2})), std::invalid_argument);
}

TEST_CASE("chebyshev results recompute and sandwich") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> size(0, 3);
    for (const NormModel& model : testutil::catalog(6)) {
        for (int trial = 0; trial < 60; ++trial) {
            const Vector x = testutil::random_vector(rng, 6, 2.0);
            const IndexSet a =
                size(rng) == 0 ? IndexSet() : testutil::random_subset(rng, 6, size(rng));
            const ChebyshevResult r = chebyshev_min(model, x, a);
            CHECK(std::fabs(norm(model, apply_coeffs(x, r.coeffs)) - r.value) <= 1e-12);
            // greedy coefficients are feasible
            CHECK(r.value <= norm(model, project(x, IndexSet::full(6).setminus(a))) + 1e-12);
            CHECK(r.certified_gap >= 0.0);
        }
    }
}

TEST_CASE("objective is convex along coefficient segments") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (const NormModel& model : testutil::catalog(5)) {
        for (int trial = 0; trial < 100; ++trial) {
            const Vector x = testutil::random_vector(rng, 5, 2.0);
            const IndexSet a = testutil::random_subset(rng, 5, 2);
            std::vector<std::pair<int, double>> ca, cb, mid;
            for (int n : a.indices()) {
                ca.emplace_back(n, u(rng));
                cb.emplace_back(n, u(rng));
                mid.emplace_back(n, 0.5 * (ca.back().second + cb.back().second));
            }
            const double fa = norm(model, apply_coeffs(x, ca));
            const double fb = norm(model, apply_coeffs(x, cb));
            const double fm = norm(model, apply_coeffs(x, mid));
            CHECK(fm <= 0.5 * (fa + fb) + 1e-10);
        }
    }
}

namespace {

// Exact minimum for the summing norm: with support A = {j_1 < ... < j_k},
// the suffix shifts decouple per block of off-A prefix sums, so the optimum
// is the prefix max before j_1 joined with each block's half-spread.
double exact_summing_min(const Vector& x, IndexSet a) {
    const auto idx = a.indices();
    const int dim = x.dim();
    double run = 0.0, best = 0.0;
    for (int m = 1; m < idx.front(); ++m) {
        run += x.at0(m - 1);
        best = std::max(best, std::fabs(run));
    }
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const int from = idx[k];
        const int to = k + 1 < idx.size() ? idx[k + 1] - 1 : dim;
        double hi = -1e300, lo = 1e300;
        for (int m = from; m <= to; ++m) {
            if (!a.contains(m))
                run += x.at0(m - 1);
            hi = std::max(hi, run);
            lo = std::min(lo, run);
        }
        best = std::max(best, 0.5 * (hi - lo));
    }
    return best;
}

} // namespace

TEST_CASE("summing descent reaches the exact block optimum") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> dims(4, 8);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    for (int trial = 0; trial < 300; ++trial) {
        const int dim = dims(rng);
        Vector x(dim);
        for (int i = 0; i < dim; ++i)
            x.set0(i, coeff(rng));
        std::uniform_int_distribution<int> sizes(1, dim - 1);
        const IndexSet a = testutil::random_subset(rng, dim, sizes(rng));
        const double value = chebyshev_min(NormModel::summing(dim), x, a).value;
        CHECK(std::fabs(value - exact_summing_min(x, a)) <= 1e-6);
    }
}

TEST_CASE("oracle agreement on random instances") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> dims(3, 6);
    std::uniform_int_distribution<int> size(1, 3);
    std::uniform_real_distribution<double> coeff(-1.5, 1.5);
    const auto models = testutil::catalog(6);
    for (int trial = 0; trial < 60; ++trial) {
        const int dim = dims(rng);
        const NormModel model = NormModel::parse(
            models[static_cast<std::size_t>(trial) % models.size()].config_string(), dim);
        Vector x(dim);
        for (int i = 0; i < dim; ++i)
            x.set0(i, coeff(rng));
        const IndexSet a = testutil::random_subset(rng, dim, size(rng));
        const double value = chebyshev_min(model, x, a).value;
        const double oracle = chebyshev_oracle(model, x, a, big_span(x), 81);
        CHECK(std::fabs(value - oracle) <= 1e-4);
    }
}

TEST_CASE("support guards") {
    Vector x(14);
    for (int i = 0; i < 14; ++i)
        x.set0(i, 1.0 + i);
    IndexSet big;
    for (int n = 1; n <= 13; ++n)
        big = big.with(n);
    CHECK_THROWS_AS(chebyshev_min(NormModel::summing(14), x, big), std::invalid_argument);
    CHECK_THROWS_AS(chebyshev_oracle(NormModel::lp(2.0, 14), x, IndexSet::of({1, 2, 3, 4})),
                    std::invalid_argument);
}
