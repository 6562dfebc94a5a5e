// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "greedylab/spaces.hpp"
#include "test_util.hpp"

using namespace greedylab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// grid maximisation of |x_n| / ||x||, the oracle for ||e_n*|| closed forms
double dual_norm_oracle(const NormModel& model, int n) {
    const int dim = model.dim();
    const double levels[5] = {0.0, 1.0, -1.0, 2.0, -2.0};
    std::vector<int> idx(static_cast<std::size_t>(dim), 0);
    Vector x(dim);
    double best = 0.0;
    while (true) {
        bool nonzero = false;
        for (int i = 0; i < dim; ++i) {
            x.set0(i, levels[idx[static_cast<std::size_t>(i)]]);
            nonzero |= idx[static_cast<std::size_t>(i)] != 0;
        }
        if (nonzero)
            best = std::max(best, std::fabs(x.at0(n - 1)) / norm(model, x));
        int i = dim - 1;
        while (i >= 0 && ++idx[static_cast<std::size_t>(i)] == 5) {
            idx[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0)
            break;
    }
    return best;
}

} // namespace

TEST_CASE("norm: catalog examples") {
    CHECK(norm(NormModel::lp(2.0, 3), Vector::of({3, 4, 0})) == doctest::Approx(5.0));
    // partial sums 1, 0, 1
    CHECK(norm(NormModel::summing(3), Vector::of({1, -1, 1})) == doctest::Approx(1.0));
    CHECK(norm(NormModel::parse("wl1:2,1", 2), Vector::of({1, 1})) == doctest::Approx(3.0));
    CHECK(norm(NormModel::lp(kInf, 3), Vector::of({1, -4, 2})) == doctest::Approx(4.0));
    CHECK(norm(NormModel::sup(3), Vector::of({1, -4, 2})) == doctest::Approx(4.0));

    CHECK_THROWS_AS(norm(NormModel::lp(2.0, 3), Vector::of({1, 2})), std::invalid_argument);
}

TEST_CASE("norm axioms on random vectors") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> scale(-3.0, 3.0);
    for (const NormModel& model : testutil::catalog(6)) {
        for (int trial = 0; trial < 1000; ++trial) {
            const Vector x = testutil::random_vector(rng, 6, 2.0);
            const Vector y = testutil::random_vector(rng, 6, 2.0);
            const double lambda = scale(rng);
            Vector lx(6), sum(6);
            for (int i = 0; i < 6; ++i) {
                lx.set0(i, lambda * x.at0(i));
                sum.set0(i, x.at0(i) + y.at0(i));
            }
            const double nx = norm(model, x);
            CHECK(std::fabs(norm(model, lx) - std::fabs(lambda) * nx) <=
                  1e-12 * std::max(1.0, std::fabs(lambda) * nx));
            CHECK(norm(model, sum) <= nx + norm(model, y) + 1e-12);
            if (nx == 0.0)
                CHECK(x.support().empty());
        }
    }
}

TEST_CASE("coordinate") {
    const Vector x = Vector::of({3, -5, 1});
    CHECK(coordinate(x, 2) == -5.0);
    CHECK(coordinate(x, 3) == 1.0);
    const Vector e1 = sign_indicator(IndexSet::of({1}), SignPattern::plus(IndexSet::of({1})), 3);
    CHECK(coordinate(e1, 1) == 1.0);
    CHECK_THROWS_AS(coordinate(x, 0), std::out_of_range);
    CHECK_THROWS_AS(coordinate(x, 4), std::out_of_range);
}

TEST_CASE("project") {
    const Vector x = Vector::of({3, -5, 1});
    CHECK(project(x, IndexSet::of({1, 3})) == Vector::of({3, 0, 1}));
    CHECK(project(x, IndexSet()) == Vector::of({0, 0, 0}));
    CHECK(project(x, IndexSet::full(3)) == x);
    CHECK_THROWS_AS(project(x, IndexSet::of({4})), std::out_of_range);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Vector y = testutil::random_vector(rng, 5, 3.0);
        const IndexSet a = testutil::random_subset(rng, 5, 2);
        const Vector pa = project(y, a);
        CHECK(project(pa, a) == pa); // idempotent, exactly
        const Vector pc = project(y, IndexSet::full(5).setminus(a));
        Vector back(5);
        for (int i = 0; i < 5; ++i)
            back.set0(i, pa.at0(i) + pc.at0(i));
        CHECK(back == y); // P_A + P_{A^c} = I, exactly
    }
}

TEST_CASE("partial_sum") {
    const Vector x = Vector::of({3, -5, 1});
    CHECK(partial_sum(x, 2) == Vector::of({3, -5, 0}));
    CHECK(partial_sum(x, 0) == Vector::of({0, 0, 0}));
    CHECK(partial_sum(x, 3) == x);
    CHECK_THROWS_AS(partial_sum(x, 4), std::out_of_range);
}

TEST_CASE("sign_indicator") {
    const IndexSet a = IndexSet::of({1, 3});
    CHECK(sign_indicator(a, SignPattern::plus(a), 4) == Vector::of({1, 0, 1, 0}));
    const IndexSet b = IndexSet::of({2});
    CHECK(sign_indicator(b, SignPattern::from_negatives(b, b), 3) == Vector::of({0, -1, 0}));
    CHECK(sign_indicator(IndexSet(), SignPattern::plus(IndexSet()), 2) == Vector::of({0, 0}));
    // pattern defined on {1} only, A = {1,3}
    CHECK_THROWS_AS(sign_indicator(a, SignPattern::plus(IndexSet::of({1})), 4),
                    std::invalid_argument);
}

TEST_CASE("basis_constants against the grid oracle") {
    for (const NormModel& model : testutil::catalog(4)) {
        const BasisConstants bc = basis_constants(model);
        CHECK(bc.c1 > 0.0);
        for (int n = 1; n <= model.dim(); ++n) {
            const double en = basis_vector_norm(model, n);
            const double fn = coordinate_functional_norm(model, n);
            // ||e_n|| from the norm itself
            Vector e(model.dim());
            e.set0(n - 1, 1.0);
            CHECK(norm(model, e) == doctest::Approx(en).epsilon(1e-12));
            // closed-form ||e_n*|| equals the grid maximum
            CHECK(fn == doctest::Approx(dual_norm_oracle(model, n)).epsilon(1e-9));
            CHECK(bc.c1 <= en + 1e-12);
            CHECK(bc.c1 <= fn + 1e-12);
            CHECK(en <= bc.c2 + 1e-12);
            CHECK(fn <= bc.c2 + 1e-12);
        }
    }

    const BasisConstants l2 = basis_constants(NormModel::lp(2.0, 4));
    CHECK(l2.c1 == doctest::Approx(1.0));
    CHECK(l2.c2 == doctest::Approx(1.0));
    const BasisConstants w = basis_constants(NormModel::parse("wl1:2,1", 2));
    CHECK(w.c1 == doctest::Approx(0.5));
    CHECK(w.c2 == doctest::Approx(2.0));
    const BasisConstants s = basis_constants(NormModel::summing(3));
    CHECK(s.c1 == doctest::Approx(1.0));
    CHECK(s.c2 == doctest::Approx(2.0));
}

TEST_CASE("schauder_constant against the grid oracle") {
    for (const NormModel& model : testutil::catalog(5)) {
        const SchauderConstant kb = schauder_constant(model);
        CHECK(kb.value == doctest::Approx(1.0));
        CHECK(kb.exactness == Exactness::exact_on_grid);

        // oracle: max over grid x and m of ||P_m x|| / ||x||
        double best = 0.0;
        const double levels[5] = {0.0, 1.0, -1.0, 2.0, -2.0};
        std::vector<int> idx(5, 0);
        Vector x(5);
        while (true) {
            bool nonzero = false;
            for (int i = 0; i < 5; ++i) {
                x.set0(i, levels[idx[static_cast<std::size_t>(i)]]);
                nonzero |= idx[static_cast<std::size_t>(i)] != 0;
            }
            if (nonzero) {
                const double nx = norm(model, x);
                for (int m = 0; m <= 5; ++m)
                    best = std::max(best, norm(model, partial_sum(x, m)) / nx);
            }
            int i = 4;
            while (i >= 0 && ++idx[static_cast<std::size_t>(i)] == 5) {
                idx[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0)
                break;
        }
        CHECK(best == doctest::Approx(kb.value).epsilon(1e-12));
    }
}

TEST_CASE("convex hull of signed indicators dominates small coefficients") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> size(1, 8);
    for (const NormModel& model : testutil::catalog(8)) {
        for (int trial = 0; trial < 100; ++trial) {
            const IndexSet a = testutil::random_subset(rng, 8, size(rng));
            Vector z(8);
            for_each_index(a, [&](int n) { z.set0(n - 1, unit(rng)); });
            double hull = 0.0;
            const std::uint32_t am = a.mask();
            std::uint32_t neg = 0;
            Vector se(8);
            while (true) {
                for (int i = 0; i < 8; ++i) {
                    const std::uint32_t bit = 1u << i;
                    se.set0(i, (am & bit) ? ((neg & bit) ? -1.0 : 1.0) : 0.0);
                }
                hull = std::max(hull, norm(model, se));
                neg = (neg - am) & am;
                if (neg == 0)
                    break;
            }
            CHECK(norm(model, z) <= hull + 1e-9);
        }
    }
}

TEST_CASE("NormModel config strings") {
    CHECK(NormModel::parse("lp:2", 4).kind() == NormKind::lp);
    CHECK(NormModel::parse("lp:inf", 4).p_exponent() == kInf);
    CHECK(NormModel::parse("sup", 4).kind() == NormKind::sup);
    CHECK(NormModel::parse("summing", 4).kind() == NormKind::summing);
    const NormModel w = NormModel::parse("wl1:2,1", 4); // periodic extension
    CHECK(w.coordinate_weights() == std::vector<double>{2, 1, 2, 1});
    CHECK(w.config_string() == "wl1:2,1,2,1");
    CHECK(NormModel::parse("lp:2", 4).config_string() == "lp:2");

    CHECK_THROWS_AS(NormModel::parse("lp:zero", 4), std::invalid_argument);
    CHECK_THROWS_AS(NormModel::parse("lp:0.5", 4), std::invalid_argument);
    CHECK_THROWS_AS(NormModel::parse("wl1:2,-1", 4), std::invalid_argument);
    CHECK_THROWS_AS(NormModel::parse("banana", 4), std::invalid_argument);
}

TEST_CASE("Vector validation") {
    CHECK_THROWS_AS(Vector::of({1.0, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(Vector::of({1.0, kInf}), std::invalid_argument);
    CHECK_THROWS_AS(Vector::of(std::vector<double>(17, 0.0)), std::invalid_argument);
    CHECK(Vector::of({0, 2, 0}).support() == IndexSet::of({2}));
}
