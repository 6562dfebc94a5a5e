// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef GREEDYLAB_TEST_UTIL_HPP
#define GREEDYLAB_TEST_UTIL_HPP

#include <limits>
#include <random>
#include <vector>

#include "greedylab/analysis.hpp"
#include "greedylab/spaces.hpp"

namespace testutil {

using namespace greedylab;

inline std::vector<NormModel> catalog(int dim) {
    return {
        NormModel::lp(1.0, dim),
        NormModel::lp(2.0, dim),
        NormModel::lp(std::numeric_limits<double>::infinity(), dim),
        NormModel::sup(dim),
        NormModel::summing(dim),
        NormModel::parse("wl1:2,1", dim),
    };
}

inline Vector random_vector(std::mt19937_64& rng, int dim, double amp) {
    std::uniform_real_distribution<double> u(-amp, amp);
    Vector x(dim);
    for (int i = 0; i < dim; ++i)
        x.set0(i, u(rng));
    return x;
}

inline IndexSet random_subset(std::mt19937_64& rng, int dim, int size) {
    IndexSet s;
    std::uniform_int_distribution<int> pick(1, dim);
    while (s.size() < size)
        s = s.with(pick(rng));
    return s;
}

} // namespace testutil

#endif
