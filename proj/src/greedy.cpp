// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#include "greedylab/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace greedylab {

GreedyOrdering natural_greedy_ordering(const Vector& x) {
    GreedyOrdering g;
    g.order.resize(static_cast<std::size_t>(x.dim()));
    for (int i = 0; i < x.dim(); ++i)
        g.order[static_cast<std::size_t>(i)] = i + 1;
    std::stable_sort(g.order.begin(), g.order.end(), [&](int a, int b) {
        const double ma = std::fabs(x.at0(a - 1));
        const double mb = std::fabs(x.at0(b - 1));
        if (ma != mb)
            return ma > mb;
        return a < b;
    });
    g.support_size = x.support().size();
    return g;
}

IndexSet natural_greedy_set(const Vector& x, int m) {
    if (m < 0 || m > x.dim())
        throw std::out_of_range("greedy set size outside 0..dim");
    const GreedyOrdering g = natural_greedy_ordering(x);
    IndexSet a;
    for (int j = 0; j < m; ++j)
        a = a.with(g.order[static_cast<std::size_t>(j)]);
    return a;
}

Vector greedy_sum(const Vector& x, int m) {
    return project(x, natural_greedy_set(x, m));
}

GreedySetScanner::GreedySetScanner(const Vector& x) {
    const GreedyOrdering g = natural_greedy_ordering(x);
    order_ = g.order;
    const std::size_t n = order_.size();
    magnitude_.resize(n);
    block_start_.resize(n);
    block_end_.resize(n);
    prefix_mask_.resize(n + 1);
    prefix_mask_[0] = IndexSet();
    for (std::size_t j = 0; j < n; ++j) {
        magnitude_[j] = std::fabs(x.at0(order_[j] - 1));
        prefix_mask_[j + 1] = prefix_mask_[j].with(order_[j]);
        block_start_[j] = (j > 0 && magnitude_[j] == magnitude_[j - 1])
                              ? block_start_[j - 1]
                              : static_cast<int>(j);
    }
    for (std::size_t j = n; j-- > 0;) {
        block_end_[j] = (j + 1 < n && magnitude_[j] == magnitude_[j + 1])
                            ? block_end_[j + 1]
                            : static_cast<int>(j) + 1;
    }
}

std::vector<IndexSet> all_greedy_sets(const Vector& x, int m) {
    if (m < 0 || m > x.dim())
        throw std::out_of_range("greedy set size outside 0..dim");
    std::vector<IndexSet> out;
    for_each_greedy_set(x, m, [&](IndexSet lambda) { out.push_back(lambda); });
    return out;
}

bool is_greedy_set(const Vector& x, int m, IndexSet lambda) {
    if (lambda.size() != m)
        return false;
    if (!lambda.empty() && lambda.max() > x.dim())
        return false;
    double min_in = std::numeric_limits<double>::infinity();
    double max_out = 0.0;
    for (int n = 1; n <= x.dim(); ++n) {
        const double mag = std::fabs(x.at0(n - 1));
        if (lambda.contains(n))
            min_in = std::min(min_in, mag);
        else
            max_out = std::max(max_out, mag);
    }
    return min_in >= max_out;
}

Vector truncate(const Vector& x, double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("truncate: alpha must be positive");
    Vector out(x.dim());
    for (int i = 0; i < x.dim(); ++i) {
        const double z = x.at0(i);
        out.set0(i, std::fabs(z) > alpha ? std::copysign(alpha, z) : z);
    }
    return out;
}

} // namespace greedylab
