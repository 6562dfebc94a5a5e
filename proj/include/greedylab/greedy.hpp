// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef GREEDYLAB_GREEDY_HPP
#define GREEDYLAB_GREEDY_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "greedylab/spaces.hpp"

namespace greedylab {

/// The natural greedy ordering rho of {1..dim}: magnitudes descending,
/// ties broken by ascending index. supp(x) occupies a prefix.
struct GreedyOrdering {
    std::vector<int> order; // a permutation of {1..dim}, 1-based
    int support_size = 0;
};

GreedyOrdering natural_greedy_ordering(const Vector& x);

/// A_m(x) = {rho(1..m)} under the natural ordering.
IndexSet natural_greedy_set(const Vector& x, int m);

/// G_m(x) = P_{A_m(x)} x.
Vector greedy_sum(const Vector& x, int m);

/// Every Lambda with |Lambda| = m and min_{Lambda}|x_n| >= max_{Lambda^c}|x_n|.
/// Magnitude ties are compared exactly on the stored doubles: extremal
/// families use deliberately separated levels like 1 and 1+delta, and an
/// epsilon here would merge them. The natural A_m(x) is always element 0.
std::vector<IndexSet> all_greedy_sets(const Vector& x, int m);

/// Enumerates the same sets without materialising them, ascending in the
/// lexicographic order of the tie completion. fn(IndexSet) may return void.
template <typename Fn>
void for_each_greedy_set(const Vector& x, int m, Fn&& fn);

/// |lambda| = m and min_{lambda}|x_n| >= max_{lambda^c}|x_n|, compared exactly.
bool is_greedy_set(const Vector& x, int m, IndexSet lambda);

/// T_alpha: clips every coefficient to magnitude alpha, preserving sign.
/// Throws when alpha <= 0.
Vector truncate(const Vector& x, double alpha);

/// Enumerates greedy sets for many m without re-sorting x each time.
/// A greedy set of cardinality m is the strict-majorant prefix plus any
/// completion from the magnitude-tie block of the m-th ordered coordinate.
class GreedySetScanner {
public:
    explicit GreedySetScanner(const Vector& x);

    /// fn(IndexSet) over every greedy set of cardinality m, natural set first
    /// (tie completions ascend lexicographically in index order).
    template <typename Fn>
    void for_each(int m, Fn&& fn) const {
        if (m < 0 || m > static_cast<int>(order_.size()))
            throw std::out_of_range("greedy set size outside 0..dim");
        if (m == 0) {
            fn(IndexSet());
            return;
        }
        const int bs = block_start_[static_cast<std::size_t>(m - 1)];
        const int be = block_end_[static_cast<std::size_t>(m - 1)];
        const IndexSet must = prefix_mask_[static_cast<std::size_t>(bs)];
        const int t = be - bs;
        const int k = m - bs;
        if (k == 0) {
            fn(must);
            return;
        }
        int idx[kMaxDim];
        for (int i = 0; i < k; ++i)
            idx[i] = i;
        while (true) {
            IndexSet lambda = must;
            for (int i = 0; i < k; ++i)
                lambda = lambda.with(order_[static_cast<std::size_t>(bs + idx[i])]);
            fn(lambda);
            int i = k - 1;
            while (i >= 0 && idx[i] == t - k + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }

    const std::vector<int>& order() const { return order_; }

    /// |x| of the m-th coordinate in greedy order (the common minimum over
    /// every greedy set of cardinality m), 1 <= m <= dim.
    double threshold(int m) const { return magnitude_[static_cast<std::size_t>(m - 1)]; }

private:
    std::vector<int> order_;        // natural greedy ordering
    std::vector<double> magnitude_; // |x| along order_, nonincreasing
    std::vector<int> block_start_;  // first position of the tie block at j
    std::vector<int> block_end_;    // one past the last position of that block
    std::vector<IndexSet> prefix_mask_; // order_[0..j) as a set
};

template <typename Fn>
void for_each_greedy_set(const Vector& x, int m, Fn&& fn) {
    GreedySetScanner(x).for_each(m, std::forward<Fn>(fn));
}

} // namespace greedylab

#endif
