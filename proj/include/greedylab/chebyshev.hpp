// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef GREEDYLAB_CHEBYSHEV_HPP
#define GREEDYLAB_CHEBYSHEV_HPP

#include <utility>
#include <vector>

#include "greedylab/greedy.hpp"
#include "greedylab/spaces.hpp"

namespace greedylab {

/// Absolute optimality target of chebyshev_min.
inline constexpr double kChebEps = 1e-6;

/// Largest support chebyshev_min accepts.
inline constexpr int kChebMaxSupport = 12;

struct ChebyshevResult {
    std::vector<std::pair<int, double>> coeffs; // (index, a_n), ascending index
    double value = 0.0;          // ||x - sum a_n e_n||, recomputed from coeffs
    double certified_gap = 0.0;  // solver's claimed distance to the true min
};

/// min over real a of ||x - sum_{n in A} a_n e_n||.
///
/// The objective is a norm of an affine function of a, hence convex; for the
/// diagonal kinds a_n = x_n is optimal and used in closed form. For the
/// summing norm the minimiser runs cyclic coordinate descent with an exact
/// 1D line search per coordinate, started at a = P_A x, landing on the
/// midpoint of each flat slice-optimal interval. Among non-unique minimisers
/// the value is the contract; coefficients are the descent limit.
/// Refuses |A| > kChebMaxSupport.
ChebyshevResult chebyshev_min(const NormModel& model, const Vector& x, IndexSet a);

/// Independent grid check of chebyshev_min. Scans [-span, span]^|A| with
/// `steps` points per axis, then shrinks the grid 10x around the best point
/// four times. span <= 0 picks the default 2 * max|x_n|. Refuses |A| > 3.
double chebyshev_oracle(const NormModel& model, const Vector& x, IndexSet a,
                        double span = 0.0, int steps = 25);

/// chebyshev_min over a greedy set Lambda of cardinality m.
/// Throws when Lambda is not a greedy set of x.
ChebyshevResult chebyshev_greedy_sum(const NormModel& model, const Vector& x, int m,
                                     IndexSet lambda);

} // namespace greedylab

#endif
