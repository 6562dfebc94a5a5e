// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#include "greedylab/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace greedylab {

namespace {

constexpr int kMaxSweeps = 200;
constexpr double kSweepStop = 1e-9;

Vector residual_from_coeffs(const Vector& x, const std::vector<std::pair<int, double>>& coeffs) {
    Vector r = x;
    for (const auto& [n, a] : coeffs)
        r.set0(n - 1, r.at0(n - 1) - a);
    return r;
}

// Coordinate descent on the summing-norm objective, in residual coordinates
// r_n = x_n - a_n for n in A. The 1D slice in r_j is
//   max( max_{m<j}|S_m|, max_{m>=j}|S_m + t| ),
// whose minimising interval is centred at t* = -(hi+lo)/2 with hi/lo the
// extreme suffix partial sums; landing on the centre doubles as the
// tie-break on flat slices, which is what lets later sweeps finish the job
// when two segments pin the current level.
ChebyshevResult summing_descent(const NormModel& model, const Vector& x, IndexSet a) {
    const int n = x.dim();
    Vector r = x;
    for_each_index(a, [&](int idx) { r.set0(idx - 1, 0.0); }); // start at a = P_A x

    std::vector<double> s(static_cast<std::size_t>(n)); // partial sums of r
    auto rebuild = [&]() {
        double run = 0.0;
        for (int i = 0; i < n; ++i) {
            run += r.at0(i);
            s[static_cast<std::size_t>(i)] = run;
        }
    };
    auto objective = [&]() {
        double m = 0.0;
        for (int i = 0; i < n; ++i)
            m = std::max(m, std::fabs(s[static_cast<std::size_t>(i)]));
        return m;
    };

    rebuild();
    double value = objective();
    double last_improvement = 0.0;
    bool converged = false;
    const std::vector<int> coords = a.indices();

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double max_move = 0.0;
        for (int j : coords) {
            double hi = -std::numeric_limits<double>::infinity();
            double lo = std::numeric_limits<double>::infinity();
            for (int m = j - 1; m < n; ++m) {
                hi = std::max(hi, s[static_cast<std::size_t>(m)]);
                lo = std::min(lo, s[static_cast<std::size_t>(m)]);
            }
            const double delta = -0.5 * (hi + lo);
            if (delta != 0.0) {
                r.set0(j - 1, r.at0(j - 1) + delta);
                for (int m = j - 1; m < n; ++m)
                    s[static_cast<std::size_t>(m)] += delta;
                max_move = std::max(max_move, std::fabs(delta));
            }
        }
        const double next = objective();
        last_improvement = value - next;
        value = next;
        if (last_improvement < kSweepStop && max_move < kSweepStop) {
            converged = true;
            break;
        }
    }

    ChebyshevResult out;
    for (int idx : coords)
        out.coeffs.emplace_back(idx, x.at0(idx - 1) - r.at0(idx - 1));
    out.value = norm(model, residual_from_coeffs(x, out.coeffs));
    // a sweep-cap exit reports a deliberately loose bound
    out.certified_gap = converged ? kChebEps : std::max(100.0 * kChebEps, last_improvement);
    return out;
}

} // namespace

ChebyshevResult chebyshev_min(const NormModel& model, const Vector& x, IndexSet a) {
    if (model.dim() != x.dim())
        throw std::invalid_argument("chebyshev_min: model dim != vector dim");
    if (!a.empty() && a.max() > x.dim())
        throw std::out_of_range("chebyshev_min: A reaches beyond dim");
    if (a.size() > kChebMaxSupport)
        throw std::invalid_argument("chebyshev_min: |A| > " + std::to_string(kChebMaxSupport));

    if (a.empty())
        return {{}, norm(model, x), 0.0};

    if (model.diagonal()) {
        // The objective splits coordinate-wise for absolute monotone norms;
        // a_n = x_n zeroes every free coordinate of the residual.
        ChebyshevResult out;
        for_each_index(a, [&](int n) { out.coeffs.emplace_back(n, x.at0(n - 1)); });
        out.value = norm(model, residual_from_coeffs(x, out.coeffs));
        out.certified_gap = 0.0;
        return out;
    }
    return summing_descent(model, x, a);
}

double chebyshev_oracle(const NormModel& model, const Vector& x, IndexSet a, double span,
                        int steps) {
    if (model.dim() != x.dim())
        throw std::invalid_argument("chebyshev_oracle: model dim != vector dim");
    if (a.size() > 3)
        throw std::invalid_argument("chebyshev_oracle: |A| > 3");
    if (steps < 3)
        throw std::invalid_argument("chebyshev_oracle: steps < 3");
    if (a.empty())
        return norm(model, x);

    if (span <= 0.0) {
        double mx = 0.0;
        for (int i = 0; i < x.dim(); ++i)
            mx = std::max(mx, std::fabs(x.at0(i)));
        span = mx > 0.0 ? 2.0 * mx : 1.0;
    }

    const std::vector<int> coords = a.indices();
    const int d = static_cast<int>(coords.size());
    std::vector<double> center(static_cast<std::size_t>(d), 0.0);
    double radius = span;
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_point = center;

    Vector probe = x;
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    for (int pass = 0; pass < 5; ++pass) { // initial scan + 4 refinements
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            for (int k = 0; k < d; ++k) {
                const double t = center[static_cast<std::size_t>(k)] - radius +
                                 2.0 * radius * idx[static_cast<std::size_t>(k)] / (steps - 1);
                probe.set0(coords[static_cast<std::size_t>(k)] - 1,
                           x.at0(coords[static_cast<std::size_t>(k)] - 1) - t);
            }
            const double v = norm(model, probe);
            if (v < best) {
                best = v;
                for (int k = 0; k < d; ++k)
                    best_point[static_cast<std::size_t>(k)] =
                        center[static_cast<std::size_t>(k)] - radius +
                        2.0 * radius * idx[static_cast<std::size_t>(k)] / (steps - 1);
            }
            int k = d - 1;
            while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == steps) {
                idx[static_cast<std::size_t>(k)] = 0;
                --k;
            }
            if (k < 0)
                break;
        }
        center = best_point;
        radius /= 10.0;
    }
    return best;
}

ChebyshevResult chebyshev_greedy_sum(const NormModel& model, const Vector& x, int m,
                                     IndexSet lambda) {
    if (!is_greedy_set(x, m, lambda))
        throw std::invalid_argument("chebyshev_greedy_sum: Lambda is not a greedy set of x");
    return chebyshev_min(model, x, lambda);
}

} // namespace greedylab
