// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef GREEDYLAB_WEIGHTS_HPP
#define GREEDYLAB_WEIGHTS_HPP

#include <string>
#include <vector>

#include "greedylab/index_set.hpp"

namespace greedylab {

/// Slack used in every w(A) <= delta comparison. delta is itself usually a
/// computed w(A_m(x)) and must admit the generating set despite float ties.
inline constexpr double kMeasureSlack = 1e-12;

enum class WeightRule { constant, power, geometric, explicit_prefix };

/// A parametric positive sequence w_n with a decidable tail regime.
class Weight {
public:
    static Weight constant(double c);
    static Weight power(double a);      // w_n = n^a
    static Weight geometric(double r);  // w_n = r^n
    static Weight explicit_prefix(std::vector<double> prefix, double tail_c);

    /// Config grammar: "const:1", "pow:-2", "geom:0.5", "explicit:2,1,1+const:1"
    static Weight parse(const std::string& config);

    std::string config_string() const;

    WeightRule rule() const { return rule_; }
    double at(int n) const; // w_n, 1-based

    double constant_value() const { return a_; }
    double power_exponent() const { return a_; }
    double geometric_ratio() const { return a_; }
    const std::vector<double>& prefix() const { return prefix_; }
    double tail_constant() const { return tail_; }

private:
    Weight(WeightRule rule, double a, std::vector<double> prefix, double tail)
        : rule_(rule), a_(a), prefix_(std::move(prefix)), tail_(tail) {}

    WeightRule rule_;
    double a_ = 0.0; // c, a or r depending on rule
    std::vector<double> prefix_;
    double tail_ = 0.0;
};

/// w(A) = sum_{i in A} w_i, accumulated in ascending index order.
double measure(const Weight& w, IndexSet a);

enum class RegimeTag { divergent_bounded, summable, unbounded_sup };

std::string to_string(RegimeTag tag);

struct WeightRegime {
    RegimeTag tag;
    bool inf_zero; // inf_n w_n = 0, independent of the tag
};

/// Symbolic classification by rule. Never numeric: convergence of sum w_n is
/// not decidable from finitely many terms.
WeightRegime classify_regime(const Weight& w);

/// limsup_n w_n, computed symbolically; may be +inf.
double limsup_weight(const Weight& w);

/// All A subset {1..dim} with w(A) <= delta + kMeasureSlack, in ascending
/// mask order (so the empty set always comes first). Refuses dim > kMaxDim.
std::vector<IndexSet> subsets_with_measure_at_most(const Weight& w, double delta, int dim);

} // namespace greedylab

#endif
