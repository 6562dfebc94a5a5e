// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef GREEDYLAB_SPACES_HPP
#define GREEDYLAB_SPACES_HPP

#include <array>
#include <string>
#include <vector>

#include "greedylab/index_set.hpp"

namespace greedylab {

/// A finitely supported real coefficient sequence over {1..dim}.
/// Storage is dense; support is recovered on demand.
class Vector {
public:
    explicit Vector(int dim);

    /// dim = coeffs.size(); rejects NaN/Inf entries and dim outside [1, kMaxDim].
    static Vector of(const std::vector<double>& coeffs);

    int dim() const { return dim_; }

    /// e_n*(x) for 1-based n, range-checked.
    double coord(int n) const;

    /// 0-based unchecked access for library-internal loops.
    double at0(int i) const { return c_[static_cast<std::size_t>(i)]; }
    void set0(int i, double v) { c_[static_cast<std::size_t>(i)] = v; }

    IndexSet support() const;
    bool is_zero() const { return support().empty(); }

    bool operator==(const Vector& other) const;

    /// "(3 -5 1)"
    std::string to_string() const;

private:
    int dim_ = 0;
    std::array<double, kMaxDim> c_{};
};

/// A sign choice on a stated finite index set: eps_n in {+1,-1} for n in support.
class SignPattern {
public:
    SignPattern() = default;

    static SignPattern plus(IndexSet support) { return SignPattern(support, IndexSet()); }

    /// negatives must be a subset of support.
    static SignPattern from_negatives(IndexSet support, IndexSet negatives);

    IndexSet support() const { return support_; }
    IndexSet negatives() const { return negatives_; }
    bool defined_on(IndexSet a) const { return a.subset_of(support_); }

    /// +1 or -1; throws if n is outside the support.
    double at(int n) const;

    /// "+-+" listed in ascending index order over the support; "" on empty.
    std::string to_string() const;

private:
    SignPattern(IndexSet support, IndexSet negatives)
        : support_(support), negatives_(negatives) {}

    IndexSet support_;
    IndexSet negatives_;
};

enum class NormKind { lp, weighted_l1, summing, sup };

/// A named norm on coefficient sequences of a fixed ambient dimension.
///
/// Every catalog norm is a genuine norm (homogeneous, triangle, definite);
/// this contract is property-tested rather than assumed. Anything added to
/// the catalog must keep it, plus coordinate-wise finiteness, or the
/// enumeration machinery downstream is meaningless.
class NormModel {
public:
    static NormModel lp(double p, int dim); // p >= 1; +inf for the max norm
    static NormModel weighted_l1(std::vector<double> v);
    static NormModel summing(int dim);
    static NormModel sup(int dim);

    /// Config grammar: "lp:2", "lp:inf", "sup", "summing", "wl1:2,1,..."
    /// A wl1 list shorter than dim is extended periodically.
    static NormModel parse(const std::string& config, int dim);

    std::string config_string() const;

    NormKind kind() const { return kind_; }
    int dim() const { return dim_; }
    double p_exponent() const { return p_; }
    const std::vector<double>& coordinate_weights() const { return v_; }

    /// Norm value depends only on |x_n| and is monotone in each of them.
    /// True for every catalog kind except summing.
    bool diagonal() const { return kind_ != NormKind::summing; }

private:
    NormModel(NormKind kind, int dim, double p, std::vector<double> v)
        : kind_(kind), dim_(dim), p_(p), v_(std::move(v)) {}

    NormKind kind_;
    int dim_;
    double p_ = 0.0; // lp exponent, +inf allowed
    std::vector<double> v_; // weighted_l1 coordinate weights
};

/// ||x|| under the model. Throws on dimension mismatch.
double norm(const NormModel& model, const Vector& x);

/// e_n*(x); throws when n is out of range.
double coordinate(const Vector& x, int n);

/// P_A x for A inside {1..dim}; out-of-range indices throw.
Vector project(const Vector& x, IndexSet a);

/// P_m x = P_{{1..m}} x, 0 <= m <= dim.
Vector partial_sum(const Vector& x, int m);

/// 1_{eps A}: eps_n on A, zero elsewhere. Throws if eps is not defined on all of A.
Vector sign_indicator(IndexSet a, const SignPattern& eps, int dim);

double basis_vector_norm(const NormModel& model, int n);        // ||e_n||
double coordinate_functional_norm(const NormModel& model, int n); // ||e_n*||, closed form

struct BasisConstants {
    double c1;
    double c2;
};

/// c1 = min_n min(||e_n||, ||e_n*||), c2 = max_n max(...), n <= dim.
BasisConstants basis_constants(const NormModel& model);

enum class Exactness { exact_on_grid, lower_bound };

std::string to_string(Exactness e);

struct SchauderConstant {
    double value;
    Exactness exactness;
};

/// sup_m ||P_m||. Every catalog kind has the closed form 1: the diagonal
/// norms are coordinate-monotone and the summing norm satisfies
/// max_{k<=m}|S_k| <= max_k|S_k|. Verified against a grid oracle in tests.
SchauderConstant schauder_constant(const NormModel& model);

} // namespace greedylab

#endif
