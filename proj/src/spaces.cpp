// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#include "greedylab/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace greedylab {

// --- IndexSet ---

IndexSet IndexSet::of(std::initializer_list<int> indices) {
    IndexSet s;
    for (int n : indices) {
        if (n < 1 || n > kMaxDim)
            throw std::out_of_range("IndexSet: index " + std::to_string(n) + " outside 1.." +
                                    std::to_string(kMaxDim));
        s.mask_ |= 1u << (n - 1);
    }
    return s;
}

IndexSet IndexSet::of(const std::vector<int>& indices) {
    IndexSet s;
    for (int n : indices) {
        if (n < 1 || n > kMaxDim)
            throw std::out_of_range("IndexSet: index " + std::to_string(n) + " outside 1.." +
                                    std::to_string(kMaxDim));
        s.mask_ |= 1u << (n - 1);
    }
    return s;
}

IndexSet IndexSet::full(int n) {
    if (n < 0 || n > kMaxDim)
        throw std::out_of_range("IndexSet::full: n outside 0.." + std::to_string(kMaxDim));
    return from_mask(n == 0 ? 0u : (n == 32 ? ~0u : (1u << n) - 1u));
}

std::vector<int> IndexSet::indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each_index(*this, [&](int n) { out.push_back(n); });
    return out;
}

std::string IndexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for_each_index(*this, [&](int n) {
        if (!first)
            out += ' ';
        out += std::to_string(n);
        first = false;
    });
    out += '}';
    return out;
}

// --- Vector ---

Vector::Vector(int dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim)
        throw std::invalid_argument("Vector: dim outside 1.." + std::to_string(kMaxDim));
}

Vector Vector::of(const std::vector<double>& coeffs) {
    Vector x(static_cast<int>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!std::isfinite(coeffs[i]))
            throw std::invalid_argument("Vector: coefficient " + std::to_string(i + 1) +
                                        " is not finite");
        x.c_[i] = coeffs[i];
    }
    return x;
}

double Vector::coord(int n) const {
    if (n < 1 || n > dim_)
        throw std::out_of_range("coordinate index " + std::to_string(n) + " outside 1.." +
                                std::to_string(dim_));
    return c_[static_cast<std::size_t>(n - 1)];
}

IndexSet Vector::support() const {
    std::uint32_t mask = 0;
    for (int i = 0; i < dim_; ++i)
        if (c_[static_cast<std::size_t>(i)] != 0.0)
            mask |= 1u << i;
    return IndexSet::from_mask(mask);
}

bool Vector::operator==(const Vector& other) const {
    if (dim_ != other.dim_)
        return false;
    for (int i = 0; i < dim_; ++i)
        if (c_[static_cast<std::size_t>(i)] != other.c_[static_cast<std::size_t>(i)])
            return false;
    return true;
}

std::string Vector::to_string() const {
    std::string out = "(";
    char buf[32];
    for (int i = 0; i < dim_; ++i) {
        if (i > 0)
            out += ' ';
        std::snprintf(buf, sizeof buf, "%g", c_[static_cast<std::size_t>(i)]);
        out += buf;
    }
    out += ')';
    return out;
}

// --- SignPattern ---

SignPattern SignPattern::from_negatives(IndexSet support, IndexSet negatives) {
    if (!negatives.subset_of(support))
        throw std::invalid_argument("SignPattern: negatives not contained in the support");
    return SignPattern(support, negatives);
}

double SignPattern::at(int n) const {
    if (!support_.contains(n))
        throw std::out_of_range("SignPattern: sign requested outside the support");
    return negatives_.contains(n) ? -1.0 : 1.0;
}

std::string SignPattern::to_string() const {
    std::string out;
    for_each_index(support_, [&](int n) { out += negatives_.contains(n) ? '-' : '+'; });
    return out;
}

// --- NormModel ---

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_dim(int dim) {
    if (dim < 1 || dim > kMaxDim)
        throw std::invalid_argument("NormModel: dim outside 1.." + std::to_string(kMaxDim));
}

std::vector<double> parse_positive_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad number '" + tok + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument(std::string(what) + ": bad number '" + tok + "'");
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string(what) + ": entries must be positive finite");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

} // namespace

NormModel NormModel::lp(double p, int dim) {
    check_dim(dim);
    if (!(p >= 1.0))
        throw std::invalid_argument("lp norm requires p >= 1");
    return NormModel(NormKind::lp, dim, p, {});
}

NormModel NormModel::weighted_l1(std::vector<double> v) {
    check_dim(static_cast<int>(v.size()));
    for (double w : v)
        if (!(w > 0.0) || !std::isfinite(w))
            throw std::invalid_argument("weighted_l1 requires positive finite weights");
    int dim = static_cast<int>(v.size());
    return NormModel(NormKind::weighted_l1, dim, 0.0, std::move(v));
}

NormModel NormModel::summing(int dim) {
    check_dim(dim);
    return NormModel(NormKind::summing, dim, 0.0, {});
}

NormModel NormModel::sup(int dim) {
    check_dim(dim);
    return NormModel(NormKind::sup, dim, 0.0, {});
}

NormModel NormModel::parse(const std::string& config, int dim) {
    check_dim(dim);
    const std::size_t colon = config.find(':');
    const std::string head = config.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : config.substr(colon + 1);
    if (head == "sup") {
        if (!rest.empty())
            throw std::invalid_argument("space 'sup' takes no parameter");
        return sup(dim);
    }
    if (head == "summing") {
        if (!rest.empty())
            throw std::invalid_argument("space 'summing' takes no parameter");
        return summing(dim);
    }
    if (head == "lp") {
        if (rest == "inf")
            return lp(kInf, dim);
        std::size_t pos = 0;
        double p = 0.0;
        try {
            p = std::stod(rest, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("space 'lp': bad exponent '" + rest + "'");
        }
        if (pos != rest.size())
            throw std::invalid_argument("space 'lp': bad exponent '" + rest + "'");
        return lp(p, dim);
    }
    if (head == "wl1") {
        std::vector<double> v = parse_positive_list(rest, "space 'wl1'");
        // short lists extend periodically so one config string serves every dim
        std::vector<double> full(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i)
            full[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i) % v.size()];
        return weighted_l1(std::move(full));
    }
    throw std::invalid_argument("unknown space '" + config + "'");
}

std::string NormModel::config_string() const {
    char buf[64];
    switch (kind_) {
    case NormKind::lp:
        if (std::isinf(p_))
            return "lp:inf";
        std::snprintf(buf, sizeof buf, "lp:%g", p_);
        return buf;
    case NormKind::weighted_l1: {
        std::string out = "wl1:";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i > 0)
                out += ',';
            std::snprintf(buf, sizeof buf, "%g", v_[i]);
            out += buf;
        }
        return out;
    }
    case NormKind::summing:
        return "summing";
    case NormKind::sup:
        return "sup";
    }
    return "?";
}

// --- operations ---

double norm(const NormModel& model, const Vector& x) {
    if (model.dim() != x.dim())
        throw std::invalid_argument("norm: model dim " + std::to_string(model.dim()) +
                                    " != vector dim " + std::to_string(x.dim()));
    const int n = x.dim();
    switch (model.kind()) {
    case NormKind::lp: {
        const double p = model.p_exponent();
        if (std::isinf(p)) {
            double m = 0.0;
            for (int i = 0; i < n; ++i)
                m = std::max(m, std::fabs(x.at0(i)));
            return m;
        }
        if (p == 1.0) {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                s += std::fabs(x.at0(i));
            return s;
        }
        if (p == 2.0) {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                s += x.at0(i) * x.at0(i);
            return std::sqrt(s);
        }
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            s += std::pow(std::fabs(x.at0(i)), p);
        return std::pow(s, 1.0 / p);
    }
    case NormKind::weighted_l1: {
        const std::vector<double>& v = model.coordinate_weights();
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            s += v[static_cast<std::size_t>(i)] * std::fabs(x.at0(i));
        return s;
    }
    case NormKind::summing: {
        double run = 0.0;
        double m = 0.0;
        for (int i = 0; i < n; ++i) {
            run += x.at0(i);
            m = std::max(m, std::fabs(run));
        }
        return m;
    }
    case NormKind::sup: {
        double m = 0.0;
        for (int i = 0; i < n; ++i)
            m = std::max(m, std::fabs(x.at0(i)));
        return m;
    }
    }
    return 0.0;
}

double coordinate(const Vector& x, int n) {
    return x.coord(n);
}

Vector project(const Vector& x, IndexSet a) {
    if (!a.empty() && a.max() > x.dim())
        throw std::out_of_range("project: A reaches beyond dim");
    Vector out(x.dim());
    for_each_index(a, [&](int n) { out.set0(n - 1, x.at0(n - 1)); });
    return out;
}

Vector partial_sum(const Vector& x, int m) {
    if (m < 0 || m > x.dim())
        throw std::out_of_range("partial_sum: m outside 0..dim");
    Vector out(x.dim());
    for (int i = 0; i < m; ++i)
        out.set0(i, x.at0(i));
    return out;
}

Vector sign_indicator(IndexSet a, const SignPattern& eps, int dim) {
    if (dim < 1 || dim > kMaxDim)
        throw std::invalid_argument("sign_indicator: dim outside 1.." + std::to_string(kMaxDim));
    if (!eps.defined_on(a))
        throw std::invalid_argument("sign_indicator: sign pattern missing an index of A");
    if (!a.empty() && a.max() > dim)
        throw std::out_of_range("sign_indicator: A reaches beyond dim");
    Vector out(dim);
    for_each_index(a, [&](int n) { out.set0(n - 1, eps.at(n)); });
    return out;
}

double basis_vector_norm(const NormModel& model, int n) {
    if (n < 1 || n > model.dim())
        throw std::out_of_range("basis_vector_norm: n outside 1..dim");
    switch (model.kind()) {
    case NormKind::lp:
    case NormKind::sup:
    case NormKind::summing:
        return 1.0;
    case NormKind::weighted_l1:
        return model.coordinate_weights()[static_cast<std::size_t>(n - 1)];
    }
    return 1.0;
}

// Closed forms, each verified against a grid maximisation of |x_n|/||x|| in
// the test suite:
//   lp, sup      -> 1
//   wl1(v)       -> 1/v_n
//   summing      -> 1 for n = 1, else 2  (e_n*(x) = S_n - S_{n-1})
double coordinate_functional_norm(const NormModel& model, int n) {
    if (n < 1 || n > model.dim())
        throw std::out_of_range("coordinate_functional_norm: n outside 1..dim");
    switch (model.kind()) {
    case NormKind::lp:
    case NormKind::sup:
        return 1.0;
    case NormKind::weighted_l1:
        return 1.0 / model.coordinate_weights()[static_cast<std::size_t>(n - 1)];
    case NormKind::summing:
        return n == 1 ? 1.0 : 2.0;
    }
    return 1.0;
}

BasisConstants basis_constants(const NormModel& model) {
    double c1 = kInf;
    double c2 = 0.0;
    for (int n = 1; n <= model.dim(); ++n) {
        const double en = basis_vector_norm(model, n);
        const double fn = coordinate_functional_norm(model, n);
        c1 = std::min({c1, en, fn});
        c2 = std::max({c2, en, fn});
    }
    return {c1, c2};
}

std::string to_string(Exactness e) {
    return e == Exactness::exact_on_grid ? "exact-on-grid" : "lower-bound";
}

SchauderConstant schauder_constant(const NormModel& model) {
    // Diagonal kinds: coordinate-monotone, so ||P_m x|| <= ||x||. Summing:
    // max_{k<=m}|S_k| <= max_k|S_k|. P_dim is the identity, so 1 is attained.
    (void)model;
    return {1.0, Exactness::exact_on_grid};
}

} // namespace greedylab
