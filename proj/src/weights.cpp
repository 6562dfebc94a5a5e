// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#include "greedylab/weights.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace greedylab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> parse_list(const std::string& text, const char* what) {
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
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

double parse_number(const std::string& text, const char* what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": bad number '" + text + "'");
    }
    if (pos != text.size())
        throw std::invalid_argument(std::string(what) + ": bad number '" + text + "'");
    return v;
}

// Numeric sanity net behind the rule analysis. Only the first kMaxDim terms
// ever enter a measure; probing further would hit double underflow on
// geometric rules long before any real defect.
void check_positive_terms(const Weight& w) {
    for (int n = 1; n <= 100; ++n)
        if (!(w.at(n) > 0.0))
            throw std::invalid_argument("weight: w_" + std::to_string(n) + " is not positive");
}

} // namespace

Weight Weight::constant(double c) {
    if (!(c > 0.0) || !std::isfinite(c))
        throw std::invalid_argument("weight const: c must be positive finite");
    const Weight w(WeightRule::constant, c, {}, 0.0);
    check_positive_terms(w);
    return w;
}

Weight Weight::power(double a) {
    if (!std::isfinite(a))
        throw std::invalid_argument("weight pow: exponent must be finite");
    const Weight w(WeightRule::power, a, {}, 0.0);
    check_positive_terms(w);
    return w;
}

Weight Weight::geometric(double r) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw std::invalid_argument("weight geom: ratio must be positive finite");
    const Weight w(WeightRule::geometric, r, {}, 0.0);
    check_positive_terms(w);
    return w;
}

Weight Weight::explicit_prefix(std::vector<double> prefix, double tail_c) {
    if (prefix.empty())
        throw std::invalid_argument("weight explicit: empty prefix");
    for (double v : prefix)
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("weight explicit: prefix entries must be positive");
    if (!(tail_c > 0.0) || !std::isfinite(tail_c))
        throw std::invalid_argument("weight explicit: tail constant must be positive");
    const Weight w(WeightRule::explicit_prefix, 0.0, std::move(prefix), tail_c);
    check_positive_terms(w);
    return w;
}

Weight Weight::parse(const std::string& config) {
    const std::size_t colon = config.find(':');
    const std::string head = config.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : config.substr(colon + 1);
    if (head == "const")
        return constant(parse_number(rest, "weight 'const'"));
    if (head == "pow")
        return power(parse_number(rest, "weight 'pow'"));
    if (head == "geom")
        return geometric(parse_number(rest, "weight 'geom'"));
    if (head == "explicit") {
        const std::size_t plus = rest.find('+');
        if (plus == std::string::npos)
            throw std::invalid_argument("weight 'explicit': expected 'explicit:<list>+const:<c>'");
        const std::string tail = rest.substr(plus + 1);
        if (tail.rfind("const:", 0) != 0)
            throw std::invalid_argument("weight 'explicit': tail must be 'const:<c>'");
        return explicit_prefix(parse_list(rest.substr(0, plus), "weight 'explicit'"),
                               parse_number(tail.substr(6), "weight 'explicit' tail"));
    }
    throw std::invalid_argument("unknown weight '" + config + "'");
}

std::string Weight::config_string() const {
    char buf[64];
    switch (rule_) {
    case WeightRule::constant:
        std::snprintf(buf, sizeof buf, "const:%g", a_);
        return buf;
    case WeightRule::power:
        std::snprintf(buf, sizeof buf, "pow:%g", a_);
        return buf;
    case WeightRule::geometric:
        std::snprintf(buf, sizeof buf, "geom:%g", a_);
        return buf;
    case WeightRule::explicit_prefix: {
        std::string out = "explicit:";
        for (std::size_t i = 0; i < prefix_.size(); ++i) {
            if (i > 0)
                out += ',';
            std::snprintf(buf, sizeof buf, "%g", prefix_[i]);
            out += buf;
        }
        std::snprintf(buf, sizeof buf, "+const:%g", tail_);
        out += buf;
        return out;
    }
    }
    return "?";
}

double Weight::at(int n) const {
    if (n < 1)
        throw std::out_of_range("weight index must be >= 1");
    switch (rule_) {
    case WeightRule::constant:
        return a_;
    case WeightRule::power:
        return std::pow(static_cast<double>(n), a_);
    case WeightRule::geometric:
        return std::pow(a_, static_cast<double>(n));
    case WeightRule::explicit_prefix:
        return static_cast<std::size_t>(n) <= prefix_.size()
                   ? prefix_[static_cast<std::size_t>(n - 1)]
                   : tail_;
    }
    return 0.0;
}

double measure(const Weight& w, IndexSet a) {
    double s = 0.0;
    for_each_index(a, [&](int n) { s += w.at(n); });
    return s;
}

std::string to_string(RegimeTag tag) {
    switch (tag) {
    case RegimeTag::divergent_bounded:
        return "divergent-bounded";
    case RegimeTag::summable:
        return "summable";
    case RegimeTag::unbounded_sup:
        return "unbounded-sup";
    }
    return "?";
}

WeightRegime classify_regime(const Weight& w) {
    switch (w.rule()) {
    case WeightRule::constant:
        return {RegimeTag::divergent_bounded, false};
    case WeightRule::power: {
        const double a = w.power_exponent();
        if (a > 0.0)
            return {RegimeTag::unbounded_sup, false};
        if (a < -1.0)
            return {RegimeTag::summable, true};
        // -1 <= a < 0 divergent with inf 0; a = 0 is the constant sequence
        return {RegimeTag::divergent_bounded, a < 0.0};
    }
    case WeightRule::geometric: {
        const double r = w.geometric_ratio();
        if (r < 1.0)
            return {RegimeTag::summable, true};
        if (r > 1.0)
            return {RegimeTag::unbounded_sup, false};
        return {RegimeTag::divergent_bounded, false};
    }
    case WeightRule::explicit_prefix:
        return {RegimeTag::divergent_bounded, false};
    }
    return {RegimeTag::divergent_bounded, false};
}

double limsup_weight(const Weight& w) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    switch (w.rule()) {
    case WeightRule::constant:
        return w.constant_value();
    case WeightRule::power: {
        const double a = w.power_exponent();
        return a < 0.0 ? 0.0 : (a == 0.0 ? 1.0 : inf);
    }
    case WeightRule::geometric: {
        const double r = w.geometric_ratio();
        return r < 1.0 ? 0.0 : (r == 1.0 ? 1.0 : inf);
    }
    case WeightRule::explicit_prefix:
        return w.tail_constant();
    }
    return inf;
}

std::vector<IndexSet> subsets_with_measure_at_most(const Weight& w, double delta, int dim) {
    if (delta < 0.0)
        throw std::invalid_argument("subsets_with_measure_at_most: delta must be >= 0");
    if (dim < 1 || dim > kMaxDim)
        throw std::invalid_argument("subsets_with_measure_at_most: dim outside 1.." +
                                    std::to_string(kMaxDim));
    std::vector<IndexSet> out;
    const std::uint32_t total = 1u << dim;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        IndexSet a = IndexSet::from_mask(mask);
        if (measure(w, a) <= delta + kMeasureSlack)
            out.push_back(a);
    }
    return out;
}

} // namespace greedylab
