// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#include "greedylab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

namespace greedylab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 5^8: the largest family any default grid produces.
constexpr long kFamilyBudget = 390625;

double residual_norm(const NormModel& model, const Vector& x, IndexSet lambda) {
    Vector r = x;
    for_each_index(lambda, [&](int n) { r.set0(n - 1, 0.0); });
    return norm(model, r);
}

std::string fmt(const char* format, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

// Norms of every signed indicator vector, grouped by support. 3^dim norm
// evaluations; the workhorse behind democracy constants, Property (C) and
// the indicator-based ledger rows.
struct SignTable {
    int dim = 0;
    std::vector<double> plus;     // ||1_A||
    std::vector<double> max_norm; // max over signs
    std::vector<double> min_norm; // min over signs
    std::vector<std::uint32_t> max_sign; // negatives mask attaining max_norm
    std::vector<std::uint32_t> min_sign;

    SignTable(const NormModel& model, int n) : dim(n) {
        const std::size_t total = std::size_t{1} << n;
        plus.assign(total, 0.0);
        max_norm.assign(total, 0.0);
        min_norm.assign(total, 0.0);
        max_sign.assign(total, 0);
        min_sign.assign(total, 0);
        Vector v(n);
        for (std::uint32_t support = 1; support < total; ++support) {
            double best_hi = -kInf, best_lo = kInf;
            std::uint32_t hi_sign = 0, lo_sign = 0;
            // iterate negative-sign subsets of the support, ascending
            std::uint32_t neg = 0;
            while (true) {
                for (int i = 0; i < n; ++i) {
                    const std::uint32_t bit = 1u << i;
                    v.set0(i, (support & bit) ? ((neg & bit) ? -1.0 : 1.0) : 0.0);
                }
                const double nv = norm(model, v);
                if (nv > best_hi) {
                    best_hi = nv;
                    hi_sign = neg;
                }
                if (nv < best_lo) {
                    best_lo = nv;
                    lo_sign = neg;
                }
                if (neg == 0)
                    plus[support] = nv;
                neg = (neg - support) & support; // next subset of support
                if (neg == 0)
                    break;
            }
            max_norm[support] = best_hi;
            min_norm[support] = best_lo;
            max_sign[support] = hi_sign;
            min_sign[support] = lo_sign;
        }
    }
};

// Subset masks of {1..dim} ordered by (w(A), mask); prefix minima over this
// order turn both sigma functionals into O(log) lookups per query.
struct WeightedSubsetOrder {
    std::vector<std::uint32_t> masks;
    std::vector<double> measures; // ascending

    WeightedSubsetOrder(const Weight& w, int dim) {
        const std::uint32_t total = 1u << dim;
        masks.resize(total);
        std::vector<double> m(total);
        for (std::uint32_t a = 0; a < total; ++a) {
            masks[a] = a;
            m[a] = measure(w, IndexSet::from_mask(a));
        }
        std::stable_sort(masks.begin(), masks.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return m[a] < m[b]; });
        measures.resize(total);
        for (std::uint32_t i = 0; i < total; ++i)
            measures[i] = m[masks[i]];
    }

    // index of the last subset with measure <= delta + slack (>= 0: the empty set)
    std::size_t cutoff(double delta) const {
        auto it = std::upper_bound(measures.begin(), measures.end(), delta + kMeasureSlack);
        return static_cast<std::size_t>(it - measures.begin()) - 1;
    }
};

struct Maximizer {
    double value = -kInf;
    std::string witness;

    bool offer(double v) const { return v > value; }
    void take(double v, std::string w) {
        value = v;
        witness = std::move(w);
    }
};

// Every row records whether the natural greedy set or a tie alternative won.
std::string ratio_witness(const Vector& x, int m, IndexSet lambda, bool natural, double num,
                          double den) {
    return "x=" + x.to_string() + " m=" + std::to_string(m) + " L=" + lambda.to_string() +
           (natural ? " set=natural" : " set=tie-alt") + " num=" + fmt("%.6g", num) +
           " den=" + fmt("%.6g", den);
}

// ||x - P_A x|| for every mask A at once. Diagonal norms admit subset-sum /
// subset-max tables over the complement, one O(1) step per mask; the summing
// norm falls back to direct evaluation.
struct ResidualTable {
    const NormModel& model;
    int dim;
    std::vector<double> value;  // by mask
    std::vector<double> scratch;

    ResidualTable(const NormModel& m, int n)
        : model(m), dim(n), value(std::size_t{1} << n), scratch(std::size_t{1} << n) {}

    void fill_residuals(const Vector& x) {
        const std::uint32_t total = 1u << dim;
        const std::uint32_t full = total - 1;
        const NormKind kind = model.kind();
        const double p = model.p_exponent();

        if (kind == NormKind::summing) {
            for (std::uint32_t mask = 0; mask < total; ++mask)
                value[mask] = residual_norm(model, x, IndexSet::from_mask(mask));
            return;
        }
        if (kind == NormKind::sup || (kind == NormKind::lp && std::isinf(p))) {
            scratch[0] = 0.0;
            for (std::uint32_t m = 1; m < total; ++m) {
                const int i = std::countr_zero(m);
                scratch[m] = std::max(scratch[m & (m - 1)], std::fabs(x.at0(i)));
            }
            for (std::uint32_t mask = 0; mask < total; ++mask)
                value[mask] = scratch[full ^ mask];
            return;
        }
        // lp (finite) and weighted l1: additive over coordinates
        double term[kMaxDim];
        for (int i = 0; i < dim; ++i) {
            const double a = std::fabs(x.at0(i));
            if (kind == NormKind::weighted_l1)
                term[i] = model.coordinate_weights()[static_cast<std::size_t>(i)] * a;
            else if (p == 1.0)
                term[i] = a;
            else if (p == 2.0)
                term[i] = a * a;
            else
                term[i] = std::pow(a, p);
        }
        scratch[0] = 0.0;
        for (std::uint32_t m = 1; m < total; ++m)
            scratch[m] = scratch[m & (m - 1)] + term[std::countr_zero(m)];
        const bool is_l1 = kind == NormKind::weighted_l1 || p == 1.0;
        for (std::uint32_t mask = 0; mask < total; ++mask) {
            const double s = std::max(scratch[full ^ mask], 0.0);
            value[mask] = is_l1 ? s : (p == 2.0 ? std::sqrt(s) : std::pow(s, 1.0 / p));
        }
    }

    void fill_chebyshev(const Vector& x) {
        if (model.diagonal()) {
            fill_residuals(x); // projection is optimal for diagonal norms
            return;
        }
        const std::uint32_t total = 1u << dim;
        for (std::uint32_t mask = 0; mask < total; ++mask)
            value[mask] = chebyshev_min(model, x, IndexSet::from_mask(mask)).value;
    }
};

} // namespace

// --- families ---

std::string family_to_string(const VectorFamily& family) {
    if (const auto* lg = std::get_if<LevelGrid>(&family)) {
        std::string out = "level-grid(";
        for (std::size_t i = 0; i < lg->levels.size(); ++i) {
            if (i > 0)
                out += ' ';
            out += fmt("%g", lg->levels[i]);
        }
        return out + ")";
    }
    if (const auto* pe = std::get_if<ProofExtremal>(&family))
        return "proof-extremal(" + fmt("%g", pe->delta) + ")";
    return "sign-indicators";
}

namespace detail_family {

// Streams one family in odometer order without materialising it; the
// public extremal_vectors is this plus a push_back, so orders agree.
// Level grids keep the zero vector, the other families drop it.
template <typename Fn>
void stream_family(const VectorFamily& family, int dim, Fn&& fn) {
    if (dim < 1 || dim > kMaxDim)
        throw std::invalid_argument("extremal_vectors: dim outside 1.." + std::to_string(kMaxDim));
    std::vector<double> levels;
    bool skip_zero = true;
    if (const auto* lg = std::get_if<LevelGrid>(&family)) {
        if (lg->levels.empty())
            throw std::invalid_argument("extremal_vectors: empty level set");
        levels = lg->levels;
        skip_zero = false;
    } else if (const auto* pe = std::get_if<ProofExtremal>(&family)) {
        if (!(pe->delta > 0.0))
            throw std::invalid_argument("extremal_vectors: proof-extremal delta must be > 0");
        // per-coordinate states: 0, +-1 (in A), +-(1+delta) (in B)
        levels = {0.0, 1.0, -1.0, 1.0 + pe->delta, -(1.0 + pe->delta)};
    } else {
        levels = {0.0, 1.0, -1.0};
    }
    const int L = static_cast<int>(levels.size());
    long count = 1;
    for (int i = 0; i < dim; ++i) {
        count *= L;
        if (count > kFamilyBudget)
            throw std::invalid_argument("extremal_vectors: family exceeds the enumeration budget");
    }
    std::vector<int> idx(static_cast<std::size_t>(dim), 0);
    Vector v(dim);
    while (true) {
        bool nonzero = false;
        for (int i = 0; i < dim; ++i) {
            const double c = levels[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            v.set0(i, c);
            nonzero |= c != 0.0;
        }
        if (nonzero || !skip_zero)
            fn(v);
        int i = dim - 1;
        while (i >= 0 && ++idx[static_cast<std::size_t>(i)] == L) {
            idx[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0)
            break;
    }
}

} // namespace detail_family

std::vector<Vector> extremal_vectors(const VectorFamily& family, int dim) {
    std::vector<Vector> out;
    detail_family::stream_family(family, dim, [&](const Vector& v) { out.push_back(v); });
    return out;
}

std::vector<VectorFamily> default_families(int dim) {
    std::vector<VectorFamily> out;
    if (dim <= 6)
        out.push_back(LevelGrid{{0.0, 1.0, -1.0, 2.0, -2.0, 3.0, -3.0}});
    if (dim <= 8)
        out.push_back(ProofExtremal{1e-6});
    if (dim <= 11)
        out.push_back(SignIndicators{});
    if (out.empty())
        throw std::invalid_argument("default_families: no family fits dim " + std::to_string(dim));
    return out;
}

// --- error functionals ---

double sigma_tilde_w(const NormModel& model, const Weight& w, const Vector& x, double delta) {
    if (model.dim() != x.dim())
        throw std::invalid_argument("sigma_tilde_w: model dim != vector dim");
    double best = kInf;
    for (IndexSet a : subsets_with_measure_at_most(w, delta, x.dim()))
        best = std::min(best, residual_norm(model, x, a));
    return best;
}

double sigma_w(const NormModel& model, const Weight& w, const Vector& x, double delta) {
    if (model.dim() != x.dim())
        throw std::invalid_argument("sigma_w: model dim != vector dim");
    double best = kInf;
    for (IndexSet a : subsets_with_measure_at_most(w, delta, x.dim())) {
        if (a.size() > kChebMaxSupport)
            throw std::invalid_argument("sigma_w: feasible set larger than " +
                                        std::to_string(kChebMaxSupport));
        best = std::min(best, chebyshev_min(model, x, a).value);
    }
    return best;
}

double sigma_tilde_m(const NormModel& model, const Vector& x, int m) {
    if (m < 0 || m > x.dim())
        throw std::out_of_range("sigma_tilde_m: m outside 0..dim");
    return sigma_tilde_w(model, Weight::constant(1.0), x, static_cast<double>(m));
}

double sigma_m(const NormModel& model, const Vector& x, int m) {
    if (m < 0 || m > x.dim())
        throw std::out_of_range("sigma_m: m outside 0..dim");
    return sigma_w(model, Weight::constant(1.0), x, static_cast<double>(m));
}

// --- constant estimators ---

namespace {

// Shared driver for the ratio estimators: feeds every nonzero family vector
// to per_vector, in family order then generation order.
template <typename PerVector>
void scan_family(std::span<const VectorFamily> families, int dim, PerVector&& per_vector) {
    for (const VectorFamily& family : families)
        detail_family::stream_family(family, dim, [&](const Vector& x) {
            if (!x.is_zero())
                per_vector(x);
        });
}

ConstantEstimate finish(const Maximizer& mx, int degenerate) {
    ConstantEstimate est;
    est.value = mx.value == -kInf ? 0.0 : mx.value;
    est.exactness = Exactness::exact_on_grid;
    est.witness = mx.witness;
    est.degenerate_denominators = degenerate;
    return est;
}

} // namespace

ConstantEstimate estimate_Cq(const NormModel& model, std::span<const VectorFamily> families,
                             int dim) {
    if (model.dim() != dim)
        throw std::invalid_argument("estimate_Cq: model dim mismatch");
    Maximizer mx;
    ResidualTable table(model, dim);
    scan_family(families, dim, [&](const Vector& x) {
        const double nx = norm(model, x);
        table.fill_residuals(x);
        const GreedySetScanner sets(x);
        for (int m = 0; m <= dim; ++m) {
            bool natural = true;
            sets.for_each(m, [&](IndexSet lambda) {
                const double num = table.value[lambda.mask()];
                const double ratio = num / nx;
                if (mx.offer(ratio))
                    mx.take(ratio, ratio_witness(x, m, lambda, natural, num, nx));
                natural = false;
            });
        }
    });
    return finish(mx, 0);
}

ConstantEstimate estimate_Cq(const NormModel& model, const VectorFamily& family, int dim) {
    return estimate_Cq(model, std::span<const VectorFamily>(&family, 1), dim);
}

namespace {

DemocracyEstimates democracies_restricted(const NormModel& model, const Weight& w, int dim,
                                          std::uint32_t allowed) {
    if (dim > 10)
        throw std::invalid_argument("estimate_democracies: dim > 10");
    if (model.dim() != dim)
        throw std::invalid_argument("estimate_democracies: model dim mismatch");

    const SignTable table(model, dim);
    const std::uint32_t total = 1u << dim;
    std::vector<double> wmask(total);
    for (std::uint32_t a = 0; a < total; ++a)
        wmask[a] = measure(w, IndexSet::from_mask(a));

    Maximizer cd, cs, csd;
    auto pair_witness = [&](std::uint32_t a, std::uint32_t ea, std::uint32_t b,
                            std::uint32_t eb) {
        const IndexSet A = IndexSet::from_mask(a);
        const IndexSet B = IndexSet::from_mask(b);
        return "A=" + A.to_string() + " eps=" +
               SignPattern::from_negatives(A, IndexSet::from_mask(ea)).to_string() +
               " B=" + B.to_string() + " eps'=" +
               SignPattern::from_negatives(B, IndexSet::from_mask(eb)).to_string() +
               " wA=" + fmt("%.6g", wmask[a]) + " wB=" + fmt("%.6g", wmask[b]);
    };

    for (std::uint32_t a = 1; a < total; ++a) {
        if ((a & ~allowed) != 0)
            continue;
        for (std::uint32_t b = 1; b < total; ++b) {
            if ((b & ~allowed) != 0)
                continue;
            if (wmask[a] > wmask[b] + kMeasureSlack)
                continue;
            const double rd = table.plus[a] / table.plus[b];
            if (cd.offer(rd))
                cd.take(rd, pair_witness(a, 0, b, 0));
            const double rs = table.max_norm[a] / table.min_norm[b];
            if (cs.offer(rs))
                cs.take(rs, pair_witness(a, table.max_sign[a], b, table.min_sign[b]));
            if ((a & b) == 0 && csd.offer(rs))
                csd.take(rs, pair_witness(a, table.max_sign[a], b, table.min_sign[b]));
        }
    }

    DemocracyEstimates out;
    out.Cd = finish(cd, 0);
    out.Cs = finish(cs, 0);
    out.Csd = finish(csd, 0);
    return out;
}

} // namespace

DemocracyEstimates estimate_democracies(const NormModel& model, const Weight& w, int dim) {
    return democracies_restricted(model, w, dim, (1u << dim) - 1u);
}

namespace {

// Workspace shared by the Ca/Csg scans: per-x tables over all 2^dim subsets.
struct RatioScan {
    int dim;
    WeightedSubsetOrder order;
    ResidualTable table;
    std::vector<double> prefix_min; // along order

    RatioScan(const NormModel& m, const Weight& wt, int n)
        : dim(n), order(wt, n), table(m, n), prefix_min(std::size_t{1} << n) {}

    void build_prefix() {
        double run = kInf;
        for (std::size_t i = 0; i < order.masks.size(); ++i) {
            run = std::min(run, table.value[order.masks[i]]);
            prefix_min[i] = run;
        }
    }

    double infimum_at(double delta) const { return prefix_min[order.cutoff(delta)]; }
};

ConstantEstimate ratio_estimate(const NormModel& model, const Weight& w,
                                std::span<const VectorFamily> families, int dim,
                                bool chebyshev_numerator) {
    if (model.dim() != dim)
        throw std::invalid_argument("constant estimator: model dim mismatch");
    if (chebyshev_numerator && dim > 8)
        throw std::invalid_argument("estimate_Csg: dim > 8");
    if (!chebyshev_numerator && dim > 10)
        throw std::invalid_argument("estimate_Ca: dim > 10");

    RatioScan scan(model, w, dim);
    Maximizer mx;
    int degenerate = 0;
    scan_family(families, dim, [&](const Vector& x) {
        if (chebyshev_numerator)
            scan.table.fill_chebyshev(x);
        else
            scan.table.fill_residuals(x);
        scan.build_prefix();
        const GreedySetScanner sets(x);
        for (int m = 0; m <= dim; ++m) {
            bool natural = true;
            sets.for_each(m, [&](IndexSet lambda) {
                const bool was_natural = natural;
                natural = false;
                const double num = scan.table.value[lambda.mask()];
                const double den = scan.infimum_at(measure(w, lambda));
                if (den < kDegenerate) {
                    if (num >= kDegenerate)
                        ++degenerate; // no finite constant certifies this instance
                    return;           // 0/0: carries no information
                }
                const double ratio = num / den;
                if (mx.offer(ratio))
                    mx.take(ratio, ratio_witness(x, m, lambda, was_natural, num, den));
            });
        }
    });
    return finish(mx, degenerate);
}

} // namespace

ConstantEstimate estimate_Ca(const NormModel& model, const Weight& w,
                             std::span<const VectorFamily> families, int dim) {
    return ratio_estimate(model, w, families, dim, false);
}

ConstantEstimate estimate_Ca(const NormModel& model, const Weight& w, const VectorFamily& family,
                             int dim) {
    return ratio_estimate(model, w, std::span<const VectorFamily>(&family, 1), dim, false);
}

ConstantEstimate estimate_Csg(const NormModel& model, const Weight& w,
                              std::span<const VectorFamily> families, int dim) {
    return ratio_estimate(model, w, families, dim, true);
}

ConstantEstimate estimate_Csg(const NormModel& model, const Weight& w, const VectorFamily& family,
                              int dim) {
    return ratio_estimate(model, w, std::span<const VectorFamily>(&family, 1), dim, true);
}

ConstantEstimate estimate_Cu(const NormModel& model, std::span<const VectorFamily> families,
                             int dim) {
    if (dim > 10)
        throw std::invalid_argument("estimate_Cu: dim > 10");
    if (model.dim() != dim)
        throw std::invalid_argument("estimate_Cu: model dim mismatch");
    const SignTable table(model, dim);
    Maximizer mx;
    scan_family(families, dim, [&](const Vector& x) {
        const double nx = norm(model, x);
        const GreedySetScanner sets(x);
        for (int m = 1; m <= dim; ++m) {
            const double tau = sets.threshold(m); // common over the sets of this m
            bool natural = true;
            sets.for_each(m, [&](IndexSet g) {
                const bool was_natural = natural;
                natural = false;
                const double num = tau * table.max_norm[g.mask()];
                const double ratio = num / nx;
                if (mx.offer(ratio)) {
                    const SignPattern eps = SignPattern::from_negatives(
                        g, IndexSet::from_mask(table.max_sign[g.mask()]));
                    mx.take(ratio, "x=" + x.to_string() + " G=" + g.to_string() +
                                       (was_natural ? " set=natural" : " set=tie-alt") +
                                       " eps=" + eps.to_string() + " min=" + fmt("%.6g", tau));
                }
            });
        }
    });
    return finish(mx, 0);
}

ConstantEstimate estimate_Cu(const NormModel& model, const VectorFamily& family, int dim) {
    return estimate_Cu(model, std::span<const VectorFamily>(&family, 1), dim);
}

// --- report assembly ---

ConstantReport compute_constant_report(const NormModel& model, const Weight& w, int dim,
                                       std::span<const VectorFamily> families) {
    ConstantReport r;
    r.space = model.config_string();
    r.weight = w.config_string();
    r.dim = dim;

    r.Cq = estimate_Cq(model, families, dim);
    const DemocracyEstimates dem = estimate_democracies(model, w, dim);
    r.Cd = dem.Cd;
    r.Cs = dem.Cs;
    r.Csd = dem.Csd;
    r.Ca = estimate_Ca(model, w, families, dim);
    r.Csg = estimate_Csg(model, w, families, dim);
    r.Cu = estimate_Cu(model, families, dim);

    const SchauderConstant kb = schauder_constant(model);
    r.Kb = kb.value;
    r.Kb_exactness = kb.exactness;
    const BasisConstants bc = basis_constants(model);
    r.c1 = bc.c1;
    r.c2 = bc.c2;

    // half-confined variants: vectors supported in, and index sets inside,
    // {1..dim/2}
    const int half = dim / 2;
    const std::uint32_t half_mask = half == 0 ? 0u : (1u << half) - 1u;
    {
        Maximizer mx;
        ResidualTable table(model, dim);
        scan_family(families, dim, [&](const Vector& x) {
            if ((x.support().mask() & ~half_mask) != 0)
                return;
            const double nx = norm(model, x);
            table.fill_residuals(x);
            const GreedySetScanner sets(x);
            for (int m = 0; m <= dim; ++m) {
                sets.for_each(m, [&](IndexSet lambda) {
                    const double ratio = table.value[lambda.mask()] / nx;
                    if (mx.offer(ratio))
                        mx.take(ratio, "");
                });
            }
        });
        r.Cq_first_half = mx.value == -kInf ? 1.0 : mx.value;
    }
    r.Cs_first_half =
        half == 0 ? 1.0 : democracies_restricted(model, w, dim, half_mask).Cs.value;

    for (const VectorFamily& f : families)
        if (const auto* pe = std::get_if<ProofExtremal>(&f))
            r.proof_extremal_delta = std::max(r.proof_extremal_delta, pe->delta);
    return r;
}

// --- rho-admissibility ---

namespace {

// sup ||P_A z|| / ||z|| over z supported on `support`, estimated on the
// {0,+-1,+-2} grid plus seeded random directions.
double projection_ratio_sup(const NormModel& model, IndexSet a, IndexSet support) {
    const std::vector<int> coords = support.indices();
    const int d = static_cast<int>(coords.size());
    double sup = 0.0;
    Vector z(model.dim());

    auto consider = [&]() {
        const double nz = norm(model, z);
        if (nz < kDegenerate)
            return;
        const double ratio = residual_norm(model, z, support.setminus(a)) / nz;
        sup = std::max(sup, ratio);
    };

    const double levels[5] = {0.0, 1.0, -1.0, 2.0, -2.0};
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    while (true) {
        for (int k = 0; k < d; ++k)
            z.set0(coords[static_cast<std::size_t>(k)] - 1,
                   levels[idx[static_cast<std::size_t>(k)]]);
        consider();
        int k = d - 1;
        while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == 5) {
            idx[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0)
            break;
    }

    std::mt19937 rng(0x9e3779b9u ^ (a.mask() * 0x85ebca6bu) ^ support.mask());
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        double ss = 0.0;
        for (int k = 0; k < d; ++k) {
            const double g = gauss(rng);
            z.set0(coords[static_cast<std::size_t>(k)] - 1, g);
            ss += g * g;
        }
        if (ss < 1e-12)
            continue;
        consider(); // ratio is scale-invariant, no need to normalise
    }
    return sup;
}

} // namespace

std::vector<AdmissibilityRow> check_rho_admissibility(const NormModel& model, double rho, int dim,
                                                      int horizon) {
    if (!(rho >= 1.0))
        throw std::invalid_argument("check_rho_admissibility: rho must be >= 1");
    if (horizon < 1 || horizon > dim)
        throw std::invalid_argument("check_rho_admissibility: horizon outside 1..dim");
    if (model.dim() != dim)
        throw std::invalid_argument("check_rho_admissibility: model dim mismatch");
    constexpr double tol = 1e-6;

    std::vector<AdmissibilityRow> rows;
    const int half = dim / 2;
    const std::uint32_t a_total = 1u << half;
    for (std::uint32_t am = 1; am < a_total; ++am) {
        const IndexSet a = IndexSet::from_mask(am);
        if (a.size() > 4)
            continue;

        // n0 must exceed min(B) of every failing B, so one scan over all
        // candidate B decides every threshold at once.
        std::vector<double> fail_sup(static_cast<std::size_t>(dim) + 1, 0.0);
        std::vector<double> pass_sup(static_cast<std::size_t>(dim) + 1, 0.0);
        const std::uint32_t b_total = 1u << dim;
        for (std::uint32_t bm = 1; bm < b_total; ++bm) {
            const IndexSet b = IndexSet::from_mask(bm);
            if (b.size() > a.size())
                continue;
            const double sup = projection_ratio_sup(model, a, a | b);
            auto& slot = sup > rho + tol ? fail_sup : pass_sup;
            slot[static_cast<std::size_t>(b.min())] =
                std::max(slot[static_cast<std::size_t>(b.min())], sup);
        }
        int worst_min = 0;
        for (int v = 1; v <= dim; ++v)
            if (fail_sup[static_cast<std::size_t>(v)] > 0.0)
                worst_min = v;

        AdmissibilityRow row;
        row.a = a;
        const int n0 = worst_min + 1;
        if (n0 <= horizon) {
            row.found = true;
            row.n0 = n0;
            for (int v = n0; v <= dim; ++v)
                row.observed_sup = std::max(row.observed_sup, pass_sup[static_cast<std::size_t>(v)]);
        } else {
            row.found = false;
            row.n0 = 0;
            row.observed_sup = fail_sup[static_cast<std::size_t>(worst_min)];
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace greedylab
