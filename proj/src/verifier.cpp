// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#include "greedylab/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace greedylab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

InequalityCheck make_check(std::string id, double lhs, double rhs, double tol,
                           std::string witness) {
    InequalityCheck c;
    c.id = std::move(id);
    c.lhs = lhs;
    c.rhs = rhs;
    c.margin = rhs - lhs;
    c.verdict = lhs <= rhs + tol ? Verdict::pass : Verdict::fail;
    c.witness = std::move(witness);
    return c;
}

InequalityCheck make_skipped(std::string id, std::string reason) {
    InequalityCheck c;
    c.id = std::move(id);
    c.verdict = Verdict::skipped;
    c.reason = std::move(reason);
    return c;
}

bool all_exact(std::initializer_list<const ConstantEstimate*> ests) {
    for (const ConstantEstimate* e : ests)
        if (e->exactness != Exactness::exact_on_grid)
            return false;
    return true;
}

// Norms of signed indicators, as in analysis but only what the ledger rows
// need here: max over signs per support.
struct IndicatorMax {
    std::vector<double> max_norm;

    IndicatorMax(const NormModel& model, int dim) {
        const std::size_t total = std::size_t{1} << dim;
        max_norm.assign(total, 0.0);
        Vector v(dim);
        for (std::uint32_t support = 1; support < total; ++support) {
            double best = 0.0;
            std::uint32_t neg = 0;
            while (true) {
                for (int i = 0; i < dim; ++i) {
                    const std::uint32_t bit = 1u << i;
                    v.set0(i, (support & bit) ? ((neg & bit) ? -1.0 : 1.0) : 0.0);
                }
                best = std::max(best, norm(model, v));
                neg = (neg - support) & support;
                if (neg == 0)
                    break;
            }
            max_norm[support] = best;
        }
    }
};

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::skipped:
        return "skipped";
    }
    return "?";
}

std::string format_g12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// --- individual checks ---

std::vector<InequalityCheck> check_thm_1_3(const ConstantReport& r, double tol) {
    std::vector<InequalityCheck> out;
    out.push_back(make_check("Thm1.3.i", std::max(r.Cq.value, r.Csd.value), r.Ca.value, tol,
                             "Cq=" + fmt6(r.Cq.value) + " Csd=" + fmt6(r.Csd.value) +
                                 " Ca=" + fmt6(r.Ca.value)));
    // kappa = 1 on the real scalar field; the convexity step behind this
    // bound is imported, hence the external-lemma tag.
    out.push_back(make_check("Thm1.3.ii", r.Cs.value, 2.0 * r.Ca.value, tol,
                             "external-lemma Cs=" + fmt6(r.Cs.value) +
                                 " Ca=" + fmt6(r.Ca.value)));
    if (!all_exact({&r.Cq, &r.Csd})) {
        out.push_back(make_skipped("Thm1.3.iii", "lower-bound rhs"));
    } else {
        out.push_back(make_check("Thm1.3.iii", r.Ca.value,
                                 r.Cq.value + 2.0 * r.Cq.value * r.Csd.value, tol,
                                 "Ca=" + fmt6(r.Ca.value) + " Cq=" + fmt6(r.Cq.value) +
                                     " Csd=" + fmt6(r.Csd.value)));
    }
    return out;
}

std::vector<InequalityCheck> check_thm_1_9(const ConstantReport& r, double tol) {
    std::vector<InequalityCheck> out;
    const double kb = r.Kb;
    const double c22 = r.c2 * r.c2;
    const std::string consts = "Csg=" + fmt6(r.Csg.value) + " Kb=" + fmt6(kb) +
                               " c2=" + fmt6(r.c2);
    if (!all_exact({&r.Csg})) {
        out.push_back(make_skipped("Thm1.9.a1", "lower-bound rhs"));
        out.push_back(make_skipped("Thm1.9.a2", "lower-bound rhs"));
    } else {
        // lhs constants confined to the first half: the derivations consume
        // fresh indices to the right of supp(x)
        out.push_back(make_check(
            "Thm1.9.a1", r.Cq_first_half,
            r.Csg.value * kb * (1.0 + (1.0 + kb) * r.Csg.value + c22), tol,
            "Cq-half=" + fmt6(r.Cq_first_half) + " " + consts));
        out.push_back(make_check("Thm1.9.a2", r.Cs_first_half,
                                 kb * r.Csg.value * ((1.0 + kb) * r.Csg.value + c22), tol,
                                 "Cs-half=" + fmt6(r.Cs_first_half) + " " + consts));
    }
    if (!all_exact({&r.Cq, &r.Cs}))
        out.push_back(make_skipped("Thm1.9.b", "lower-bound rhs"));
    else
        out.push_back(make_check("Thm1.9.b", r.Csg.value,
                                 r.Cq.value + 4.0 * r.Cq.value * r.Cs.value, tol,
                                 "Csg=" + fmt6(r.Csg.value) + " Cq=" + fmt6(r.Cq.value) +
                                     " Cs=" + fmt6(r.Cs.value)));
    if (!all_exact({&r.Cq, &r.Csd}))
        out.push_back(make_skipped("Thm1.9.c", "lower-bound rhs"));
    else
        out.push_back(make_check("Thm1.9.c", r.Csg.value,
                                 r.Cq.value + 4.0 * r.Cq.value * r.Cq.value * r.Csd.value, tol,
                                 "Csg=" + fmt6(r.Csg.value) + " Cq=" + fmt6(r.Cq.value) +
                                     " Csd=" + fmt6(r.Csd.value)));
    return out;
}

InequalityCheck check_prop_2_2(const NormModel& model, const ConstantReport& r,
                               std::span<const Vector> samples, double tol) {
    if (!all_exact({&r.Cq}))
        return make_skipped("Prop2.2", "lower-bound rhs");
    double lhs = 0.0;
    std::string witness;
    for (const Vector& x : samples) {
        if (x.is_zero())
            continue;
        const double nx = norm(model, x);
        // ||T_alpha x|| is piecewise affine in alpha with knees at the
        // distinct magnitudes, so those suffice for the max
        std::vector<double> mags;
        for (int i = 0; i < x.dim(); ++i)
            if (x.at0(i) != 0.0)
                mags.push_back(std::fabs(x.at0(i)));
        std::sort(mags.begin(), mags.end());
        mags.erase(std::unique(mags.begin(), mags.end()), mags.end());
        for (double alpha : mags) {
            const double ratio = norm(model, truncate(x, alpha)) / nx;
            if (ratio > lhs) {
                lhs = ratio;
                witness = "x=" + x.to_string() + " alpha=" + fmt6(alpha);
            }
        }
    }
    return make_check("Prop2.2", lhs, r.Cq.value, tol,
                      witness + " Cq=" + fmt6(r.Cq.value));
}

InequalityCheck check_lemma_3_2(const NormModel& model, const ConstantReport& r,
                                std::span<const Vector> samples, double tol) {
    if (!all_exact({&r.Cq}))
        return make_skipped("Lemma3.2", "lower-bound rhs");
    double lhs = 0.0;
    std::string witness;
    Vector sg(model.dim());
    for (const Vector& x : samples) {
        if (x.is_zero())
            continue;
        const double nx = norm(model, x);
        const int support = x.support().size();
        const GreedySetScanner sets(x);
        for (int m = 1; m <= support; ++m) {
            const double tau = sets.threshold(m);
            sets.for_each(m, [&](IndexSet g) {
                for (int i = 0; i < model.dim(); ++i)
                    sg.set0(i, 0.0);
                for_each_index(g, [&](int n) {
                    const double c = x.at0(n - 1);
                    sg.set0(n - 1, c >= 0.0 ? 1.0 : -1.0); // natural sign on G
                });
                const double ratio = tau * norm(model, sg) / nx;
                if (ratio > lhs) {
                    lhs = ratio;
                    witness = "x=" + x.to_string() + " G=" + g.to_string();
                }
            });
        }
    }
    return make_check("Lemma3.2", lhs, 2.0 * r.Cq.value, tol,
                      witness + " Cq=" + fmt6(r.Cq.value));
}

InequalityCheck check_lemma_3_3(const NormModel& model, const Weight& w,
                                const ConstantReport& r, std::span<const Vector> samples,
                                double tol) {
    if (!all_exact({&r.Csg}))
        return make_skipped("Lemma3.3", "lower-bound rhs");
    const int dim = model.dim();
    const int half = dim / 2;
    const std::uint32_t half_mask = half == 0 ? 0u : (1u << half) - 1u;
    const std::uint32_t upper_mask = ((1u << dim) - 1u) & ~half_mask;

    // F ranges over the upper half; prefix maxima over the measure order make
    // the per-(x, G) query O(log)
    const IndicatorMax table(model, dim);
    std::vector<std::uint32_t> fmasks;
    for (std::uint32_t f = 0; f < (1u << dim); ++f)
        if ((f & ~upper_mask) == 0)
            fmasks.push_back(f);
    std::stable_sort(fmasks.begin(), fmasks.end(), [&](std::uint32_t a, std::uint32_t b) {
        return measure(w, IndexSet::from_mask(a)) < measure(w, IndexSet::from_mask(b));
    });
    std::vector<double> fmeasures(fmasks.size());
    std::vector<double> prefix_max(fmasks.size());
    double run = 0.0;
    for (std::size_t i = 0; i < fmasks.size(); ++i) {
        fmeasures[i] = measure(w, IndexSet::from_mask(fmasks[i]));
        run = std::max(run, table.max_norm[fmasks[i]]);
        prefix_max[i] = run;
    }

    double lhs = 0.0;
    std::string witness;
    for (const Vector& x : samples) {
        if (x.is_zero())
            continue;
        if ((x.support().mask() & ~half_mask) != 0)
            continue; // room to the right of supp(x) is required
        const double nx = norm(model, x);
        const int support = x.support().size();
        const GreedySetScanner sets(x);
        for (int m = 1; m <= support; ++m) {
            const double tau = sets.threshold(m);
            sets.for_each(m, [&](IndexSet g) {
                auto it = std::upper_bound(fmeasures.begin(), fmeasures.end(),
                                           measure(w, g) + kMeasureSlack);
                const std::size_t cut = static_cast<std::size_t>(it - fmeasures.begin());
                if (cut == 0)
                    return;
                const double ratio = tau * prefix_max[cut - 1] / nx;
                if (ratio > lhs) {
                    lhs = ratio;
                    witness = "x=" + x.to_string() + " G=" + g.to_string();
                }
            });
        }
    }
    // the argument runs through a (1+delta)-perturbed instance
    const double rhs = r.Csg.value * (1.0 + r.Kb) * (1.0 + r.proof_extremal_delta);
    return make_check("Lemma3.3", lhs, rhs, tol, witness + " Csg=" + fmt6(r.Csg.value));
}

InequalityCheck check_prop_3_4(const ConstantReport& r, double tol) {
    if (!all_exact({&r.Csg}))
        return make_skipped("Prop3.4", "lower-bound rhs");
    const double rhs = r.Kb * r.Csg.value * ((1.0 + r.Kb) * r.Csg.value + r.c2 * r.c2);
    return make_check("Prop3.4", r.Cu.value, rhs, tol,
                      "Cu=" + fmt6(r.Cu.value) + " Csg=" + fmt6(r.Csg.value) +
                          " Kb=" + fmt6(r.Kb) + " c2=" + fmt6(r.c2));
}

std::vector<InequalityCheck> check_prop_2_3(const NormModel& model, const Weight& w,
                                            const ConstantReport& r, double tol) {
    std::vector<InequalityCheck> out;
    const int dim = model.dim();
    const IndicatorMax table(model, dim);
    const std::uint32_t total = 1u << dim;

    std::vector<double> wn(static_cast<std::size_t>(dim) + 1, 0.0);
    for (int n = 1; n <= dim; ++n)
        wn[static_cast<std::size_t>(n)] = w.at(n);

    // (i): sets whose small measure is witnessed inside the model, i.e. some
    // n outside A carries w_n >= w(A). This is the finite shadow of
    // w(A) <= limsup w_n: the constructions adjoin that very index.
    double lhs_any = 0.0, lhs_beyond = 0.0;
    std::string wit_any, wit_beyond;
    for (std::uint32_t a = 1; a < total; ++a) {
        const IndexSet A = IndexSet::from_mask(a);
        const double wa = measure(w, A);
        bool witness_any = false, witness_beyond = false;
        for (int n = 1; n <= dim && !(witness_any && witness_beyond); ++n) {
            if (A.contains(n) || wa > wn[static_cast<std::size_t>(n)] + kMeasureSlack)
                continue;
            witness_any = true;
            if (n > A.max())
                witness_beyond = true;
        }
        if (witness_any && table.max_norm[a] > lhs_any) {
            lhs_any = table.max_norm[a];
            wit_any = "A=" + A.to_string();
        }
        if (witness_beyond && table.max_norm[a] > lhs_beyond) {
            lhs_beyond = table.max_norm[a];
            wit_beyond = "A=" + A.to_string();
        }
    }

    if (all_exact({&r.Csd}))
        out.push_back(make_check("Prop2.3.i.sd", lhs_any, r.c2 * r.Csd.value, tol,
                                 wit_any + " Csd=" + fmt6(r.Csd.value)));
    else
        out.push_back(make_skipped("Prop2.3.i.sd", "lower-bound rhs"));

    const double dslack = 1.0 + r.proof_extremal_delta;
    if (all_exact({&r.Csg})) {
        out.push_back(make_check("Prop2.3.i.sg", lhs_any,
                                 r.Csg.value * r.c2 * (1.0 + r.c2 * r.c2) * dslack, tol,
                                 wit_any + " Csg=" + fmt6(r.Csg.value)));
        // the prefix-projection route needs the witness index beyond max A
        out.push_back(make_check("Prop2.3.i.sgk", lhs_beyond,
                                 2.0 * r.Csg.value * r.Kb * dslack, tol,
                                 wit_beyond + " Csg=" + fmt6(r.Csg.value)));
    } else {
        out.push_back(make_skipped("Prop2.3.i.sg", "lower-bound rhs"));
        out.push_back(make_skipped("Prop2.3.i.sgk", "lower-bound rhs"));
    }

    // (ii)/(iii): advisory finite shadows of the c0-equivalence conclusions.
    // At finite dimension nothing forces them, so a miss is reported as a
    // skip with the observed numbers, never as a fail.
    const WeightRegime regime = classify_regime(w);
    const double shadow_bound = r.c2 * r.Csd.value;
    if (regime.tag == RegimeTag::summable || regime.tag == RegimeTag::unbounded_sup) {
        double sup_all = 0.0;
        std::string wit;
        for (std::uint32_t a = 1; a < total; ++a)
            if (table.max_norm[a] > sup_all) {
                sup_all = table.max_norm[a];
                wit = "A=" + IndexSet::from_mask(a).to_string();
            }
        if (sup_all <= shadow_bound + tol) {
            out.push_back(make_check("Prop2.3.ii", sup_all, shadow_bound, tol,
                                     "advisory " + wit + " regime=" + to_string(regime.tag)));
        } else {
            InequalityCheck c = make_skipped(
                "Prop2.3.ii", "advisory-c0-shadow-not-observed");
            c.lhs = sup_all;
            c.rhs = shadow_bound;
            c.margin = c.rhs - c.lhs;
            c.witness = wit + " regime=" + to_string(regime.tag);
            out.push_back(c);
        }
    } else {
        out.push_back(make_skipped("Prop2.3.ii", "regime-" + to_string(regime.tag)));
    }

    if (regime.inf_zero) {
        const int half = dim / 2;
        const std::uint32_t upper = ((1u << dim) - 1u) & ~(half == 0 ? 0u : (1u << half) - 1u);
        double sup_tail = 0.0;
        std::string wit;
        for (std::uint32_t a = 1; a < total; ++a) {
            if ((a & ~upper) != 0)
                continue;
            if (table.max_norm[a] > sup_tail) {
                sup_tail = table.max_norm[a];
                wit = "A=" + IndexSet::from_mask(a).to_string();
            }
        }
        if (sup_tail <= shadow_bound + tol) {
            out.push_back(make_check("Prop2.3.iii", sup_tail, shadow_bound, tol,
                                     "advisory " + wit + " tail-subsequence"));
        } else {
            InequalityCheck c = make_skipped(
                "Prop2.3.iii", "advisory-c0-shadow-not-observed");
            c.lhs = sup_tail;
            c.rhs = shadow_bound;
            c.margin = c.rhs - c.lhs;
            c.witness = wit + " tail-subsequence";
            out.push_back(c);
        }
    } else {
        out.push_back(make_skipped("Prop2.3.iii", "inf-weight-positive"));
    }
    return out;
}

std::vector<InequalityCheck> check_section_6(const ConstantReport& r, double tol) {
    std::vector<InequalityCheck> out;
    if (all_exact({&r.Cq, &r.Cd}))
        out.push_back(make_check("Prop6.1", r.Cs.value, 4.0 * r.Cq.value * r.Cd.value, tol,
                                 "Cs=" + fmt6(r.Cs.value) + " Cq=" + fmt6(r.Cq.value) +
                                     " Cd=" + fmt6(r.Cd.value)));
    else
        out.push_back(make_skipped("Prop6.1", "lower-bound rhs"));
    out.push_back(make_check("Prop6.2.a", r.Csd.value, r.Cs.value, tol,
                             "Csd=" + fmt6(r.Csd.value) + " Cs=" + fmt6(r.Cs.value)));
    if (all_exact({&r.Csd}))
        out.push_back(make_check("Prop6.2.b", r.Cs.value,
                                 r.Csd.value * (1.0 + r.c2 * r.c2 * r.Csd.value), tol,
                                 "Cs=" + fmt6(r.Cs.value) + " Csd=" + fmt6(r.Csd.value) +
                                     " c2=" + fmt6(r.c2)));
    else
        out.push_back(make_skipped("Prop6.2.b", "lower-bound rhs"));
    return out;
}

InequalityCheck check_cor_1_11(const std::string& space, std::span<const int> dims,
                               const FamilyPolicy& policy, double tol) {
    (void)policy;
    if (dims.size() < 2)
        return make_skipped("Cor1.11", "needs-at-least-two-dims");

    // One family type across every dim keeps the growth comparison honest;
    // sign indicators are the cheapest rich enough to witness growth.
    const Weight w = Weight::constant(1.0);
    std::vector<double> cq, cs, csd, csg;
    for (int dim : dims) {
        const NormModel model = NormModel::parse(space, dim);
        const VectorFamily family = SignIndicators{};
        std::span<const VectorFamily> fams(&family, 1);
        cq.push_back(estimate_Cq(model, fams, dim).value);
        const DemocracyEstimates dem = estimate_democracies(model, w, dim);
        cs.push_back(dem.Cs.value);
        csd.push_back(dem.Csd.value);
        csg.push_back(estimate_Csg(model, w, fams, dim).value);
    }

    // +1: grows, 0: bounded, -1: indeterminate
    auto trend = [](const std::vector<double>& v) {
        const double ratio = v.back() / v.front();
        if (ratio >= 1.4)
            return +1;
        if (ratio <= 1.1)
            return 0;
        return -1;
    };
    const int t_q = trend(cq), t_s = trend(cs), t_sd = trend(csd), t_sg = trend(csg);

    std::string detail;
    for (std::size_t i = 0; i < dims.size(); ++i)
        detail += (i ? " " : "") + std::to_string(dims[i]) + ":Cq=" + fmt6(cq[i]) +
                  " Cs=" + fmt6(cs[i]) + " Csd=" + fmt6(csd[i]) + " Csg=" + fmt6(csg[i]);

    if (t_q < 0 || t_s < 0 || t_sd < 0 || t_sg < 0) {
        InequalityCheck c = make_skipped("Cor1.11", "indeterminate-growth");
        c.witness = detail;
        return c;
    }
    const bool quasi_super_grow = t_q == 1 || t_s == 1;
    const bool quasi_disjoint_grow = t_q == 1 || t_sd == 1;
    const bool consistent =
        (t_sg == 1) == quasi_super_grow && (t_sg == 1) == quasi_disjoint_grow;

    InequalityCheck c;
    c.id = "Cor1.11";
    c.lhs = csg.back() / csg.front();
    c.rhs = std::max(cq.back() / cq.front(), cs.back() / cs.front());
    c.margin = c.rhs - c.lhs;
    c.verdict = consistent ? Verdict::pass : Verdict::fail;
    c.witness = detail;
    (void)tol;
    return c;
}

// --- config ---

std::vector<VectorFamily> FamilyPolicy::families_for(int dim) const {
    std::vector<VectorFamily> out;
    if (dim <= level_grid_max_dim) {
        std::vector<double> levels = {0.0};
        for (double m : level_magnitudes) {
            levels.push_back(m);
            levels.push_back(-m);
        }
        out.push_back(LevelGrid{std::move(levels)});
    }
    if (dim <= proof_extremal_max_dim)
        out.push_back(ProofExtremal{proof_extremal_delta});
    if (dim <= sign_indicators_max_dim)
        out.push_back(SignIndicators{});
    if (out.empty())
        throw ConfigError("no test-vector family covers dim " + std::to_string(dim));
    return out;
}

SuiteConfig default_suite() {
    SuiteConfig cfg;
    cfg.suite_id = "default";
    const char* spaces[] = {"lp:1", "lp:2", "lp:inf", "sup", "summing", "wl1:2,1"};
    const char* weights[] = {"const:1", "pow:-2", "pow:1", "explicit:2,1,1+const:1"};
    for (const char* s : spaces)
        for (const char* w : weights)
            for (int dim : {4, 6})
                cfg.entries.push_back({s, w, dim});
    return cfg;
}

namespace {

using nlohmann::json;

void validate_entry(const SuiteEntry& e, std::size_t pos) {
    const std::string where = "entries[" + std::to_string(pos) + "]";
    try {
        (void)NormModel::parse(e.space, e.dim < 1 ? 1 : std::min(e.dim, kMaxDim));
    } catch (const std::exception& ex) {
        throw ConfigError(where + ".space: " + ex.what());
    }
    try {
        (void)Weight::parse(e.weight);
    } catch (const std::exception& ex) {
        throw ConfigError(where + ".weight: " + ex.what());
    }
    if (e.dim < 1 || e.dim > 8)
        throw ConfigError(where + ".dim: must lie in 1..8 (semi-greedy enumeration guard)");
}

} // namespace

SuiteConfig parse_suite_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& ex) {
        throw ConfigError(std::string("config is not valid JSON: ") + ex.what());
    }
    if (!j.is_object())
        throw ConfigError("config root must be an object");

    SuiteConfig cfg;
    cfg.suite_id = j.value("suite_id", std::string("default"));
    cfg.tol = j.value("tol", kLedgerTol);
    if (!(cfg.tol > 0.0))
        throw ConfigError("tol: must be positive");

    if (!j.contains("entries") || !j["entries"].is_array())
        throw ConfigError("entries: required array");
    std::size_t pos = 0;
    for (const json& e : j["entries"]) {
        if (!e.is_object() || !e.contains("space") || !e.contains("weight") ||
            !e.contains("dim"))
            throw ConfigError("entries[" + std::to_string(pos) +
                              "]: need fields space, weight, dim");
        SuiteEntry entry;
        try {
            entry.space = e["space"].get<std::string>();
            entry.weight = e["weight"].get<std::string>();
            entry.dim = e["dim"].get<int>();
        } catch (const json::exception& ex) {
            throw ConfigError("entries[" + std::to_string(pos) + "]: " + ex.what());
        }
        validate_entry(entry, pos);
        cfg.entries.push_back(std::move(entry));
        ++pos;
    }

    if (j.contains("families")) {
        const json& f = j["families"];
        if (!f.is_object())
            throw ConfigError("families: must be an object");
        if (f.contains("level_magnitudes"))
            cfg.families.level_magnitudes = f["level_magnitudes"].get<std::vector<double>>();
        cfg.families.level_grid_max_dim =
            f.value("level_grid_max_dim", cfg.families.level_grid_max_dim);
        cfg.families.proof_extremal_delta =
            f.value("proof_extremal_delta", cfg.families.proof_extremal_delta);
        cfg.families.proof_extremal_max_dim =
            f.value("proof_extremal_max_dim", cfg.families.proof_extremal_max_dim);
        cfg.families.sign_indicators_max_dim =
            f.value("sign_indicators_max_dim", cfg.families.sign_indicators_max_dim);
        for (double m : cfg.families.level_magnitudes)
            if (!(m > 0.0))
                throw ConfigError("families.level_magnitudes: must be positive");
        if (!(cfg.families.proof_extremal_delta > 0.0))
            throw ConfigError("families.proof_extremal_delta: must be positive");
    }
    cfg.threads = j.value("threads", 1);
    if (cfg.threads < 1 || cfg.threads > 64)
        throw ConfigError("threads: must lie in 1..64");
    if (j.contains("consistency_dims")) {
        cfg.consistency_dims = j["consistency_dims"].get<std::vector<int>>();
        for (int d : cfg.consistency_dims)
            if (d < 1 || d > 8)
                throw ConfigError("consistency_dims: each dim must lie in 1..8");
    }
    return cfg;
}

SuiteConfig load_suite_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open suite config '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_suite_config(buf.str());
}

// --- suite runner ---

namespace {

bool is_unit_constant(const Weight& w) {
    return w.rule() == WeightRule::constant && w.constant_value() == 1.0;
}

EntryResult run_entry(const SuiteConfig& config, const SuiteEntry& entry,
                      const std::map<std::string, InequalityCheck>& cor_cache) {
    const NormModel model = NormModel::parse(entry.space, entry.dim);
    const Weight w = Weight::parse(entry.weight);
    const std::vector<VectorFamily> families = config.families.families_for(entry.dim);

    EntryResult result;
    result.entry = entry;
    result.report = compute_constant_report(model, w, entry.dim, families);

    std::vector<Vector> samples;
    for (const VectorFamily& f : families) {
        std::vector<Vector> vs = extremal_vectors(f, entry.dim);
        samples.insert(samples.end(), vs.begin(), vs.end());
    }

    auto append = [&](std::vector<InequalityCheck> checks) {
        for (InequalityCheck& c : checks)
            result.checks.push_back(std::move(c));
    };
    append(check_thm_1_3(result.report, config.tol));
    append(check_thm_1_9(result.report, config.tol));
    result.checks.push_back(check_prop_2_2(model, result.report, samples, config.tol));
    append(check_prop_2_3(model, w, result.report, config.tol));
    result.checks.push_back(check_lemma_3_2(model, result.report, samples, config.tol));
    result.checks.push_back(check_lemma_3_3(model, w, result.report, samples, config.tol));
    result.checks.push_back(check_prop_3_4(result.report, config.tol));
    append(check_section_6(result.report, config.tol));

    if (is_unit_constant(w))
        result.checks.push_back(cor_cache.at(entry.space));
    else
        result.checks.push_back(make_skipped("Cor1.11", "requires-unit-constant-weight"));
    return result;
}

} // namespace

Ledger run_suite(const SuiteConfig& config) {
    for (std::size_t i = 0; i < config.entries.size(); ++i)
        validate_entry(config.entries[i], i);

    Ledger ledger;
    ledger.suite_id = config.suite_id;

    // the cross-dimension probe is per space; resolve it up front so entries
    // only read the finished map
    std::map<std::string, InequalityCheck> cor_cache;
    for (const SuiteEntry& entry : config.entries)
        if (is_unit_constant(Weight::parse(entry.weight)) && !cor_cache.count(entry.space))
            cor_cache.emplace(entry.space,
                              check_cor_1_11(entry.space, config.consistency_dims,
                                             config.families, config.tol));

    std::vector<EntryResult> results(config.entries.size());
    const int threads = std::max(1, config.threads);
    if (threads == 1 || config.entries.size() < 2) {
        for (std::size_t i = 0; i < config.entries.size(); ++i)
            results[i] = run_entry(config, config.entries[i], cor_cache);
    } else {
        // entries are independent; each worker fills its own slots and the
        // merge below keeps config order, so the ledger stays deterministic
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::mutex error_mutex;
        std::exception_ptr first_error;
        const int workers =
            std::min<int>(threads, static_cast<int>(config.entries.size()));
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&]() {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= config.entries.size())
                        return;
                    try {
                        results[i] = run_entry(config, config.entries[i], cor_cache);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error)
                            first_error = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (std::thread& t : pool)
            t.join();
        if (first_error)
            std::rethrow_exception(first_error);
    }

    for (EntryResult& result : results) {
        for (const InequalityCheck& c : result.checks) {
            if (c.verdict == Verdict::fail)
                ++ledger.fail_count;
            if (c.verdict == Verdict::skipped)
                ++ledger.skip_count;
        }
        ledger.entries.push_back(std::move(result));
    }
    return ledger;
}

// --- emission ---

namespace {

std::string csv_safe(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '"' || c == '\n')
            c = ' ';
    return s;
}

std::string verdict_cell(const InequalityCheck& c) {
    if (c.verdict == Verdict::skipped)
        return "skipped:" + csv_safe(c.reason);
    return to_string(c.verdict);
}

} // namespace

std::string ledger_csv(const Ledger& ledger) {
    std::string out = "suite_id,space,weight,N,check_id,lhs,rhs,margin,verdict,witness\n";
    for (const EntryResult& er : ledger.entries)
        for (const InequalityCheck& c : er.checks) {
            out += csv_safe(ledger.suite_id) + ',' + csv_safe(er.entry.space) + ',' +
                   csv_safe(er.entry.weight) + ',' + std::to_string(er.entry.dim) + ',' +
                   c.id + ',' + format_g12(c.lhs) + ',' + format_g12(c.rhs) + ',' +
                   format_g12(c.margin) + ',' + verdict_cell(c) + ',' + csv_safe(c.witness) +
                   '\n';
        }
    return out;
}

std::string constants_csv(const Ledger& ledger) {
    std::string out = "space,weight,N,constant,value,exactness,witness\n";
    for (const EntryResult& er : ledger.entries) {
        const ConstantReport& r = er.report;
        auto row = [&](const char* name, const ConstantEstimate& e) {
            out += csv_safe(r.space) + ',' + csv_safe(r.weight) + ',' + std::to_string(r.dim) +
                   ',' + name + ',' + format_g12(e.value) + ',' + to_string(e.exactness) + ',' +
                   csv_safe(e.witness) + '\n';
        };
        row("Cq", r.Cq);
        row("Cd", r.Cd);
        row("Cs", r.Cs);
        row("Csd", r.Csd);
        row("Ca", r.Ca);
        row("Csg", r.Csg);
        row("Cu", r.Cu);
        out += csv_safe(r.space) + ',' + csv_safe(r.weight) + ',' + std::to_string(r.dim) +
               ",Kb," + format_g12(r.Kb) + ',' + to_string(r.Kb_exactness) + ",\n";
        out += csv_safe(r.space) + ',' + csv_safe(r.weight) + ',' + std::to_string(r.dim) +
               ",c1," + format_g12(r.c1) + ",exact-on-grid,\n";
        out += csv_safe(r.space) + ',' + csv_safe(r.weight) + ',' + std::to_string(r.dim) +
               ",c2," + format_g12(r.c2) + ",exact-on-grid,\n";
    }
    return out;
}

std::string ledger_json(const Ledger& ledger) {
    nlohmann::ordered_json root;
    root["suite_id"] = ledger.suite_id;
    root["fail_count"] = ledger.fail_count;
    root["skip_count"] = ledger.skip_count;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const EntryResult& er : ledger.entries) {
        nlohmann::ordered_json e;
        e["space"] = er.entry.space;
        e["weight"] = er.entry.weight;
        e["dim"] = er.entry.dim;
        nlohmann::ordered_json constants;
        auto put = [&](const char* name, const ConstantEstimate& est) {
            constants[name] = {{"value", est.value},
                               {"exactness", to_string(est.exactness)},
                               {"witness", est.witness}};
        };
        const ConstantReport& r = er.report;
        put("Cq", r.Cq);
        put("Cd", r.Cd);
        put("Cs", r.Cs);
        put("Csd", r.Csd);
        put("Ca", r.Ca);
        put("Csg", r.Csg);
        put("Cu", r.Cu);
        constants["Kb"] = {{"value", r.Kb}, {"exactness", to_string(r.Kb_exactness)}};
        constants["c1"] = r.c1;
        constants["c2"] = r.c2;
        constants["Cq_first_half"] = r.Cq_first_half;
        constants["Cs_first_half"] = r.Cs_first_half;
        e["constants"] = std::move(constants);
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const InequalityCheck& c : er.checks) {
            nlohmann::ordered_json jc;
            jc["id"] = c.id;
            jc["lhs"] = c.lhs;
            jc["rhs"] = c.rhs;
            jc["margin"] = c.margin;
            jc["verdict"] = to_string(c.verdict);
            if (!c.reason.empty())
                jc["reason"] = c.reason;
            jc["witness"] = c.witness;
            checks.push_back(std::move(jc));
        }
        e["checks"] = std::move(checks);
        entries.push_back(std::move(e));
    }
    root["entries"] = std::move(entries);
    return root.dump(2) + "\n";
}

} // namespace greedylab
