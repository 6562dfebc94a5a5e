// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef GREEDYLAB_ANALYSIS_HPP
#define GREEDYLAB_ANALYSIS_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "greedylab/chebyshev.hpp"
#include "greedylab/spaces.hpp"
#include "greedylab/weights.hpp"

namespace greedylab {

/// Ratios whose numerator and denominator both fall below this are 0/0
/// degeneracies and carry no information; they are skipped.
inline constexpr double kDegenerate = 1e-12;

// --- test-vector families ---

/// All vectors with every coefficient drawn from the literal level set.
struct LevelGrid {
    std::vector<double> levels;
};

/// All 1_{eps A} + (1+delta) 1_{eps' B} with A, B disjoint subsets of {1..N}
/// and all sign choices. The small delta stands in for the limit arguments:
/// they are monotone in delta, and one fixed value keeps greedy sets
/// unambiguous. B may be empty, so plain sign indicators are included.
struct ProofExtremal {
    double delta = 1e-6;
};

/// All nonzero vectors with coefficients in {-1, 0, +1}.
struct SignIndicators {};

using VectorFamily = std::variant<LevelGrid, ProofExtremal, SignIndicators>;

std::string family_to_string(const VectorFamily& family);

/// Deterministically ordered list; refuses families whose size would exceed
/// the enumeration budget (5^8 vectors).
std::vector<Vector> extremal_vectors(const VectorFamily& family, int dim);

/// The default grid policy: LevelGrid({0,+-1,+-2,+-3}) up to dim 6,
/// ProofExtremal(1e-6) up to dim 8, SignIndicators up to dim 11.
std::vector<VectorFamily> default_families(int dim);

// --- weighted error functionals ---

/// sigma~^w_delta(x): exact min of ||x - P_A x|| over w(A) <= delta.
double sigma_tilde_w(const NormModel& model, const Weight& w, const Vector& x, double delta);

/// sigma^w_delta(x): exact min over the same family of chebyshev_min values.
double sigma_w(const NormModel& model, const Weight& w, const Vector& x, double delta);

/// The w = const:1 specialisations (delta = m): same enumeration exactly.
double sigma_tilde_m(const NormModel& model, const Vector& x, int m);
double sigma_m(const NormModel& model, const Vector& x, int m);

// --- enumerated greedy-type constants ---

struct ConstantEstimate {
    double value = 0.0;
    Exactness exactness = Exactness::exact_on_grid;
    std::string witness;
    int degenerate_denominators = 0; // instances with ~0 denominator but nonzero numerator
};

/// sup over family x != 0, 0 <= m <= N and every greedy set Lambda of
/// ||x - P_Lambda x|| / ||x||. Exact on the grid, a lower bound on the
/// model's true constant. m = 0 supplies the identity instance.
ConstantEstimate estimate_Cq(const NormModel& model, const VectorFamily& family, int dim);
ConstantEstimate estimate_Cq(const NormModel& model, std::span<const VectorFamily> families,
                             int dim);

struct DemocracyEstimates {
    ConstantEstimate Cd;  // 1_A vs 1_B, plain signs
    ConstantEstimate Cs;  // all sign pairs
    ConstantEstimate Csd; // all sign pairs, A and B disjoint
};

/// Exact maxima of ||1_{eps A}|| / ||1_{eps' B}|| over all pairs with
/// w(A) <= w(B) (measure slack applies) and exhaustive signs. Refuses dim > 10.
DemocracyEstimates estimate_democracies(const NormModel& model, const Weight& w, int dim);

/// sup ||x - P_Lambda x|| / sigma~^w_{w(Lambda)}(x) over family, m, greedy sets.
ConstantEstimate estimate_Ca(const NormModel& model, const Weight& w,
                             const VectorFamily& family, int dim);
ConstantEstimate estimate_Ca(const NormModel& model, const Weight& w,
                             std::span<const VectorFamily> families, int dim);

/// sup (chebyshev value on Lambda) / sigma^w_{w(Lambda)}(x). Refuses dim > 8:
/// each subset costs an inner Chebyshev minimisation.
ConstantEstimate estimate_Csg(const NormModel& model, const Weight& w,
                              const VectorFamily& family, int dim);
ConstantEstimate estimate_Csg(const NormModel& model, const Weight& w,
                              std::span<const VectorFamily> families, int dim);

/// sup min_{j in G}|x_j| * ||1_{eps G}|| / ||x|| over greedy sets G and all
/// signs eps on G.
ConstantEstimate estimate_Cu(const NormModel& model, const VectorFamily& family, int dim);
ConstantEstimate estimate_Cu(const NormModel& model, std::span<const VectorFamily> families,
                             int dim);

// --- the per-entry constant report ---

struct ConstantReport {
    std::string space;
    std::string weight;
    int dim = 0;

    ConstantEstimate Cq, Cd, Cs, Csd, Ca, Csg, Cu;
    double Kb = 1.0;
    Exactness Kb_exactness = Exactness::exact_on_grid;
    double c1 = 1.0;
    double c2 = 1.0;

    /// Variants with test vectors / index sets confined to {1..dim/2}.
    /// Inequalities whose derivations consume fresh indices beyond supp(x)
    /// compare against these, preserving the room-to-the-right requirement
    /// at finite dimension.
    double Cq_first_half = 1.0;
    double Cs_first_half = 1.0;

    double proof_extremal_delta = 0.0; // 0 when no ProofExtremal family was used
};

ConstantReport compute_constant_report(const NormModel& model, const Weight& w, int dim,
                                       std::span<const VectorFamily> families);

// --- rho-admissibility ---

struct AdmissibilityRow {
    IndexSet a;
    bool found = false;
    int n0 = 0;          // least threshold that worked, when found
    double observed_sup = 0.0; // sup ratio at n0, or at the last threshold tried
};

/// For each nonempty A subset {1..dim/2} with |A| <= 4, searches the least
/// n0 <= horizon such that every B subset {n0..dim} with |B| <= |A| keeps
/// sup_alpha ||P_A z|| / ||z|| <= rho + 1e-6 for z supported on A u B. The
/// sup is grid evidence: LevelGrid({0,+-1,+-2}) plus 500 seeded random unit
/// vectors per (A, B). Only the unweighted setting is treated.
std::vector<AdmissibilityRow> check_rho_admissibility(const NormModel& model, double rho,
                                                      int dim, int horizon);

} // namespace greedylab

#endif
