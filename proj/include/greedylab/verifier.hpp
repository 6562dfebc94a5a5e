// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef GREEDYLAB_VERIFIER_HPP
#define GREEDYLAB_VERIFIER_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "greedylab/analysis.hpp"

namespace greedylab {

/// One-sided tolerance applied to every ledger inequality. All quantities
/// are O(1)..O(N); this dominates accumulated float error at dim <= 10.
inline constexpr double kLedgerTol = 1e-6;

enum class Verdict { pass, fail, skipped };

std::string to_string(Verdict v);

struct InequalityCheck {
    std::string id;      // e.g. "Thm1.3.iii"
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // rhs - lhs
    Verdict verdict = Verdict::skipped;
    std::string reason;  // machine-readable, required for skipped rows
    std::string witness;
};

struct SuiteEntry {
    std::string space;
    std::string weight;
    int dim = 0;
};

/// Grid policy knobs; defaults reproduce default_families().
struct FamilyPolicy {
    std::vector<double> level_magnitudes = {1.0, 2.0, 3.0}; // 0 and both signs are implied
    int level_grid_max_dim = 6;
    double proof_extremal_delta = 1e-6;
    int proof_extremal_max_dim = 8;
    int sign_indicators_max_dim = 11;

    std::vector<VectorFamily> families_for(int dim) const;
};

struct SuiteConfig {
    std::string suite_id = "default";
    double tol = kLedgerTol;
    std::vector<SuiteEntry> entries;
    FamilyPolicy families;
    std::vector<int> consistency_dims = {4, 6, 8}; // Cor1.11 cross-dimension probe
    int threads = 1; // entries are independent; >1 fans them out, merge stays in config order
};

/// The shipped suite: six spaces x four weights x dims {4, 6}.
SuiteConfig default_suite();

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses the JSON config grammar; throws ConfigError with a field diagnostic.
SuiteConfig parse_suite_config(const std::string& json_text);
SuiteConfig load_suite_config(const std::string& path);

// --- individual inequality checks ---
// Right-hand sides consume enumerated constants, so each check insists the
// constants it multiplies are exact-on-grid for the same finite model and
// otherwise reports skipped("lower-bound rhs").

std::vector<InequalityCheck> check_thm_1_3(const ConstantReport& report, double tol = kLedgerTol);
std::vector<InequalityCheck> check_thm_1_9(const ConstantReport& report, double tol = kLedgerTol);

InequalityCheck check_prop_2_2(const NormModel& model, const ConstantReport& report,
                               std::span<const Vector> samples, double tol = kLedgerTol);
InequalityCheck check_lemma_3_2(const NormModel& model, const ConstantReport& report,
                                std::span<const Vector> samples, double tol = kLedgerTol);
InequalityCheck check_lemma_3_3(const NormModel& model, const Weight& w,
                                const ConstantReport& report, std::span<const Vector> samples,
                                double tol = kLedgerTol);
InequalityCheck check_prop_3_4(const ConstantReport& report, double tol = kLedgerTol);
std::vector<InequalityCheck> check_prop_2_3(const NormModel& model, const Weight& w,
                                            const ConstantReport& report, double tol = kLedgerTol);
std::vector<InequalityCheck> check_section_6(const ConstantReport& report, double tol = kLedgerTol);

/// Cross-dimension consistency probe at w = const:1: the boundedness pattern
/// of Csg must match that of {Cq, Cs} and {Cq, Csd} over consistency_dims.
/// Advisory: an indeterminate pattern is skipped, never failed.
InequalityCheck check_cor_1_11(const std::string& space, std::span<const int> dims,
                               const FamilyPolicy& policy, double tol = kLedgerTol);

// --- suite runner ---

struct EntryResult {
    SuiteEntry entry;
    ConstantReport report;
    std::vector<InequalityCheck> checks;
};

struct Ledger {
    std::string suite_id;
    std::vector<EntryResult> entries;
    int fail_count = 0;
    int skip_count = 0;
};

/// Entries run in config order; results are deterministic given an identical
/// config (fixed iteration order everywhere, no randomness on this path).
Ledger run_suite(const SuiteConfig& config);

/// Byte-stable CSV with columns
/// suite_id,space,weight,N,check_id,lhs,rhs,margin,verdict,witness.
std::string ledger_csv(const Ledger& ledger);

/// Byte-stable CSV with columns space,weight,N,constant,value,exactness,witness.
std::string constants_csv(const Ledger& ledger);

std::string ledger_json(const Ledger& ledger);

/// Fixed float formatting (%.12g) shared by the CSV and JSON emitters.
std::string format_g12(double v);

} // namespace greedylab

#endif
