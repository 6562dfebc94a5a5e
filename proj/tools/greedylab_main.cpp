// Copyright (c) 2026 greedylab contributors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "greedylab/analysis.hpp"
#include "greedylab/verifier.hpp"

namespace {

using namespace greedylab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::vector<double> parse_csv_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stod(tok));
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
}

int cmd_run(const std::string& suite_path, const std::string& out_dir, int threads) {
    SuiteConfig config = suite_path.empty() ? default_suite() : load_suite_config(suite_path);
    if (threads > 0)
        config.threads = threads;
    const Ledger ledger = run_suite(config);

    std::filesystem::create_directories(out_dir);
    write_file(std::filesystem::path(out_dir) / "ledger.csv", ledger_csv(ledger));
    write_file(std::filesystem::path(out_dir) / "constants.csv", constants_csv(ledger));
    write_file(std::filesystem::path(out_dir) / "report.json", ledger_json(ledger));

    int pass = 0;
    for (const EntryResult& er : ledger.entries)
        for (const InequalityCheck& c : er.checks)
            if (c.verdict == Verdict::pass)
                ++pass;
    std::cout << "suite '" << ledger.suite_id << "': " << ledger.entries.size() << " entries, "
              << pass << " pass, " << ledger.fail_count << " fail, " << ledger.skip_count
              << " skipped\n"
              << "wrote " << out_dir << "/ledger.csv, constants.csv, report.json\n";
    return ledger.fail_count == 0 ? kExitPass : kExitFail;
}

int cmd_constants(const std::string& space, const std::string& weight, int dim,
                  const std::string& levels, const std::string& out_path,
                  const std::string& csv_path) {
    const NormModel model = NormModel::parse(space, dim);
    const Weight w = Weight::parse(weight);

    std::vector<VectorFamily> families;
    if (!levels.empty()) {
        std::vector<double> lv = {0.0};
        for (double m : parse_csv_doubles(levels)) {
            if (m == 0.0)
                continue;
            lv.push_back(m);
            lv.push_back(-m);
        }
        families.push_back(LevelGrid{std::move(lv)});
        families.push_back(SignIndicators{});
    } else {
        families = default_families(dim);
    }

    const ConstantReport r = compute_constant_report(model, w, dim, families);

    Ledger shim;
    shim.suite_id = "constants";
    shim.entries.push_back({{space, weight, dim}, r, {}});
    const std::string json_text = ledger_json(shim);
    if (out_path.empty())
        std::cout << json_text;
    else
        write_file(out_path, json_text);
    if (!csv_path.empty())
        write_file(csv_path, constants_csv(shim));
    return kExitPass;
}

int cmd_chebyshev(const std::string& space, const std::string& vector_text, int m) {
    std::vector<double> coeffs = parse_csv_doubles(vector_text);
    const Vector x = Vector::of(coeffs);
    const NormModel model = NormModel::parse(space, x.dim());
    if (m < 0 || m > x.dim())
        throw std::invalid_argument("--m outside 0..dim");

    const IndexSet lambda = natural_greedy_set(x, m);
    const ChebyshevResult res = chebyshev_greedy_sum(model, x, m, lambda);

    nlohmann::ordered_json out;
    out["space"] = model.config_string();
    out["x"] = coeffs;
    out["m"] = m;
    out["greedy_set"] = lambda.indices();
    nlohmann::ordered_json jc = nlohmann::ordered_json::object();
    for (const auto& [n, a] : res.coeffs)
        jc[std::to_string(n)] = a;
    out["coeffs"] = std::move(jc);
    out["value"] = res.value;
    out["certified_gap"] = res.certified_gap;
    out["residual_projection"] = norm(model, project(x, IndexSet::full(x.dim()).setminus(lambda)));
    if (lambda.size() <= 3)
        out["oracle"] = chebyshev_oracle(model, x, lambda, 0.0, 41);
    std::cout << out.dump(2) << "\n";
    return kExitPass;
}

int cmd_admissible(const std::string& space, double rho, int dim, int horizon) {
    const NormModel model = NormModel::parse(space, dim);
    if (horizon <= 0)
        horizon = dim;
    const std::vector<AdmissibilityRow> rows = check_rho_admissibility(model, rho, dim, horizon);
    for (const AdmissibilityRow& row : rows) {
        std::cout << "A=" << row.a.to_string() << " ";
        if (row.found)
            std::cout << "n0=" << row.n0 << " sup_at_n0=" << row.observed_sup << "\n";
        else
            std::cout << "not found <= " << horizon << " (grid evidence, worst sup "
                      << row.observed_sup << ")\n";
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"greedy approximation laboratory: thresholding and Chebyshev greedy "
                 "algorithms on finite-dimensional norm models, with an inequality ledger"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run a verification suite and emit the ledger");
    std::string suite_path, out_dir = "out";
    int run_threads = 0;
    run->add_option("--suite", suite_path, "suite config JSON (omit for the built-in default)");
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--threads", run_threads,
                    "worker threads over suite entries (default: config value)");

    auto* constants = app.add_subcommand("constants", "enumerate the constants of one model");
    std::string c_space = "lp:2", c_weight = "const:1", c_levels, c_out, c_csv;
    int c_dim = 6;
    constants->add_option("--space", c_space, "space config, e.g. lp:2, summing, wl1:2,1");
    constants->add_option("--weight", c_weight, "weight config, e.g. const:1, pow:-2");
    constants->add_option("--dim", c_dim, "ambient dimension")->required();
    constants->add_option("--levels", c_levels, "level magnitudes, e.g. 0,1,2,3");
    constants->add_option("--out", c_out, "write the JSON report here (default stdout)");
    constants->add_option("--csv", c_csv, "also write a constants CSV here");

    auto* cheb = app.add_subcommand("chebyshev", "Chebyshev greedy sum of one vector");
    std::string ch_space = "summing", ch_vector;
    int ch_m = 1;
    cheb->add_option("--space", ch_space, "space config");
    cheb->add_option("--vector", ch_vector, "coefficients, e.g. 3,-5,1")->required();
    cheb->add_option("--m", ch_m, "greedy sum order")->required();

    auto* adm = app.add_subcommand("admissible", "per-set admissibility thresholds");
    std::string a_space = "summing";
    double a_rho = 2.01;
    int a_dim = 8, a_horizon = 0;
    adm->add_option("--space", a_space, "space config");
    adm->add_option("--rho", a_rho, "admissibility factor, >= 1");
    adm->add_option("--dim", a_dim, "ambient dimension")->required();
    adm->add_option("--horizon", a_horizon, "largest threshold to try (default dim)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (run->parsed())
            return cmd_run(suite_path, out_dir, run_threads);
        if (constants->parsed())
            return cmd_constants(c_space, c_weight, c_dim, c_levels, c_out, c_csv);
        if (cheb->parsed())
            return cmd_chebyshev(ch_space, ch_vector, ch_m);
        if (adm->parsed())
            return cmd_admissible(a_space, a_rho, a_dim, a_horizon);
    } catch (const greedylab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
