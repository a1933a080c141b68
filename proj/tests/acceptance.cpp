// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "netsel/anp.hpp"
#include "netsel/config.hpp"
#include "netsel/report.hpp"
#include "netsel/rng.hpp"
#include "netsel/simulator.hpp"
#include "netsel/strategy.hpp"
#include "netsel/topsis.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace netsel;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

void run_criterion(int id, const std::string& name,
                   const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome.pass = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::printf("[%s] criterion %2d: %s (%lld ms)%s%s\n",
                outcome.pass ? "PASS" : "FAIL", id, name.c_str(),
                static_cast<long long>(elapsed),
                outcome.detail.empty() ? "" : " — ", outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++g_failures;
}

oracles::Table as_table(const Matrix& m) {
    oracles::Table t(m.rows(), std::vector<double>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t[i][j] = m(i, j);
    return t;
}

// --------------------------------------------------------------------------

Outcome criterion_ri_table() {
    const std::vector<std::pair<std::size_t, double>> expected = {
        {3, 0.58}, {4, 0.90}, {5, 1.12}, {6, 1.24},
        {7, 1.32}, {8, 1.41}, {9, 1.45}, {10, 1.49}};
    for (const auto& [n, ri] : expected)
        if (ri_lookup(n) != ri)
            return {false, "ri_lookup(" + std::to_string(n) + ") mismatch"};
    return {true, ""};
}

Outcome criterion_anp_oracle() {
    Rng rng(880001);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng.below(6);  // 2..7
        const PairwiseMatrix a = testutil::random_reciprocal(rng, n);
        const WeightVector w = derive_weights(a);
        const std::vector<double> ref =
            oracles::weights_by_normalize_then_average(as_table(a.entries));
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(w[i] - ref[i]) >= 1e-12)
                return {false, "oracle deviation at trial " + std::to_string(trial)};
    }
    return {true, "1000 matrices within 1e-12"};
}

Outcome criterion_consistency_fixed_point() {
    Rng rng(880002);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + rng.below(5);  // 3..7
        const auto [a, w] = testutil::random_consistent(rng, n);
        const WeightVector derived = derive_weights(a);
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(derived[i] - w[i]) >= 1e-10)
                return {false, "weights not recovered at trial " + std::to_string(trial)};
        const ConsistencyReport report = consistency(a, derived);
        if (std::abs(report.cr) >= 1e-9)
            return {false, "CR != 0 on a consistent matrix"};
    }
    Matrix cyclic(3, 3, 1.0);
    cyclic(0, 1) = 9;
    cyclic(1, 0) = 1.0 / 9;
    cyclic(1, 2) = 9;
    cyclic(2, 1) = 1.0 / 9;
    cyclic(0, 2) = 1.0 / 9;
    cyclic(2, 0) = 9;
    const PairwiseMatrix a = PairwiseMatrix::from_entries(cyclic);
    const ConsistencyReport report = consistency(a, derive_weights(a));
    if (!(report.cr > 0.1)) return {false, "cyclic matrix not flagged"};
    std::ostringstream os;
    os << "cyclic CR = " << report.cr;
    return {true, os.str()};
}

Outcome criterion_topsis_oracle() {
    Rng rng(880003);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t m = 2 + rng.below(5);  // 2..6
        const std::size_t n = 2 + rng.below(7);  // 2..8
        std::vector<std::vector<double>> rows(m, std::vector<double>(n));
        std::vector<CriterionSpec> criteria(n);
        std::vector<bool> is_benefit(n);
        for (std::size_t j = 0; j < n; ++j) {
            is_benefit[j] = rng.below(2) == 0;
            criteria[j] = {"c" + std::to_string(j),
                           is_benefit[j] ? CriterionDirection::Benefit
                                         : CriterionDirection::Cost};
        }
        for (auto& row : rows)
            for (double& v : row) v = rng.uniform(0.0, 100.0);
        std::vector<double> weights(n);
        double sum = 0.0;
        for (double& v : weights) {
            v = rng.uniform(0.05, 1.0);
            sum += v;
        }
        for (double& v : weights) v /= sum;

        std::vector<std::string> alts;
        Matrix values(m, n);
        for (std::size_t i = 0; i < m; ++i) {
            alts.push_back("a" + std::to_string(i));
            for (std::size_t j = 0; j < n; ++j) values(i, j) = rows[i][j];
        }
        const TopsisOutcome outcome =
            evaluate(DecisionMatrix::checked(alts, criteria, values),
                     WeightScheme::shared(WeightVector::checked(weights)));
        const std::vector<double> ref =
            oracles::topsis_closeness(rows, weights, is_benefit);
        for (std::size_t i = 0; i < m; ++i)
            if (std::abs(outcome.scores.c[i] - ref[i]) >= 1e-12)
                return {false, "pipeline deviation at trial " + std::to_string(trial)};
    }
    return {true, "500 instances within 1e-12"};
}

Outcome criterion_closeness_bounds() {
    // Poles are exact by construction.
    if (closeness({0.0}, {0.3}).c[0] != 1.0) return {false, "C != 1 at the ideal"};
    if (closeness({0.3}, {0.0}).c[0] != 0.0) return {false, "C != 0 at the anti-ideal"};
    if (closeness({0.0}, {0.0}).c[0] != 0.5) return {false, "degenerate C != 0.5"};
    if (closeness({0.3}, {0.3}).c[0] != 0.5) return {false, "equidistant C != 0.5"};
    Rng rng(880004);
    for (int trial = 0; trial < 2000; ++trial) {
        const double c = closeness({rng.uniform(0, 5)}, {rng.uniform(0, 5)}).c[0];
        if (!(c >= 0.0 && c <= 1.0)) return {false, "closeness left [0, 1]"};
    }
    return {true, ""};
}

Outcome criterion_rank_reversal_regression() {
    // The committed fixture: four networks under the TOPSIS-1 pipeline of an
    // all-equal judgment profile.
    const std::vector<std::string> ids = {"N1", "N2", "N3", "N4"};
    const TrafficClassProfile profile =
        load_profile(testutil::uniform_profile_spec(ids));
    const std::vector<NetworkSnapshot> snaps = {
        {"N1", 17.33, 58.38, 59.95, 22.89, 4.16, 33.89},
        {"N2", 72.76, 74.41, 59.38, 105.87, 12.39, 65.77},
        {"N3", 21.87, 85.55, 26.90, 30.24, 11.05, 24.30},
        {"N4", 25.97, 85.15, 53.74, 119.39, 12.53, 36.80}};
    const HistoryState fresh = HistoryState::fresh(ids);
    const SelectionDecision full =
        select_network(VariantId::Topsis1, profile, snaps, fresh, std::nullopt);
    if (full.ranking.front() != "N3" || full.ranking.back() != "N2")
        return {false, "fixture ranking drifted"};
    if (!detect_abnormality(VariantId::Topsis1, profile, snaps, fresh, std::nullopt))
        return {false, "no top change after removing the lowest alternative"};
    return {true, "top flips N3 -> N1 after N2 is removed"};
}

Outcome criterion_variant_coincidence() {
    const std::vector<std::string> ids = {"UMTS", "WLAN", "WIMAX"};
    const TrafficClassProfile uniform =
        load_profile(testutil::uniform_profile_spec(ids));
    const AppConfig defaults = parse_config(default_config_text());
    Rng rng(880005);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<NetworkSnapshot> snaps;
        for (const std::string& id : ids)
            snaps.push_back(testutil::random_snapshot(rng, id));
        HistoryState history;
        for (const std::string& id : ids) history.h[id] = rng.unit();

        // Uniform level-3 judgments: differentiation must vanish.
        const auto r1 = select_network(VariantId::Topsis1, uniform, snaps, history,
                                       std::nullopt);
        const auto r3 = select_network(VariantId::Topsis3, uniform, snaps, history,
                                       std::nullopt);
        if (r1.ranking != r3.ranking)
            return {false, "TOPSIS1 != TOPSIS3 under uniform level-3 judgments"};
        const auto r2 = select_network(VariantId::Topsis2, uniform, snaps, history,
                                       std::nullopt);
        const auto r4 = select_network(VariantId::Topsis4, uniform, snaps, history,
                                       std::nullopt);
        if (r2.ranking != r4.ranking)
            return {false, "TOPSIS2 != TOPSIS4 under uniform level-3 judgments"};

        // Fresh history: the constant H column cannot separate TOPSIS1/2.
        const HistoryState fresh = HistoryState::fresh(ids);
        const TrafficClassProfile& shipped =
            trial % 2 ? defaults.profiles.at("streaming")
                      : defaults.profiles.at("background");
        const auto f1 =
            select_network(VariantId::Topsis1, shipped, snaps, fresh, std::nullopt);
        const auto f2 =
            select_network(VariantId::Topsis2, shipped, snaps, fresh, std::nullopt);
        if (f1.ranking != f2.ranking)
            return {false, "TOPSIS1 != TOPSIS2 at the first decision point"};
    }
    return {true, "200 instances each"};
}

Outcome criterion_directional_reproduction() {
    const AppConfig defaults = parse_config(default_config_text());
    const std::size_t replications = 1000;
    // better-first pairs: the inequality asserted is mean(better) <= mean(worse)
    // with a margin of 2 standard errors of the paired per-replication
    // differences.
    const std::vector<std::pair<VariantId, VariantId>> pairs = {
        {VariantId::Topsis2, VariantId::Topsis1},
        {VariantId::Topsis3, VariantId::Topsis1},
        {VariantId::Topsis4, VariantId::Topsis2},
        {VariantId::Topsis4, VariantId::Topsis3}};

    std::ostringstream detail;
    bool pass = true;
    for (const auto& [name, profile] : defaults.profiles) {
        SimulationConfig config = config_for_class(defaults, name);
        config.seed = 424242;
        config.replications = replications;
        const SimulationReport report = run_simulation(config, profile);

        for (const char* metric : {"abnormality", "handoff"}) {
            const bool abn = std::string(metric) == "abnormality";
            for (const auto& [better, worse] : pairs) {
                double mean_diff = 0.0;
                std::vector<double> diffs;
                diffs.reserve(replications);
                for (const ReplicationResult& rep : report.replications) {
                    const RunMetrics& b = rep.metrics.at(better);
                    const RunMetrics& w = rep.metrics.at(worse);
                    const double d = abn ? w.abnormality_rate - b.abnormality_rate
                                         : w.handoff_rate - b.handoff_rate;
                    diffs.push_back(d);
                    mean_diff += d;
                }
                mean_diff /= static_cast<double>(diffs.size());
                double var = 0.0;
                for (double d : diffs) var += (d - mean_diff) * (d - mean_diff);
                var /= static_cast<double>(diffs.size() - 1);
                const double se = std::sqrt(var / static_cast<double>(diffs.size()));
                if (!(mean_diff > 2.0 * se)) {
                    pass = false;
                    detail << " [" << name << " " << metric << " "
                           << to_string(better) << "<=" << to_string(worse)
                           << ": diff=" << mean_diff << " se=" << se << "]";
                }
            }
        }
    }
    if (pass)
        return {true, "all 32 inequalities hold beyond 2 standard errors"};
    return {false, "violated:" + detail.str()};
}

Outcome criterion_static_stickiness() {
    const AppConfig defaults = parse_config(default_config_text());
    for (const auto& [name, profile] : defaults.profiles) {
        SimulationConfig config = config_for_class(defaults, name);
        config.variants = {VariantId::Topsis2, VariantId::Topsis4};
        for (NetworkRangeSpec& spec : config.network_specs) {
            const auto mid = [](Range r) {
                const double m = 0.5 * (r.lo + r.hi);
                return Range{m, m};
            };
            spec.ab = mid(spec.ab);
            spec.d = mid(spec.d);
            spec.j = mid(spec.j);
            spec.l = mid(spec.l);
        }
        int clean = 0;
        for (std::uint64_t run = 0; run < 100; ++run) {
            config.seed = 9000 + run;
            config.replications = 1;
            const SimulationReport report = run_simulation(config, profile);
            for (const auto& [variant, metrics] : report.replications[0].metrics) {
                const std::vector<std::string>& sel = metrics.selections;
                for (std::size_t t = 2; t < sel.size(); ++t) {
                    if (sel[t] != sel[t - 1]) {
                        std::ostringstream trace;
                        trace << name << " " << to_string(variant) << " seed "
                              << config.seed << " selections:";
                        for (const std::string& s : sel) trace << " " << s;
                        return {false, trace.str()};
                    }
                }
            }
            ++clean;
        }
        if (clean != 100) return {false, name + ": not all runs clean"};
    }
    return {true, "100/100 seeded runs per traffic class"};
}

Outcome criterion_cli_determinism() {
    const fs::path out1 = fs::temp_directory_path() / "netsel_acc_run1";
    const fs::path out2 = fs::temp_directory_path() / "netsel_acc_run2";
    fs::remove_all(out1);
    fs::remove_all(out2);
    const std::string config =
        std::string(NETSEL_SOURCE_DIR) + "/configs/default.json";
    const auto run = [&](const fs::path& out) {
        std::ostringstream cmd;
        cmd << '"' << NETSEL_CLI_PATH << '"' << " --config \"" << config
            << "\" --seed 42 --out \"" << out.string()
            << "\" --format csv,json > /dev/null";
        return std::system(cmd.str().c_str());
    };
    if (run(out1) != 0) return {false, "first CLI run failed"};
    if (run(out2) != 0) return {false, "second CLI run failed"};

    const auto slurp = [](const fs::path& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    };
    for (const char* name : {"metrics.csv", "aggregate.csv", "report.json"}) {
        const std::string a = slurp(out1 / name);
        const std::string b = slurp(out2 / name);
        if (a.empty()) return {false, std::string(name) + " missing or empty"};
        if (a != b) return {false, std::string(name) + " differs between runs"};
    }
    fs::remove_all(out1);
    fs::remove_all(out2);
    return {true, "csv and json byte-identical across runs"};
}

}  // namespace

int main() {
    run_criterion(1, "random-index table matches for n = 3..10", criterion_ri_table);
    run_criterion(2, "weight derivation equals the independent oracle",
                  criterion_anp_oracle);
    run_criterion(3, "consistency fixed point and cyclic rejection",
                  criterion_consistency_fixed_point);
    run_criterion(4, "ranking pipeline equals the straight-line reference",
                  criterion_topsis_oracle);
    run_criterion(5, "closeness bounds and poles", criterion_closeness_bounds);
    run_criterion(6, "frozen rank-reversal fixture still reverses",
                  criterion_rank_reversal_regression);
    run_criterion(7, "variant coincidence under uniform judgments / fresh history",
                  criterion_variant_coincidence);
    run_criterion(8, "directional ordering of variants over 1000 replications",
                  criterion_directional_reproduction);
    run_criterion(9, "history variants hold their selection in a static environment",
                  criterion_static_stickiness);
    run_criterion(10, "CLI output is byte-identical for a fixed seed",
                  criterion_cli_determinism);

    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
