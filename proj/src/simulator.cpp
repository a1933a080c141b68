#include "netsel/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace netsel {

NetworkRangeSpec NetworkRangeSpec::checked(NetworkRangeSpec spec) {
    if (spec.network_id.empty())
        throw ConfigError("network spec has no id");
    const auto check_fixed = [&](double v, const char* name) {
        if (!std::isfinite(v) || v < 0.0)
            throw ConfigError("network '" + spec.network_id + "': " + name +
                              " must be a nonnegative number");
    };
    check_fixed(spec.cb, "cb");
    check_fixed(spec.s, "s");
    const auto check_range = [&](const Range& r, const char* name) {
        if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo < 0.0)
            throw ConfigError("network '" + spec.network_id + "': " + name +
                              " bounds must be nonnegative numbers");
        if (r.hi < r.lo)
            throw ConfigError("network '" + spec.network_id + "': " + name +
                              " range has hi < lo");
    };
    check_range(spec.ab, "ab");
    check_range(spec.d, "d");
    check_range(spec.j, "j");
    check_range(spec.l, "l");
    return spec;
}

NetworkSnapshot sample_snapshot(const NetworkRangeSpec& spec, Rng& rng) {
    NetworkSnapshot snap;
    snap.network_id = spec.network_id;
    snap.cb = spec.cb;
    snap.s = spec.s;
    snap.ab = rng.uniform(spec.ab.lo, spec.ab.hi);
    snap.d = rng.uniform(spec.d.lo, spec.d.hi);
    snap.j = rng.uniform(spec.j.lo, spec.j.hi);
    snap.l = rng.uniform(spec.l.lo, spec.l.hi);
    return snap;
}

std::size_t count_handoffs(const std::vector<std::string>& selections) {
    if (selections.empty())
        throw DimensionError("count_handoffs: empty selection sequence");
    std::size_t count = 0;
    for (std::size_t t = 1; t < selections.size(); ++t)
        if (selections[t] != selections[t - 1]) ++count;
    return count;
}

namespace {

std::vector<NetworkSnapshot> without_network(const std::vector<NetworkSnapshot>& snapshots,
                                             const std::string& removed) {
    std::vector<NetworkSnapshot> out;
    out.reserve(snapshots.size() - 1);
    for (const NetworkSnapshot& snap : snapshots)
        if (snap.network_id != removed) out.push_back(snap);
    return out;
}

// Re-ranks the survivors after dropping the lowest-ranked network; true iff
// the top pick changes. `full` must be the decision over all snapshots.
bool abnormality_after_removal(const SelectionDecision& full,
                               const VariantWeights& reduced_weights,
                               const std::vector<NetworkSnapshot>& snapshots,
                               const HistoryState& history,
                               const std::optional<std::string>& previous_selection) {
    const std::vector<NetworkSnapshot> survivors =
        without_network(snapshots, full.ranking.back());
    const SelectionDecision reduced =
        select_with_weights(reduced_weights, survivors, history, previous_selection);
    return reduced.ranking.front() != full.ranking.front();
}

}  // namespace

bool detect_abnormality(VariantId variant, const TrafficClassProfile& profile,
                        const std::vector<NetworkSnapshot>& snapshots,
                        const HistoryState& history,
                        const std::optional<std::string>& previous_selection) {
    if (snapshots.size() < 3) return false;  // removal leaves no observable reversal
    const SelectionDecision full =
        select_network(variant, profile, snapshots, history, previous_selection);
    const std::vector<NetworkSnapshot> survivors =
        without_network(snapshots, full.ranking.back());
    std::vector<std::string> ids;
    for (const NetworkSnapshot& snap : survivors) ids.push_back(snap.network_id);
    const VariantWeights reduced_weights =
        compose_variant_weights(variant, profile, ids);
    return abnormality_after_removal(full, reduced_weights, snapshots, history,
                                     previous_selection);
}

namespace {

double sample_stddev(const std::vector<double>& xs, double mean) {
    if (xs.size() < 2) return 0.0;
    double acc = 0.0;
    for (double x : xs) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

void validate_config(const SimulationConfig& config,
                     const TrafficClassProfile& profile) {
    if (config.decision_points < 1)
        throw ConfigError("decision_points must be >= 1");
    if (config.replications < 1)
        throw ConfigError("replications must be >= 1");
    if (config.network_specs.empty())
        throw ConfigError("no network specs configured");
    if (!config.traffic_class.empty() && config.traffic_class != profile.class_name)
        throw ConfigError("config traffic class '" + config.traffic_class +
                          "' does not match profile '" + profile.class_name + "'");
    std::set<std::string> ids;
    for (const NetworkRangeSpec& spec : config.network_specs) {
        NetworkRangeSpec::checked(spec);
        if (!ids.insert(spec.network_id).second)
            throw ConfigError("duplicate network '" + spec.network_id + "' in config");
        if (std::find(profile.networks.begin(), profile.networks.end(),
                      spec.network_id) == profile.networks.end())
            throw ConfigError("network '" + spec.network_id +
                              "' has no judgments in profile '" + profile.class_name + "'");
    }
    std::set<std::string> variant_seen;
    for (VariantId v : config.variants)
        if (!variant_seen.insert(to_string(v)).second)
            throw ConfigError("variant " + to_string(v) + " listed twice");
}

}  // namespace

SimulationReport run_simulation(const SimulationConfig& config,
                                const TrafficClassProfile& profile) {
    validate_config(config, profile);

    std::vector<std::string> ids;
    ids.reserve(config.network_specs.size());
    for (const NetworkRangeSpec& spec : config.network_specs)
        ids.push_back(spec.network_id);

    // The composed weights depend only on the judgments and the candidate
    // set, so compute them once for the full set and once per reduced set.
    struct VariantPlan {
        VariantWeights full;
        std::map<std::string, VariantWeights> reduced;  // keyed by removed id
    };
    std::map<VariantId, VariantPlan> plans;
    for (VariantId variant : config.variants) {
        VariantPlan plan{compose_variant_weights(variant, profile, ids), {}};
        if (ids.size() >= 3) {
            for (const std::string& removed : ids) {
                std::vector<std::string> survivors;
                for (const std::string& id : ids)
                    if (id != removed) survivors.push_back(id);
                plan.reduced.emplace(
                    removed, compose_variant_weights(variant, profile, survivors));
            }
        }
        plans.emplace(variant, std::move(plan));
    }

    SimulationReport report;
    report.traffic_class = profile.class_name;
    report.config = config;
    report.config.traffic_class = profile.class_name;

    for (std::size_t rep = 0; rep < config.replications; ++rep) {
        ReplicationResult result;
        result.index = rep;
        result.seed = derive_seed(config.seed, rep);
        Rng rng(result.seed);

        // One shared attribute stream per replication: every variant sees
        // the same snapshots at each decision point.
        result.points.resize(config.decision_points);
        for (std::size_t t = 0; t < config.decision_points; ++t)
            for (const NetworkRangeSpec& spec : config.network_specs)
                result.points[t].snapshots.push_back(sample_snapshot(spec, rng));

        for (VariantId variant : config.variants) {
            const VariantPlan& plan = plans.at(variant);
            HistoryState history = HistoryState::fresh(ids);
            std::optional<std::string> previous;
            RunMetrics metrics;

            for (std::size_t t = 0; t < config.decision_points; ++t) {
                const std::vector<NetworkSnapshot>& snapshots = result.points[t].snapshots;
                const SelectionDecision decision =
                    select_with_weights(plan.full, snapshots, history, previous);

                bool abnormality = false;
                if (snapshots.size() >= 3) {
                    const VariantWeights& reduced_weights =
                        plan.reduced.at(decision.ranking.back());
                    abnormality = abnormality_after_removal(
                        decision, reduced_weights, snapshots, history, previous);
                }

                VariantPointTrace trace;
                for (std::size_t i = 0; i < decision.alternatives.size(); ++i)
                    trace.scores[decision.alternatives[i]] = decision.scores.c[i];
                trace.ranking = decision.ranking;
                trace.selected = decision.selected;
                trace.handoff = decision.handoff;
                trace.abnormality = abnormality;
                result.points[t].variants.emplace(variant, std::move(trace));

                metrics.selections.push_back(decision.selected);
                if (abnormality) ++metrics.abnormality_events;
                history = update_history(history, decision.alternatives, decision.scores);
                previous = decision.selected;
            }

            metrics.handoff_count = count_handoffs(metrics.selections);
            metrics.abnormality_rate = static_cast<double>(metrics.abnormality_events) /
                                       static_cast<double>(config.decision_points);
            metrics.handoff_rate = static_cast<double>(metrics.handoff_count) /
                                   static_cast<double>(config.decision_points);
            result.metrics.emplace(variant, std::move(metrics));
        }
        report.replications.push_back(std::move(result));
    }

    for (VariantId variant : config.variants) {
        std::vector<double> abn_rates, hof_rates;
        double abn_events = 0.0, hof_counts = 0.0;
        for (const ReplicationResult& rep : report.replications) {
            const RunMetrics& m = rep.metrics.at(variant);
            abn_rates.push_back(m.abnormality_rate);
            hof_rates.push_back(m.handoff_rate);
            abn_events += static_cast<double>(m.abnormality_events);
            hof_counts += static_cast<double>(m.handoff_count);
        }
        const double n = static_cast<double>(report.replications.size());
        VariantAggregate agg;
        agg.mean_abnormality_rate =
            std::accumulate(abn_rates.begin(), abn_rates.end(), 0.0) / n;
        agg.mean_handoff_rate =
            std::accumulate(hof_rates.begin(), hof_rates.end(), 0.0) / n;
        agg.stddev_abnormality_rate = sample_stddev(abn_rates, agg.mean_abnormality_rate);
        agg.stddev_handoff_rate = sample_stddev(hof_rates, agg.mean_handoff_rate);
        agg.mean_abnormality_events = abn_events / n;
        agg.mean_handoff_count = hof_counts / n;
        report.aggregates.emplace(variant, agg);
    }
    return report;
}

}  // namespace netsel
