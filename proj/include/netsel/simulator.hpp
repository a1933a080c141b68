#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netsel/rng.hpp"
#include "netsel/strategy.hpp"

namespace netsel {

struct Range {
    double lo = 0;
    double hi = 0;

    friend bool operator==(const Range&, const Range&) = default;
};

// Attribute ranges for one candidate network. CB and S are fixed values;
// AB, D, J and L are sampled uniformly from their ranges.
struct NetworkRangeSpec {
    std::string network_id;
    double cb = 0;
    double s = 0;
    Range ab, d, j, l;

    // Validates lo <= hi and nonnegative bounds.
    static NetworkRangeSpec checked(NetworkRangeSpec spec);

    friend bool operator==(const NetworkRangeSpec&, const NetworkRangeSpec&) = default;
};

struct SimulationConfig {
    std::size_t decision_points = 12;
    std::uint64_t seed = 0;
    std::size_t replications = 1;
    std::string traffic_class;
    std::vector<VariantId> variants;
    std::vector<NetworkRangeSpec> network_specs;

    friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

// Draws AB, D, J, L (in that order) uniformly from their ranges; CB and S
// are copied as-is.
NetworkSnapshot sample_snapshot(const NetworkRangeSpec& spec, Rng& rng);

// Ranks all networks, removes the lowest-ranked one, re-runs the same
// variant pipeline on the survivors (weights recomposed over the reduced
// set), and reports whether the top-ranked network changed. With fewer
// than 3 networks no reversal is observable and the result is false.
bool detect_abnormality(VariantId variant, const TrafficClassProfile& profile,
                        const std::vector<NetworkSnapshot>& snapshots,
                        const HistoryState& history,
                        const std::optional<std::string>& previous_selection);

// Number of positions t >= 2 where selections[t] != selections[t-1].
std::size_t count_handoffs(const std::vector<std::string>& selections);

struct VariantPointTrace {
    std::map<std::string, double> scores;
    std::vector<std::string> ranking;
    std::string selected;
    bool handoff = false;
    bool abnormality = false;

    friend bool operator==(const VariantPointTrace&, const VariantPointTrace&) = default;
};

// One decision point: the sampled snapshots are shared by every variant.
struct DecisionTrace {
    std::vector<NetworkSnapshot> snapshots;
    std::map<VariantId, VariantPointTrace> variants;

    friend bool operator==(const DecisionTrace&, const DecisionTrace&) = default;
};

struct RunMetrics {
    std::size_t abnormality_events = 0;
    double abnormality_rate = 0;
    std::size_t handoff_count = 0;
    double handoff_rate = 0;
    std::vector<std::string> selections;

    friend bool operator==(const RunMetrics&, const RunMetrics&) = default;
};

struct ReplicationResult {
    std::size_t index = 0;
    std::uint64_t seed = 0;  // derived sub-seed
    std::vector<DecisionTrace> points;
    std::map<VariantId, RunMetrics> metrics;

    friend bool operator==(const ReplicationResult&, const ReplicationResult&) = default;
};

struct VariantAggregate {
    double mean_abnormality_rate = 0;
    double stddev_abnormality_rate = 0;
    double mean_handoff_rate = 0;
    double stddev_handoff_rate = 0;
    double mean_abnormality_events = 0;
    double mean_handoff_count = 0;

    friend bool operator==(const VariantAggregate&, const VariantAggregate&) = default;
};

struct SimulationReport {
    std::string traffic_class;
    SimulationConfig config;
    std::vector<ReplicationResult> replications;
    std::map<VariantId, VariantAggregate> aggregates;

    friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

// Runs the decision loop: per replication one attribute stream is sampled
// and every variant sees the same snapshots at each point (paired
// comparison); each variant keeps its own history and selection sequence.
// Deterministic given (config.seed, config).
SimulationReport run_simulation(const SimulationConfig& config,
                                const TrafficClassProfile& profile);

}  // namespace netsel
