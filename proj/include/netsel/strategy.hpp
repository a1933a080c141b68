#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netsel/anp.hpp"
#include "netsel/topsis.hpp"

namespace netsel {

// The four selection variants: TOPSIS1 is the plain pipeline, TOPSIS2 adds
// the history attribute, TOPSIS3 adds per-network differentiated weights,
// TOPSIS4 adds both.
enum class VariantId { Topsis1, Topsis2, Topsis3, Topsis4 };

inline constexpr std::array<VariantId, 4> kAllVariants = {
    VariantId::Topsis1, VariantId::Topsis2, VariantId::Topsis3,
    VariantId::Topsis4};

bool uses_history(VariantId v);
bool uses_differentiated_weights(VariantId v);
const std::string& to_string(VariantId v);  // "TOPSIS1".."TOPSIS4"
// Accepts "TOPSIS1", "topsis-1" and similar; nullopt on anything else.
std::optional<VariantId> variant_from_string(const std::string& s);

// Raw upper-triangle judgments for one pairwise matrix.
struct JudgmentSet {
    std::vector<std::string> labels;
    JudgmentMap upper;

    friend bool operator==(const JudgmentSet&, const JudgmentSet&) = default;
};

// The judgment inputs for one traffic class, prior to validation.
struct ProfileSpec {
    std::string class_name;
    JudgmentSet level1;                      // labels must be the level-1 set
    JudgmentSet level2;                      // labels must be the qos children
    std::map<Criterion, JudgmentSet> level3; // one per criterion, over networks

    friend bool operator==(const ProfileSpec&, const ProfileSpec&) = default;
};

// A validated traffic-class profile: every matrix built and consistency-
// checked (CR < 0.1).
struct TrafficClassProfile {
    std::string class_name;
    std::vector<std::string> networks;
    PairwiseMatrix level1;
    PairwiseMatrix level2;
    std::map<Criterion, PairwiseMatrix> level3;
    std::map<std::string, ConsistencyReport> consistency;  // "level1", "level3.CB", ...
};

// Builds and validates the profile. Throws ConfigError on structural
// problems and InconsistentJudgmentsError naming the offending matrix when
// any CR >= 0.1.
TrafficClassProfile load_profile(const ProfileSpec& spec);

// One network's sampled attribute values at a decision point.
struct NetworkSnapshot {
    std::string network_id;
    double cb = 0;  // cost per byte, percent
    double s = 0;   // security, percent
    double ab = 0;  // available bandwidth, mbps
    double d = 0;   // packet delay, ms
    double j = 0;   // packet jitter, ms
    double l = 0;   // packet loss, per 10^6

    friend bool operator==(const NetworkSnapshot&, const NetworkSnapshot&) = default;
};

// Per-network memory of the previous closeness coefficient, in [0, 1].
struct HistoryState {
    std::map<std::string, double> h;

    static HistoryState fresh(const std::vector<std::string>& networks);
};

// Columns ordered (CB, S, AB, D, J, L[, H]); the H column is filled from
// the history state when included.
DecisionMatrix build_decision_matrix(const std::vector<NetworkSnapshot>& snapshots,
                                     const HistoryState& history,
                                     bool include_history);

struct SelectionDecision {
    std::vector<std::string> alternatives;  // input order, aligned with scores
    ClosenessScores scores;
    std::vector<std::string> ranking;
    std::string selected;
    bool handoff = false;
};

// Composed per-network leaf weights for one variant over a fixed network set.
struct VariantWeights {
    VariantId variant = VariantId::Topsis1;
    std::vector<std::string> networks;
    bool include_history = false;
    bool differentiated = false;
    std::map<std::string, WeightVector> per_network;
};

// Derives the three weighting levels from the profile's judgment matrices,
// restricting the level-3 matrices to the given network subset.
HierarchyWeights derive_hierarchy(const TrafficClassProfile& profile,
                                  const std::vector<std::string>& networks);

VariantWeights compose_variant_weights(VariantId variant,
                                       const TrafficClassProfile& profile,
                                       const std::vector<std::string>& networks);

// The five-step selection: ANP weighting, hierarchy composition, decision
// matrix assembly, the TOPSIS pipeline, and the pick of the top-ranked
// network. Ties prefer `previous_selection`.
SelectionDecision select_network(VariantId variant,
                                 const TrafficClassProfile& profile,
                                 const std::vector<NetworkSnapshot>& snapshots,
                                 const HistoryState& history,
                                 const std::optional<std::string>& previous_selection);

// Same pipeline with the ANP composition precomputed; snapshot order must
// match weights.networks.
SelectionDecision select_with_weights(const VariantWeights& weights,
                                      const std::vector<NetworkSnapshot>& snapshots,
                                      const HistoryState& history,
                                      const std::optional<std::string>& previous_selection);

// Replaces every network's H with its own closeness coefficient from this
// decision. The score set must cover exactly the networks in the history.
HistoryState update_history(const HistoryState& history,
                            const std::vector<std::string>& networks,
                            const ClosenessScores& scores);

}  // namespace netsel
