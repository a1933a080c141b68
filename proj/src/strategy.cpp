#include "netsel/strategy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

namespace netsel {

bool uses_history(VariantId v) {
    return v == VariantId::Topsis2 || v == VariantId::Topsis4;
}

bool uses_differentiated_weights(VariantId v) {
    return v == VariantId::Topsis3 || v == VariantId::Topsis4;
}

const std::string& to_string(VariantId v) {
    static const std::string names[] = {"TOPSIS1", "TOPSIS2", "TOPSIS3", "TOPSIS4"};
    return names[static_cast<std::size_t>(v)];
}

std::optional<VariantId> variant_from_string(const std::string& s) {
    std::string canon;
    for (char ch : s) {
        if (ch == '-' || ch == '_' || ch == ' ') continue;
        canon.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    }
    for (VariantId v : kAllVariants)
        if (to_string(v) == canon) return v;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Profile loading
// ---------------------------------------------------------------------------

namespace {

PairwiseMatrix build_named_matrix(const JudgmentSet& set, const std::string& clazz,
                                  const std::string& matrix_name) {
    if (set.labels.empty())
        throw ConfigError("class '" + clazz + "', matrix " + matrix_name +
                          ": no element labels");
    try {
        return build_pairwise(set.upper, set.labels.size(), set.labels);
    } catch (const Error& e) {
        throw ConfigError("class '" + clazz + "', matrix " + matrix_name + ": " +
                          e.what());
    }
}

void check_consistency(const PairwiseMatrix& m, const std::string& clazz,
                       const std::string& matrix_name,
                       std::map<std::string, ConsistencyReport>& reports) {
    const ConsistencyReport report = consistency(m, derive_weights(m));
    if (!report.acceptable) {
        std::ostringstream os;
        os << "class '" << clazz << "', matrix " << matrix_name << ": CR = "
           << report.cr << " >= 0.1, judgments rejected";
        throw InconsistentJudgmentsError(os.str());
    }
    reports.emplace(matrix_name, report);
}

}  // namespace

TrafficClassProfile load_profile(const ProfileSpec& spec) {
    if (spec.class_name.empty())
        throw ConfigError("traffic class profile has no name");
    if (spec.level1.labels != level1_labels())
        throw ConfigError("class '" + spec.class_name +
                          "': level-1 labels must be qos, security, cost, history");
    if (spec.level2.labels != level2_labels())
        throw ConfigError("class '" + spec.class_name +
                          "': level-2 labels must be AB, D, J, L");

    TrafficClassProfile profile;
    profile.class_name = spec.class_name;
    profile.level1 = build_named_matrix(spec.level1, spec.class_name, "level1");
    profile.level2 = build_named_matrix(spec.level2, spec.class_name, "level2");
    check_consistency(profile.level1, spec.class_name, "level1", profile.consistency);
    check_consistency(profile.level2, spec.class_name, "level2", profile.consistency);

    for (Criterion c : kAllCriteria) {
        const auto it = spec.level3.find(c);
        if (it == spec.level3.end())
            throw ConfigError("class '" + spec.class_name +
                              "': missing level-3 matrix for criterion " + to_string(c));
        const std::string name = "level3." + to_string(c);
        PairwiseMatrix m = build_named_matrix(it->second, spec.class_name, name);
        if (profile.networks.empty()) {
            profile.networks = m.labels;
        } else if (m.labels != profile.networks) {
            throw ConfigError("class '" + spec.class_name + "', matrix " + name +
                              ": network labels differ from the other level-3 matrices");
        }
        check_consistency(m, spec.class_name, name, profile.consistency);
        profile.level3.emplace(c, std::move(m));
    }
    return profile;
}

// ---------------------------------------------------------------------------
// Decision matrix assembly
// ---------------------------------------------------------------------------

HistoryState HistoryState::fresh(const std::vector<std::string>& networks) {
    HistoryState state;
    for (const std::string& id : networks) state.h[id] = 1.0;
    return state;
}

DecisionMatrix build_decision_matrix(const std::vector<NetworkSnapshot>& snapshots,
                                     const HistoryState& history,
                                     bool include_history) {
    if (snapshots.empty())
        throw DimensionError("build_decision_matrix: at least one snapshot required");
    std::set<std::string> seen;
    for (const NetworkSnapshot& snap : snapshots) {
        if (!seen.insert(snap.network_id).second)
            throw Error("duplicate network '" + snap.network_id + "' in snapshot set");
        for (double v : {snap.cb, snap.s, snap.ab, snap.d, snap.j, snap.l})
            if (!std::isfinite(v) || v < 0.0)
                throw Error("snapshot for '" + snap.network_id +
                            "' has a negative or non-finite attribute");
    }

    const std::vector<Criterion> leaves = leaf_criteria(include_history);
    std::vector<CriterionSpec> criteria;
    criteria.reserve(leaves.size());
    for (Criterion c : leaves) criteria.push_back({to_string(c), direction_of(c)});

    std::vector<std::string> alternatives;
    Matrix values(snapshots.size(), leaves.size());
    for (std::size_t i = 0; i < snapshots.size(); ++i) {
        const NetworkSnapshot& snap = snapshots[i];
        alternatives.push_back(snap.network_id);
        values(i, 0) = snap.cb;
        values(i, 1) = snap.s;
        values(i, 2) = snap.ab;
        values(i, 3) = snap.d;
        values(i, 4) = snap.j;
        values(i, 5) = snap.l;
        if (include_history) {
            const auto it = history.h.find(snap.network_id);
            if (it == history.h.end())
                throw IncompleteHistoryError("no history entry for network '" +
                                             snap.network_id + "'");
            if (!(it->second >= 0.0) || it->second > 1.0)
                throw Error("history value for '" + snap.network_id +
                            "' is outside [0, 1]");
            values(i, 6) = it->second;
        }
    }
    return DecisionMatrix::checked(std::move(alternatives), std::move(criteria),
                                   std::move(values));
}

// ---------------------------------------------------------------------------
// Weight composition and selection
// ---------------------------------------------------------------------------

HierarchyWeights derive_hierarchy(const TrafficClassProfile& profile,
                                  const std::vector<std::string>& networks) {
    std::vector<std::size_t> keep;
    keep.reserve(networks.size());
    for (const std::string& id : networks) {
        const auto it = std::find(profile.networks.begin(), profile.networks.end(), id);
        if (it == profile.networks.end())
            throw Error("network '" + id + "' is not part of profile '" +
                        profile.class_name + "'");
        keep.push_back(static_cast<std::size_t>(it - profile.networks.begin()));
    }

    HierarchyWeights h;
    h.level1 = derive_weights(profile.level1);
    h.level2 = derive_weights(profile.level2);
    for (const auto& [criterion, matrix] : profile.level3)
        h.level3.emplace(criterion, derive_weights(submatrix(matrix, keep)));
    return h;
}

VariantWeights compose_variant_weights(VariantId variant,
                                       const TrafficClassProfile& profile,
                                       const std::vector<std::string>& networks) {
    VariantWeights vw;
    vw.variant = variant;
    vw.networks = networks;
    vw.include_history = uses_history(variant);
    vw.differentiated = uses_differentiated_weights(variant);
    const HierarchyWeights h = derive_hierarchy(profile, networks);
    vw.per_network =
        compose_hierarchy(h, vw.include_history, vw.differentiated, networks);
    return vw;
}

SelectionDecision select_with_weights(const VariantWeights& weights,
                                      const std::vector<NetworkSnapshot>& snapshots,
                                      const HistoryState& history,
                                      const std::optional<std::string>& previous_selection) {
    std::vector<std::string> ids;
    ids.reserve(snapshots.size());
    for (const NetworkSnapshot& snap : snapshots) ids.push_back(snap.network_id);
    if (ids != weights.networks)
        throw Error("snapshot set does not match the composed weight set");

    const DecisionMatrix d =
        build_decision_matrix(snapshots, history, weights.include_history);
    const WeightScheme scheme =
        weights.differentiated
            ? WeightScheme::per_alternative(weights.per_network)
            : WeightScheme::shared(weights.per_network.begin()->second);
    const TopsisOutcome outcome = evaluate(d, scheme, previous_selection);

    SelectionDecision decision;
    decision.alternatives = d.alternatives;
    decision.scores = outcome.scores;
    decision.ranking = outcome.ranking;
    decision.selected = outcome.ranking.front();
    decision.handoff = previous_selection && decision.selected != *previous_selection;
    return decision;
}

SelectionDecision select_network(VariantId variant,
                                 const TrafficClassProfile& profile,
                                 const std::vector<NetworkSnapshot>& snapshots,
                                 const HistoryState& history,
                                 const std::optional<std::string>& previous_selection) {
    std::vector<std::string> ids;
    ids.reserve(snapshots.size());
    for (const NetworkSnapshot& snap : snapshots) ids.push_back(snap.network_id);
    const VariantWeights weights = compose_variant_weights(variant, profile, ids);
    return select_with_weights(weights, snapshots, history, previous_selection);
}

HistoryState update_history(const HistoryState& history,
                            const std::vector<std::string>& networks,
                            const ClosenessScores& scores) {
    if (networks.size() != scores.c.size())
        throw IncompleteScoresError("score count does not match network count");
    if (networks.size() != history.h.size())
        throw IncompleteScoresError("scores must cover every network in the history");
    HistoryState next = history;
    for (std::size_t i = 0; i < networks.size(); ++i) {
        const auto it = next.h.find(networks[i]);
        if (it == next.h.end())
            throw IncompleteScoresError("network '" + networks[i] +
                                        "' is not tracked by the history");
        it->second = scores.c[i];
    }
    return next;
}

}  // namespace netsel
