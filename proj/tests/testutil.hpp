#pragma once

#include <string>
#include <vector>

#include "netsel/anp.hpp"
#include "netsel/rng.hpp"
#include "netsel/strategy.hpp"

namespace testutil {

inline netsel::Matrix matrix_of(const std::vector<std::vector<double>>& rows) {
    netsel::Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

inline netsel::SaatyJudgment random_saaty(netsel::Rng& rng) {
    // All 17 admissible scale values.
    const int pick = static_cast<int>(rng.below(17));
    if (pick < 9) return netsel::SaatyJudgment::of(pick + 1);
    return netsel::SaatyJudgment::of(1, pick - 7);  // 1/2 .. 1/9
}

inline netsel::PairwiseMatrix random_reciprocal(netsel::Rng& rng, std::size_t n) {
    netsel::JudgmentMap upper;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            upper.emplace(netsel::JudgmentKey{i, j}, random_saaty(rng));
    return netsel::build_pairwise(upper, n);
}

inline netsel::JudgmentSet all_equal_judgments(const std::vector<std::string>& labels) {
    netsel::JudgmentSet set;
    set.labels = labels;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            set.upper.emplace(netsel::JudgmentKey{i, j}, netsel::SaatyJudgment::of(1));
    return set;
}

// Profile with every judgment equal to 1 (uniform weights at every level).
inline netsel::ProfileSpec uniform_profile_spec(const std::vector<std::string>& networks,
                                                const std::string& name = "uniform") {
    netsel::ProfileSpec spec;
    spec.class_name = name;
    spec.level1 = all_equal_judgments(netsel::level1_labels());
    spec.level2 = all_equal_judgments(netsel::level2_labels());
    for (netsel::Criterion c : netsel::kAllCriteria)
        spec.level3.emplace(c, all_equal_judgments(networks));
    return spec;
}

inline netsel::NetworkSnapshot random_snapshot(netsel::Rng& rng, const std::string& id) {
    netsel::NetworkSnapshot snap;
    snap.network_id = id;
    snap.cb = rng.uniform(5, 80);
    snap.s = rng.uniform(40, 90);
    snap.ab = rng.uniform(0.1, 60);
    snap.d = rng.uniform(20, 150);
    snap.j = rng.uniform(3, 20);
    snap.l = rng.uniform(20, 80);
    return snap;
}

// Perfectly consistent matrix x_ij = w_i / w_j from random positive weights;
// returns the matrix and the normalized weights it encodes.
inline std::pair<netsel::PairwiseMatrix, std::vector<double>>
random_consistent(netsel::Rng& rng, std::size_t n) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (double& v : w) {
        v = rng.uniform(0.05, 1.0);
        sum += v;
    }
    for (double& v : w) v /= sum;
    netsel::Matrix entries(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entries(i, j) = w[i] / w[j];
    return {netsel::PairwiseMatrix::from_entries(entries), w};
}

}  // namespace testutil
