#include "netsel/anp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace netsel {

namespace {

std::string key_str(std::size_t i, std::size_t j) {
    std::ostringstream os;
    os << "(" << i << "," << j << ")";
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Weights
// ---------------------------------------------------------------------------

WeightVector WeightVector::checked(std::vector<double> weights,
                                   std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != weights.size())
        throw DimensionError("weight vector: label count does not match weight count");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0))
            throw Error("weight vector: negative or non-finite component");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw Error("weight vector: components sum to " + std::to_string(sum) +
                    ", expected 1");
    WeightVector out;
    out.weights = std::move(weights);
    out.labels = std::move(labels);
    return out;
}

std::optional<std::size_t> WeightVector::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Saaty judgments and pairwise matrices
// ---------------------------------------------------------------------------

SaatyJudgment SaatyJudgment::of(int numerator, int denominator) {
    const bool whole = denominator == 1 && numerator >= 1 && numerator <= 9;
    const bool recip = numerator == 1 && denominator >= 2 && denominator <= 9;
    if (!whole && !recip)
        throw InvalidJudgmentError("judgment " + std::to_string(numerator) + "/" +
                                   std::to_string(denominator) +
                                   " is not on the 1-9 comparison scale");
    return SaatyJudgment(numerator, denominator);
}

std::optional<SaatyJudgment> SaatyJudgment::parse(const std::string& text) {
    int num = 0, den = 1;
    char slash = 0;
    std::istringstream is(text);
    if (!(is >> num)) return std::nullopt;
    if (is >> slash) {
        if (slash != '/' || !(is >> den)) return std::nullopt;
    }
    std::string rest;
    if (is >> rest) return std::nullopt;
    const bool whole = den == 1 && num >= 1 && num <= 9;
    const bool recip = num == 1 && den >= 2 && den <= 9;
    if (!whole && !recip) return std::nullopt;
    return SaatyJudgment(num, den);
}

std::string SaatyJudgment::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

PairwiseMatrix PairwiseMatrix::from_entries(Matrix entries,
                                            std::vector<std::string> labels) {
    const std::size_t n = entries.rows();
    if (n == 0 || entries.cols() != n)
        throw DimensionError("pairwise matrix must be square and non-empty");
    if (!labels.empty() && labels.size() != n)
        throw DimensionError("pairwise matrix: label count does not match order");
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(entries(i, i) - 1.0) > 1e-12)
            throw Error("pairwise matrix: diagonal entry " + key_str(i, i) +
                        " is not 1");
        for (std::size_t j = 0; j < n; ++j) {
            if (!(entries(i, j) > 0.0) || !std::isfinite(entries(i, j)))
                throw Error("pairwise matrix: entry " + key_str(i, j) +
                            " is not strictly positive");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(entries(j, i) - 1.0 / entries(i, j)) > 1e-12)
                throw Error("pairwise matrix: entry " + key_str(j, i) +
                            " is not the reciprocal of " + key_str(i, j));
        }
    }
    PairwiseMatrix out;
    out.order = n;
    out.entries = std::move(entries);
    out.labels = std::move(labels);
    return out;
}

PairwiseMatrix build_pairwise(const JudgmentMap& upper, std::size_t order,
                              std::vector<std::string> labels) {
    if (order == 0) throw DimensionError("pairwise matrix order must be >= 1");
    if (!labels.empty() && labels.size() != order)
        throw DimensionError("build_pairwise: label count does not match order");
    for (const auto& [key, judgment] : upper) {
        (void)judgment;
        if (key.first >= key.second || key.second >= order)
            throw InvalidJudgmentError("judgment key " +
                                       key_str(key.first, key.second) +
                                       " is not in the upper triangle");
    }
    Matrix entries(order, order, 0.0);
    for (std::size_t i = 0; i < order; ++i) {
        entries(i, i) = 1.0;
        for (std::size_t j = i + 1; j < order; ++j) {
            const auto it = upper.find({i, j});
            if (it == upper.end())
                throw IncompleteJudgmentsError("missing judgment for pair " +
                                               key_str(i, j));
            entries(i, j) = it->second.value();
            entries(j, i) = it->second.reciprocal().value();
        }
    }
    PairwiseMatrix out;
    out.order = order;
    out.entries = std::move(entries);
    out.labels = std::move(labels);
    return out;
}

PairwiseMatrix submatrix(const PairwiseMatrix& a,
                         const std::vector<std::size_t>& keep) {
    if (keep.empty()) throw DimensionError("submatrix: empty index set");
    for (std::size_t idx : keep)
        if (idx >= a.order)
            throw DimensionError("submatrix: index out of range");
    Matrix entries(keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            entries(i, j) = a.entries(keep[i], keep[j]);
    std::vector<std::string> labels;
    if (!a.labels.empty()) {
        labels.reserve(keep.size());
        for (std::size_t idx : keep) labels.push_back(a.labels[idx]);
    }
    PairwiseMatrix out;
    out.order = keep.size();
    out.entries = std::move(entries);
    out.labels = std::move(labels);
    return out;
}

// ---------------------------------------------------------------------------
// Weight derivation and consistency
// ---------------------------------------------------------------------------

Matrix normalize_columns(const PairwiseMatrix& a) {
    const std::size_t n = a.order;
    Matrix out(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += a.entries(i, j);
        for (std::size_t i = 0; i < n; ++i) out(i, j) = a.entries(i, j) / sum;
    }
    return out;
}

WeightVector derive_weights(const PairwiseMatrix& a) {
    const Matrix norm = normalize_columns(a);
    const std::size_t n = a.order;
    std::vector<double> weights(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += norm(i, j);
        weights[i] = sum / static_cast<double>(n);
    }
    return WeightVector::checked(std::move(weights), a.labels);
}

double ri_lookup(std::size_t order) {
    // Random consistency index; orders 1 and 2 are always consistent.
    static const double table[] = {0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49};
    if (order <= 2) return 0.0;
    if (order > 10)
        throw Error("random consistency index is tabulated only up to order 10");
    return table[order - 3];
}

ConsistencyReport consistency(const PairwiseMatrix& a, const WeightVector& w) {
    const std::size_t n = a.order;
    if (w.size() != n)
        throw DimensionError("consistency: weight count does not match matrix order");
    ConsistencyReport report;
    report.b.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] == 0.0)
            throw DegenerateWeightsError(
                "consistency: weight component " + std::to_string(i) +
                " is zero; consistency quotient undefined");
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += a.entries(i, j) * w[j];
        report.b[i] = row / w[i];
    }
    report.lambda_max =
        std::accumulate(report.b.begin(), report.b.end(), 0.0) / static_cast<double>(n);
    report.ci = n > 1 ? (report.lambda_max - static_cast<double>(n)) /
                            (static_cast<double>(n) - 1.0)
                      : 0.0;
    report.ri = ri_lookup(n);
    report.cr = n <= 2 ? 0.0 : report.ci / report.ri;
    report.acceptable = report.cr < 0.1;
    return report;
}

// ---------------------------------------------------------------------------
// Supermatrix
// ---------------------------------------------------------------------------

std::size_t Supermatrix::cluster_offset(std::size_t index) const {
    std::size_t offset = 0;
    for (std::size_t i = 0; i < index; ++i) offset += clusters[i].elements.size();
    return offset;
}

Supermatrix form_supermatrix(
    const std::vector<ClusterSpec>& clusters,
    const std::map<PriorityKey, WeightVector>& local_priorities) {
    std::map<std::string, std::size_t> element_index;
    std::map<std::string, std::size_t> cluster_index;
    std::size_t total = 0;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        if (!cluster_index.emplace(clusters[c].name, c).second)
            throw InvalidPriorityError("duplicate cluster name '" +
                                       clusters[c].name + "'");
        for (const std::string& element : clusters[c].elements) {
            if (!element_index.emplace(element, total).second)
                throw InvalidPriorityError("duplicate element name '" + element + "'");
            ++total;
        }
    }
    if (total == 0) throw InvalidPriorityError("supermatrix has no elements");

    Supermatrix s;
    s.clusters = clusters;
    s.values = Matrix(total, total, 0.0);
    for (const auto& [key, priorities] : local_priorities) {
        const auto src = element_index.find(key.first);
        if (src == element_index.end())
            throw InvalidPriorityError("unknown source element '" + key.first + "'");
        const auto dst = cluster_index.find(key.second);
        if (dst == cluster_index.end())
            throw InvalidPriorityError("unknown target cluster '" + key.second + "'");
        const ClusterSpec& target = clusters[dst->second];
        if (priorities.size() != target.elements.size())
            throw InvalidPriorityError(
                "priority vector for ('" + key.first + "' -> '" + key.second +
                "') has " + std::to_string(priorities.size()) + " entries, cluster has " +
                std::to_string(target.elements.size()));
        const std::size_t row0 = s.cluster_offset(dst->second);
        for (std::size_t i = 0; i < priorities.size(); ++i)
            s.values(row0 + i, src->second) = priorities[i];
    }
    return s;
}

std::vector<WeightVector> limit_supermatrix(const Supermatrix& s, double tol,
                                            std::size_t max_iter) {
    if (!(tol > 0.0)) throw Error("limit_supermatrix: tol must be positive");
    const std::size_t n = s.dimension();

    // Column-normalize; the caller must supply a matrix with no empty columns.
    Matrix current = s.values;
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += current(i, j);
        if (sum <= 0.0)
            throw InvalidPriorityError(
                "limit_supermatrix: column " + std::to_string(j) +
                " has zero sum; the supermatrix cannot be made column-stochastic");
        for (std::size_t i = 0; i < n; ++i) current(i, j) /= sum;
    }

    Matrix limit;
    bool stabilized = false;
    Matrix prev2;  // two squarings back, for oscillation detection
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        Matrix next = current * current;
        if (max_abs_diff(next, current) < tol) {
            limit = std::move(next);
            stabilized = true;
            break;
        }
        if (iter >= 1 && max_abs_diff(next, prev2) < tol) {
            // Period-2 oscillation of the squaring sequence: take the Cesaro
            // average of the two accumulation points.
            limit = Matrix(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    limit(i, j) = 0.5 * (next(i, j) + current(i, j));
            stabilized = true;
            break;
        }
        prev2 = std::move(current);
        current = std::move(next);
    }
    if (!stabilized)
        throw NoLimitError("supermatrix limit did not stabilize after " +
                           std::to_string(max_iter) + " squarings");

    // Row averages across columns give the limiting priorities.
    std::vector<double> row_mean(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += limit(i, j);
        row_mean[i] = sum / static_cast<double>(n);
    }

    std::vector<WeightVector> out;
    out.reserve(s.clusters.size());
    std::size_t offset = 0;
    for (const ClusterSpec& cluster : s.clusters) {
        const std::size_t size = cluster.elements.size();
        double sum = 0.0;
        for (std::size_t i = 0; i < size; ++i) sum += row_mean[offset + i];
        if (sum <= 0.0)
            throw NoLimitError("cluster '" + cluster.name +
                               "' received zero limiting mass");
        std::vector<double> w(size);
        for (std::size_t i = 0; i < size; ++i) w[i] = row_mean[offset + i] / sum;
        out.push_back(WeightVector::checked(std::move(w), cluster.elements));
        offset += size;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hierarchy composition
// ---------------------------------------------------------------------------

std::map<std::string, WeightVector> compose_hierarchy(
    const HierarchyWeights& h, bool include_history, bool differentiated,
    const std::vector<std::string>& networks) {
    if (h.level1.size() != level1_labels().size())
        throw DimensionError("compose_hierarchy: level-1 vector must have 4 entries");
    if (h.level2.size() != level2_labels().size())
        throw DimensionError("compose_hierarchy: level-2 vector must have 4 entries");
    if (networks.empty())
        throw DimensionError("compose_hierarchy: no networks given");

    const std::vector<Criterion> leaves = leaf_criteria(include_history);
    std::vector<std::string> leaf_names;
    leaf_names.reserve(leaves.size());
    for (Criterion c : leaves) leaf_names.push_back(to_string(c));

    std::map<std::string, WeightVector> out;
    for (const std::string& network : networks) {
        std::vector<double> raw(leaves.size(), 0.0);
        for (std::size_t k = 0; k < leaves.size(); ++k) {
            const Criterion c = leaves[k];
            double value = h.level1[level1_parent_index(c)];
            if (const auto qos_child = level2_index(c))
                value *= h.level2[*qos_child];
            if (differentiated) {
                const auto entry = h.level3.find(c);
                if (entry == h.level3.end())
                    throw IncompleteHierarchyError(
                        "no level-3 priority vector for criterion " + to_string(c));
                const auto idx = entry->second.index_of(network);
                if (!idx)
                    throw IncompleteHierarchyError(
                        "level-3 vector for criterion " + to_string(c) +
                        " has no entry for network '" + network + "'");
                value *= entry->second[*idx];
            }
            raw[k] = value;
        }
        const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
        if (total <= 0.0)
            throw Error("compose_hierarchy: composed weights for network '" +
                        network + "' are all zero");
        for (double& v : raw) v /= total;
        out.emplace(network, WeightVector::checked(std::move(raw), leaf_names));
    }
    return out;
}

}  // namespace netsel
