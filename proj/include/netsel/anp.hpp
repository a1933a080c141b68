#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netsel/criteria.hpp"
#include "netsel/errors.hpp"
#include "netsel/matrix.hpp"
#include "netsel/weights.hpp"

namespace netsel {

// One judgment on Saaty's 1-9 comparison scale. Stored as an exact rational
// so reciprocal pairs stay exact when matrices are built.
class SaatyJudgment {
public:
    // Admissible values: 1..9 and their reciprocals 1/2..1/9.
    static SaatyJudgment of(int numerator, int denominator = 1);
    // Accepts "3" or "1/7"; nullopt on anything else.
    static std::optional<SaatyJudgment> parse(const std::string& text);

    int numerator() const { return num_; }
    int denominator() const { return den_; }
    double value() const { return static_cast<double>(num_) / den_; }
    SaatyJudgment reciprocal() const { return SaatyJudgment(den_, num_); }
    std::string str() const;

    friend bool operator==(const SaatyJudgment&, const SaatyJudgment&) = default;

private:
    SaatyJudgment(int num, int den) : num_(num), den_(den) {}
    int num_ = 1;
    int den_ = 1;
};

// Positive reciprocal comparison matrix: unit diagonal, x_ji = 1/x_ij.
struct PairwiseMatrix {
    std::size_t order = 0;
    Matrix entries;
    std::vector<std::string> labels;  // empty or one name per element

    // Validates positivity, unit diagonal and the reciprocal property
    // (within 1e-12 for stored reals).
    static PairwiseMatrix from_entries(Matrix entries,
                                       std::vector<std::string> labels = {});

    double at(std::size_t i, std::size_t j) const { return entries(i, j); }
};

// Upper-triangle judgments keyed by (row, col) with row < col, 0-based.
using JudgmentKey = std::pair<std::size_t, std::size_t>;
using JudgmentMap = std::map<JudgmentKey, SaatyJudgment>;

// Builds the full reciprocal matrix from its upper triangle. Every pair
// must be present; reciprocals below the diagonal are taken exactly.
PairwiseMatrix build_pairwise(const JudgmentMap& upper, std::size_t order,
                              std::vector<std::string> labels = {});

// Principal submatrix over the given element indices, kept in the given order.
PairwiseMatrix submatrix(const PairwiseMatrix& a,
                         const std::vector<std::size_t>& keep);

// Column-normalized matrix: r_ij = x_ij / sum_i x_ij.
Matrix normalize_columns(const PairwiseMatrix& a);

// Row averages of the column-normalized matrix.
WeightVector derive_weights(const PairwiseMatrix& a);

struct ConsistencyReport {
    double lambda_max = 0.0;
    double ci = 0.0;
    double ri = 0.0;
    double cr = 0.0;
    bool acceptable = true;
    std::vector<double> b;  // per-row consistency quotients
};

// Random consistency index; tabulated for orders 3..10, zero below
// (reciprocal matrices of order <= 2 are always consistent).
double ri_lookup(std::size_t order);

// Consistency check of `a` against its derived weights `w`:
// b_i = (sum_j a_ij w_j) / w_i, lambda_max = mean(b), CI = (lambda_max - n)/(n - 1),
// CR = CI / RI(n); acceptable iff CR < 0.1. CR is defined as 0 for n <= 2.
ConsistencyReport consistency(const PairwiseMatrix& a, const WeightVector& w);

struct ClusterSpec {
    std::string name;
    std::vector<std::string> elements;
};

// Partitioned square matrix of local priority vectors. Rows/columns are the
// concatenated cluster elements in cluster order.
struct Supermatrix {
    std::vector<ClusterSpec> clusters;
    Matrix values;

    std::size_t dimension() const { return values.rows(); }
    // Row/column offset of the cluster at `index`.
    std::size_t cluster_offset(std::size_t index) const;
};

// Keyed by (source element, target cluster): the priority of the target
// cluster's elements from the source element's point of view.
using PriorityKey = std::pair<std::string, std::string>;

Supermatrix form_supermatrix(
    const std::vector<ClusterSpec>& clusters,
    const std::map<PriorityKey, WeightVector>& local_priorities);

// Column-normalizes the supermatrix, then squares it repeatedly until
// successive iterates differ by < tol in max-abs norm (Cesaro-averaging a
// period-2 oscillation). Returns the stabilized priorities per cluster,
// each renormalized to sum 1.
std::vector<WeightVector> limit_supermatrix(const Supermatrix& s,
                                            double tol = 1e-9,
                                            std::size_t max_iter = 200);

// The three-level weighting structure: level 1 over {qos, security, cost,
// history}, level 2 over the qos children {AB, D, J, L}, level 3 one
// network-priority vector per leaf criterion.
struct HierarchyWeights {
    WeightVector level1;
    WeightVector level2;
    std::map<Criterion, WeightVector> level3;
};

// Per-network leaf-criterion weights: for each network k and leaf c,
// raw_k(c) = level1(parent(c)) * level2(c) [qos children only] * level3(c)(k),
// renormalized to sum 1 per network. When `differentiated` is false the
// level-3 factor is replaced by 1, so every network receives the same vector.
std::map<std::string, WeightVector> compose_hierarchy(
    const HierarchyWeights& h, bool include_history, bool differentiated,
    const std::vector<std::string>& networks);

}  // namespace netsel
