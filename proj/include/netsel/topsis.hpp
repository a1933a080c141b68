#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netsel/criteria.hpp"
#include "netsel/errors.hpp"
#include "netsel/matrix.hpp"
#include "netsel/weights.hpp"

namespace netsel {

struct CriterionSpec {
    std::string name;
    CriterionDirection direction = CriterionDirection::Benefit;
};

// Alternatives x criteria performance values.
struct DecisionMatrix {
    std::vector<std::string> alternatives;
    std::vector<CriterionSpec> criteria;
    Matrix values;

    // Validates shape, finiteness and that cost-direction columns are >= 0.
    static DecisionMatrix checked(std::vector<std::string> alternatives,
                                  std::vector<CriterionSpec> criteria,
                                  Matrix values);

    std::size_t alternative_count() const { return alternatives.size(); }
    std::size_t criterion_count() const { return criteria.size(); }
    std::vector<CriterionDirection> directions() const;
};

// Either one weight vector shared by all alternatives, or one vector per
// alternative (the differentiated scheme).
class WeightScheme {
public:
    static WeightScheme shared(WeightVector w);
    static WeightScheme per_alternative(std::map<std::string, WeightVector> by_alt);

    bool differentiated() const { return !by_alternative_.empty(); }
    const WeightVector& for_alternative(const std::string& alt) const;

private:
    WeightScheme() = default;
    WeightVector shared_;
    std::map<std::string, WeightVector> by_alternative_;
};

// Euclidean column normalization: r_ij = d_ij / sqrt(sum_i d_ij^2).
// An all-zero column maps to all zeros.
Matrix normalize_euclidean(const DecisionMatrix& d);

// v_ij = W_j * r_ij, with W taken per alternative under the differentiated
// scheme. `alternatives` gives the row labels of r.
Matrix apply_weights(const Matrix& r, const WeightScheme& scheme,
                     const std::vector<std::string>& alternatives);

struct IdealSolutions {
    std::vector<double> ideal;       // per-criterion best weighted value
    std::vector<double> anti_ideal;  // per-criterion worst weighted value
};

// Benefit criteria take column max as ideal / min as anti-ideal; cost
// criteria the opposite.
IdealSolutions ideal_solutions(const Matrix& v,
                               const std::vector<CriterionDirection>& directions);

struct Separations {
    std::vector<double> s_plus;   // Euclidean distance to the ideal
    std::vector<double> s_minus;  // Euclidean distance to the anti-ideal
};

Separations separations(const Matrix& v, const IdealSolutions& ideals);

struct ClosenessScores {
    std::vector<double> s_plus;
    std::vector<double> s_minus;
    std::vector<double> c;  // closeness coefficients, in [0, 1]
};

// C = S- / (S+ + S-); an alternative indistinguishable from both poles
// (S+ = S- = 0) scores 0.5.
ClosenessScores closeness(const std::vector<double>& s_plus,
                          const std::vector<double>& s_minus);

// Alternatives in strictly descending closeness order. Exact ties go to
// `sticky` (the currently connected network) when provided, then to input
// order.
std::vector<std::string> rank(const ClosenessScores& scores,
                              const std::vector<std::string>& alternatives,
                              const std::optional<std::string>& sticky = std::nullopt);

struct TopsisOutcome {
    ClosenessScores scores;           // aligned with d.alternatives
    std::vector<std::string> ranking;
};

// The full pipeline: normalize, weight, ideals, separations, closeness, rank.
TopsisOutcome evaluate(const DecisionMatrix& d, const WeightScheme& scheme,
                       const std::optional<std::string>& sticky = std::nullopt);

}  // namespace netsel
