#include "netsel/topsis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace netsel {

DecisionMatrix DecisionMatrix::checked(std::vector<std::string> alternatives,
                                       std::vector<CriterionSpec> criteria,
                                       Matrix values) {
    if (alternatives.empty() || criteria.empty())
        throw DimensionError("decision matrix needs at least one alternative and one criterion");
    if (values.rows() != alternatives.size() || values.cols() != criteria.size())
        throw DimensionError("decision matrix: value shape does not match labels");
    for (std::size_t i = 0; i < values.rows(); ++i) {
        for (std::size_t j = 0; j < values.cols(); ++j) {
            const double v = values(i, j);
            if (!std::isfinite(v))
                throw Error("decision matrix: non-finite value for alternative '" +
                            alternatives[i] + "', criterion '" + criteria[j].name + "'");
            if (criteria[j].direction == CriterionDirection::Cost && v < 0.0)
                throw Error("decision matrix: negative value on cost criterion '" +
                            criteria[j].name + "'");
        }
    }
    DecisionMatrix out;
    out.alternatives = std::move(alternatives);
    out.criteria = std::move(criteria);
    out.values = std::move(values);
    return out;
}

std::vector<CriterionDirection> DecisionMatrix::directions() const {
    std::vector<CriterionDirection> out;
    out.reserve(criteria.size());
    for (const CriterionSpec& spec : criteria) out.push_back(spec.direction);
    return out;
}

WeightScheme WeightScheme::shared(WeightVector w) {
    WeightScheme s;
    s.shared_ = std::move(w);
    return s;
}

WeightScheme WeightScheme::per_alternative(std::map<std::string, WeightVector> by_alt) {
    if (by_alt.empty())
        throw DimensionError("differentiated weight scheme needs at least one vector");
    WeightScheme s;
    s.by_alternative_ = std::move(by_alt);
    return s;
}

const WeightVector& WeightScheme::for_alternative(const std::string& alt) const {
    if (!differentiated()) return shared_;
    const auto it = by_alternative_.find(alt);
    if (it == by_alternative_.end())
        throw DimensionError("no weight vector for alternative '" + alt + "'");
    return it->second;
}

Matrix normalize_euclidean(const DecisionMatrix& d) {
    const std::size_t m = d.alternative_count();
    const std::size_t n = d.criterion_count();
    Matrix out(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        double sq = 0.0;
        for (std::size_t i = 0; i < m; ++i) sq += d.values(i, j) * d.values(i, j);
        const double norm = std::sqrt(sq);
        if (norm == 0.0) continue;  // all-zero column carries no information
        for (std::size_t i = 0; i < m; ++i) out(i, j) = d.values(i, j) / norm;
    }
    return out;
}

Matrix apply_weights(const Matrix& r, const WeightScheme& scheme,
                     const std::vector<std::string>& alternatives) {
    if (alternatives.size() != r.rows())
        throw DimensionError("apply_weights: alternative count does not match rows");
    Matrix out(r.rows(), r.cols());
    for (std::size_t i = 0; i < r.rows(); ++i) {
        const WeightVector& w = scheme.for_alternative(alternatives[i]);
        if (w.size() != r.cols())
            throw DimensionError("apply_weights: weight count does not match criteria");
        for (std::size_t j = 0; j < r.cols(); ++j) out(i, j) = w[j] * r(i, j);
    }
    return out;
}

IdealSolutions ideal_solutions(const Matrix& v,
                               const std::vector<CriterionDirection>& directions) {
    if (directions.size() != v.cols())
        throw DimensionError("ideal_solutions: direction count does not match columns");
    if (v.rows() == 0) throw DimensionError("ideal_solutions: empty matrix");
    IdealSolutions out;
    out.ideal.resize(v.cols());
    out.anti_ideal.resize(v.cols());
    for (std::size_t j = 0; j < v.cols(); ++j) {
        double lo = v(0, j), hi = v(0, j);
        for (std::size_t i = 1; i < v.rows(); ++i) {
            lo = std::min(lo, v(i, j));
            hi = std::max(hi, v(i, j));
        }
        const bool benefit = directions[j] == CriterionDirection::Benefit;
        out.ideal[j] = benefit ? hi : lo;
        out.anti_ideal[j] = benefit ? lo : hi;
    }
    return out;
}

Separations separations(const Matrix& v, const IdealSolutions& ideals) {
    if (ideals.ideal.size() != v.cols() || ideals.anti_ideal.size() != v.cols())
        throw DimensionError("separations: ideal size does not match columns");
    Separations out;
    out.s_plus.resize(v.rows());
    out.s_minus.resize(v.rows());
    for (std::size_t i = 0; i < v.rows(); ++i) {
        double plus = 0.0, minus = 0.0;
        for (std::size_t j = 0; j < v.cols(); ++j) {
            const double dp = v(i, j) - ideals.ideal[j];
            const double dm = v(i, j) - ideals.anti_ideal[j];
            plus += dp * dp;
            minus += dm * dm;
        }
        out.s_plus[i] = std::sqrt(plus);
        out.s_minus[i] = std::sqrt(minus);
    }
    return out;
}

ClosenessScores closeness(const std::vector<double>& s_plus,
                          const std::vector<double>& s_minus) {
    if (s_plus.size() != s_minus.size())
        throw DimensionError("closeness: separation vectors differ in length");
    ClosenessScores out;
    out.s_plus = s_plus;
    out.s_minus = s_minus;
    out.c.resize(s_plus.size());
    for (std::size_t i = 0; i < s_plus.size(); ++i) {
        if (!(s_plus[i] >= 0.0) || !(s_minus[i] >= 0.0))
            throw Error("closeness: separations must be nonnegative");
        const double total = s_plus[i] + s_minus[i];
        out.c[i] = total == 0.0 ? 0.5 : s_minus[i] / total;
    }
    return out;
}

std::vector<std::string> rank(const ClosenessScores& scores,
                              const std::vector<std::string>& alternatives,
                              const std::optional<std::string>& sticky) {
    if (scores.c.size() != alternatives.size())
        throw DimensionError("rank: score count does not match alternatives");
    std::vector<std::size_t> order(alternatives.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores.c[a] != scores.c[b]) return scores.c[a] > scores.c[b];
        const bool a_sticky = sticky && alternatives[a] == *sticky;
        const bool b_sticky = sticky && alternatives[b] == *sticky;
        if (a_sticky != b_sticky) return a_sticky;
        return a < b;
    });
    std::vector<std::string> out;
    out.reserve(order.size());
    for (std::size_t idx : order) out.push_back(alternatives[idx]);
    return out;
}

TopsisOutcome evaluate(const DecisionMatrix& d, const WeightScheme& scheme,
                       const std::optional<std::string>& sticky) {
    const Matrix r = normalize_euclidean(d);
    const Matrix v = apply_weights(r, scheme, d.alternatives);
    const IdealSolutions ideals = ideal_solutions(v, d.directions());
    const Separations sep = separations(v, ideals);
    TopsisOutcome out;
    out.scores = closeness(sep.s_plus, sep.s_minus);
    out.ranking = rank(out.scores, d.alternatives, sticky);
    return out;
}

}  // namespace netsel
