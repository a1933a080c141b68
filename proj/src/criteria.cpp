#include "netsel/criteria.hpp"

namespace netsel {

const std::string& to_string(Criterion c) {
    static const std::string names[] = {"CB", "S", "AB", "D", "J", "L", "H"};
    return names[static_cast<std::size_t>(c)];
}

std::optional<Criterion> criterion_from_string(const std::string& s) {
    for (Criterion c : kAllCriteria)
        if (to_string(c) == s) return c;
    return std::nullopt;
}

CriterionDirection direction_of(Criterion c) {
    switch (c) {
        case Criterion::S:
        case Criterion::AB:
        case Criterion::H:
            return CriterionDirection::Benefit;
        case Criterion::CB:
        case Criterion::D:
        case Criterion::J:
        case Criterion::L:
            return CriterionDirection::Cost;
    }
    return CriterionDirection::Benefit;  // unreachable
}

std::vector<Criterion> leaf_criteria(bool include_history) {
    std::vector<Criterion> out = {Criterion::CB, Criterion::S, Criterion::AB,
                                  Criterion::D,  Criterion::J, Criterion::L};
    if (include_history) out.push_back(Criterion::H);
    return out;
}

const std::vector<std::string>& level1_labels() {
    static const std::vector<std::string> labels = {"qos", "security", "cost",
                                                    "history"};
    return labels;
}

std::size_t level1_parent_index(Criterion c) {
    switch (c) {
        case Criterion::AB:
        case Criterion::D:
        case Criterion::J:
        case Criterion::L:
            return 0;  // qos
        case Criterion::S:
            return 1;  // security
        case Criterion::CB:
            return 2;  // cost
        case Criterion::H:
            return 3;  // history
    }
    return 0;  // unreachable
}

const std::vector<std::string>& level2_labels() {
    static const std::vector<std::string> labels = {"AB", "D", "J", "L"};
    return labels;
}

std::optional<std::size_t> level2_index(Criterion c) {
    switch (c) {
        case Criterion::AB: return 0;
        case Criterion::D: return 1;
        case Criterion::J: return 2;
        case Criterion::L: return 3;
        default: return std::nullopt;
    }
}

}  // namespace netsel
