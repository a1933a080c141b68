#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace netsel {

// Whether larger attribute values are preferable.
enum class CriterionDirection { Benefit, Cost };

// The decision attributes, in decision-matrix column order: cost per byte,
// security, available bandwidth, packet delay, packet jitter, packet loss,
// and the per-network history score.
enum class Criterion { CB, S, AB, D, J, L, H };

inline constexpr std::array<Criterion, 7> kAllCriteria = {
    Criterion::CB, Criterion::S, Criterion::AB, Criterion::D,
    Criterion::J,  Criterion::L, Criterion::H};

const std::string& to_string(Criterion c);
std::optional<Criterion> criterion_from_string(const std::string& s);

// CB/D/J/L are costs, S/AB/H are benefits.
CriterionDirection direction_of(Criterion c);

// Leaf attributes in column order; history last when included.
std::vector<Criterion> leaf_criteria(bool include_history);

// Top-level grouping labels, in order: qos, security, cost, history.
const std::vector<std::string>& level1_labels();

// Index of the leaf's top-level parent within level1_labels().
std::size_t level1_parent_index(Criterion c);

// The qos children {AB, D, J, L}, in order.
const std::vector<std::string>& level2_labels();

// Position among the qos children, if c is one of them.
std::optional<std::size_t> level2_index(Criterion c);

}  // namespace netsel
