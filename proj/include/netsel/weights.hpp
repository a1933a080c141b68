#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace netsel {

// Nonnegative priority weights that sum to one. Labels are optional; when
// present they name the weighted elements (criteria or networks).
struct WeightVector {
    std::vector<double> weights;
    std::vector<std::string> labels;

    // Validates the invariants (sum 1 within 1e-10, entries >= 0, label
    // count empty or matching) and returns the vector.
    static WeightVector checked(std::vector<double> weights,
                                std::vector<std::string> labels = {});

    std::size_t size() const { return weights.size(); }
    double operator[](std::size_t i) const { return weights[i]; }
    std::optional<std::size_t> index_of(const std::string& label) const;
};

}  // namespace netsel
