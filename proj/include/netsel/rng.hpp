#pragma once

#include <cstdint>
#include <random>

namespace netsel {

// Independent sub-seed for the `index`-th stream of a master seed
// (splitmix64 of master + index * odd constant).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Deterministic uniform sampling on top of mt19937_64. The mapping from
// raw engine output to doubles is fixed here so that results do not depend
// on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform double in [lo, hi); returns lo exactly when lo == hi.
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    double unit() { return uniform(0.0, 1.0); }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::mt19937_64 engine_;
};

}  // namespace netsel
