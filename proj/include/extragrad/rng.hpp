#pragma once

#include <cstdint>
#include <random>

#include "extragrad/core.hpp"

namespace extragrad {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

inline Vector sample_gaussian(Rng& rng, std::size_t d, double scale = 1.0) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = scale * n(rng);
    return v;
}

// Uniform draw from the box [-halfwidth, halfwidth]^d, the default
// sampling domain for operator audits.
inline Vector sample_box(Rng& rng, std::size_t d, double halfwidth) {
    std::uniform_real_distribution<double> u(-halfwidth, halfwidth);
    Vector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = u(rng);
    return v;
}

inline double sample_uniform01(Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return u(rng);
}

}  // namespace extragrad
