#pragma once

#include <cstdint>
#include <random>

#include "hdc/complex.hpp"

namespace hdc {

/// Uniform double in [0, 1) from the top 53 bits, identical on every platform
/// (std::uniform_real_distribution is not).
double uniform01(std::mt19937_64& rng);

/// Uniform in [lo, hi).
double uniform(std::mt19937_64& rng, double lo, double hi);

/// Complete (k-1)-skeleton on n vertices; each k-subset is kept independently
/// with probability p, in lexicographic order. With thin set, every
/// (k-1)-face that lies in no kept k-face is removed as well.
SimplicialComplex random_complex(int n, int k, double p, std::uint64_t seed, bool thin = false);

/// G(n, p) conditioned on being connected, by rejection.
SimplicialComplex random_connected_graph(int n, double p, std::mt19937_64& rng);

/// A uniformly random permutation of 0..n-1 (Fisher-Yates on uniform01).
OrientationOrder random_order(int n, std::mt19937_64& rng);

}  // namespace hdc
