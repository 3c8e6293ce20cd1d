#pragma once

#include <cstdint>
#include <random>

#include "ybh/cochains.hpp"

namespace ybh {

// All randomized suites draw from one seeded std::mt19937_64.
using Rng = std::mt19937_64;

// Uniform residue over F_p; over Q a small fraction n/m with |n| <= 9, 1 <= m <= 4.
Scalar random_scalar(Rng& rng, const FieldSpec& k);
// Each entry nonzero with probability `density`, then drawn by random_scalar.
TensorMap random_map(Rng& rng, const FieldSpec& k, std::size_t dim, int in_arity, int out_arity,
                     double density = 1.0);
Cochain2 random_cochain2(Rng& rng, const FieldSpec& k, std::size_t dim, double density = 1.0);

}  // namespace ybh
