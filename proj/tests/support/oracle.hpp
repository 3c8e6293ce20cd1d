#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "ybh/fixtures.hpp"
#include "ybh/linalg.hpp"
#include "ybh/tensor_map.hpp"

namespace ybh::test {

// Independent rank oracles: plain dense elimination, no shared code with linalg.
std::size_t dense_rank(const ExactMatrix& m);
// Same over F_p with machine integers; requires a prime field.
std::size_t dense_rank_mod_p(const ExactMatrix& m);

inline Scalar S(const FieldSpec& k, long n) { return Scalar::from_int(k, n); }
inline Scalar Q(long n, long d = 1) { return Scalar::rational(n, d); }

// Map given by (row, col, value) triples.
TensorMap map_of(const FieldSpec& k, std::size_t dim, int in, int out,
                 std::initializer_list<std::tuple<std::size_t, std::size_t, long>> entries);

// Braided fixtures defined over k with dim <= max_dim.
std::vector<std::pair<std::string, BraidedAlgebra>> fixtures_up_to(const FieldSpec& k, std::size_t max_dim);

std::string fixture_path(const std::string& file);

}  // namespace ybh::test
