#pragma once

#include "ybh/linalg.hpp"
#include "ybh/tensor_map.hpp"

namespace ybh {

// The coefficient grid of f as a matrix (rows = outputs).
inline ExactMatrix to_matrix(const TensorMap& f) {
    ExactMatrix m(f.field(), f.rows(), f.cols());
    for (std::size_t j = 0; j < f.cols(); ++j) {
        SparseVector c;
        c.reserve(f.column(j).size());
        for (const auto& e : f.column(j)) c.emplace_back(e.row, e.value);
        m.set_column(j, std::move(c));
    }
    return m;
}

inline TensorMap from_matrix(const ExactMatrix& m, std::size_t dim, int in_arity, int out_arity) {
    TensorMap f(m.field(), dim, in_arity, out_arity);
    if (f.rows() != m.rows() || f.cols() != m.cols()) throw ArityError("matrix shape does not match map shape");
    for (std::size_t j = 0; j < m.cols(); ++j) {
        TensorMap::Column c;
        for (const auto& [i, v] : m.column(j)) c.push_back({static_cast<std::uint32_t>(i), v});
        f.set_column(j, std::move(c));
    }
    return f;
}

}  // namespace ybh
