#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ybh/scalar.hpp"

namespace ybh {

// d^n with overflow and size checks.
std::size_t ipow(std::size_t d, int n);

// Multi-index <-> linear index; the first tensor factor is most significant.
std::size_t encode(std::span<const std::size_t> idx, std::size_t d);
std::vector<std::size_t> decode(std::size_t index, std::size_t d, int n);

// A linear map V^{(x)n} -> V^{(x)k} as a d^k x d^n grid (rows = outputs).
// Storage is column-sparse; absent entries are zero.
class TensorMap {
public:
    struct Entry {
        std::uint32_t row;
        Scalar value;
    };
    using Column = std::vector<Entry>;

    TensorMap(const FieldSpec& k, std::size_t dim, int in_arity, int out_arity);

    static TensorMap identity(const FieldSpec& k, std::size_t dim, int arity = 1);
    static TensorMap from_dense(const FieldSpec& k, std::size_t dim, int in_arity, int out_arity,
                                const std::vector<std::vector<Scalar>>& rows);
    // e_{i_0..i_{n-1}} -> e_{i_{perm[0]}..i_{perm[n-1]}}.
    static TensorMap permutation(const FieldSpec& k, std::size_t dim, const std::vector<int>& perm);
    static TensorMap swap(const FieldSpec& k, std::size_t dim) { return permutation(k, dim, {1, 0}); }
    static TensorMap unit_entry(const FieldSpec& k, std::size_t dim, int in_arity, int out_arity,
                                std::size_t row, std::size_t col);

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    int in_arity() const { return in_; }
    int out_arity() const { return out_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }

    Scalar at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, const Scalar& value);
    void add(std::size_t row, std::size_t col, const Scalar& value);
    const Column& column(std::size_t col) const { return cols_[col]; }
    void set_column(std::size_t col, Column entries);

    std::size_t nnz() const;
    bool is_zero() const;

    TensorMap operator-() const;
    TensorMap& operator+=(const TensorMap& o);
    TensorMap& operator-=(const TensorMap& o);
    TensorMap& operator*=(const Scalar& c);
    friend TensorMap operator+(TensorMap a, const TensorMap& b) { return a += b; }
    friend TensorMap operator-(TensorMap a, const TensorMap& b) { return a -= b; }
    friend TensorMap operator*(const Scalar& c, TensorMap a) { return a *= c; }
    friend bool operator==(const TensorMap& a, const TensorMap& b);

    // Same grid read with a different (dim, arities); requires equal grid shape.
    TensorMap regroup(std::size_t dim, int in_arity, int out_arity) const;
    std::vector<std::vector<Scalar>> to_dense() const;

private:
    void require_same_shape(const TensorMap& o, const char* op) const;

    FieldSpec field_;
    std::size_t dim_;
    int in_;
    int out_;
    std::size_t rows_;
    std::vector<Column> cols_;
};

// f after g.
TensorMap compose(const TensorMap& f, const TensorMap& g);
template <class... Rest>
TensorMap compose(const TensorMap& f, const TensorMap& g, const Rest&... rest) {
    return compose(f, compose(g, rest...));
}

TensorMap tensor(const TensorMap& f, const TensorMap& g);
template <class... Rest>
TensorMap tensor(const TensorMap& f, const TensorMap& g, const Rest&... rest) {
    return tensor(tensor(f, g), rest...);
}

inline TensorMap identity_map(const FieldSpec& k, std::size_t dim, int arity) {
    return TensorMap::identity(k, dim, arity);
}
inline TensorMap tensor_product(const TensorMap& f, const TensorMap& g) { return tensor(f, g); }

TensorMap linear_combination(const std::vector<std::pair<Scalar, TensorMap>>& terms);

// Row-major linearization: position row * cols + col.
std::vector<Scalar> flatten(const TensorMap& f);
std::vector<std::pair<std::size_t, Scalar>> flatten_sparse(const TensorMap& f);
TensorMap unflatten(std::span<const Scalar> values, const FieldSpec& k, std::size_t dim, int in_arity,
                    int out_arity);

// rev o f o rev, where rev reverses the order of tensor factors.
TensorMap reverse_factors(const TensorMap& f);

// First (col, row) in lexicographic order where f and g differ.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const TensorMap& f, const TensorMap& g);

}  // namespace ybh
