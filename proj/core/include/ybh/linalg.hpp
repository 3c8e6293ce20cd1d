#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ybh/errors.hpp"
#include "ybh/scalar.hpp"

namespace ybh {

using Vector = std::vector<Scalar>;
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

// Column-sparse matrix over a coefficient type with a designated zero.
template <class Coeff>
class BasicMatrix {
public:
    using Column = std::vector<std::pair<std::size_t, Coeff>>;

    BasicMatrix(std::size_t rows, std::size_t cols, Coeff zero)
        : rows_(rows), zero_(std::move(zero)), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }
    const Coeff& zero() const { return zero_; }
    const Column& column(std::size_t j) const { return cols_.at(j); }

    // Entries must be sorted by row; zeros are dropped.
    void set_column(std::size_t j, Column entries) {
        if (j >= cols_.size()) throw InputError("matrix column out of range");
        Column kept;
        kept.reserve(entries.size());
        for (auto& e : entries) {
            if (e.first >= rows_) throw InputError("matrix row out of range");
            if (!kept.empty() && e.first <= kept.back().first) throw InputError("column entries must be sorted");
            if (!e.second.is_zero()) kept.push_back(std::move(e));
        }
        cols_[j] = std::move(kept);
    }

    Coeff at(std::size_t i, std::size_t j) const {
        if (i >= rows_) throw InputError("matrix row out of range");
        for (const auto& e : cols_.at(j))
            if (e.first == i) return e.second;
        return zero_;
    }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& c : cols_) n += c.size();
        return n;
    }

    bool is_zero() const { return nnz() == 0; }

    friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_.size() != b.cols_.size()) return false;
        for (std::size_t j = 0; j < a.cols_.size(); ++j) {
            if (a.cols_[j].size() != b.cols_[j].size()) return false;
            for (std::size_t i = 0; i < a.cols_[j].size(); ++i)
                if (a.cols_[j][i].first != b.cols_[j][i].first || !(a.cols_[j][i].second == b.cols_[j][i].second))
                    return false;
        }
        return true;
    }

private:
    std::size_t rows_;
    Coeff zero_;
    std::vector<Column> cols_;
};

using TruncatedMatrix = BasicMatrix<TruncatedScalar>;

class ExactMatrix : public BasicMatrix<Scalar> {
public:
    ExactMatrix(const FieldSpec& k, std::size_t rows, std::size_t cols)
        : BasicMatrix<Scalar>(rows, cols, Scalar::zero(k)), field_(k) {}

    static ExactMatrix from_rows(const FieldSpec& k, const std::vector<std::vector<Scalar>>& rows,
                                 std::size_t cols);
    static ExactMatrix from_columns(const FieldSpec& k, std::size_t rows, const std::vector<SparseVector>& cols);

    const FieldSpec& field() const { return field_; }
    ExactMatrix transpose() const;
    std::vector<std::vector<Scalar>> to_dense() const;

private:
    FieldSpec field_;
};

struct RrefResult {
    ExactMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

// Reduced row echelon form. Over Q the forward pass is fraction-free.
RrefResult rref(const ExactMatrix& m);
// Elimination needs a field; k[hbar]/(hbar^m) is not one.
[[noreturn]] RrefResult rref(const TruncatedMatrix& m);

std::size_t rank(const ExactMatrix& m);

// One vector per free column, in increasing column order.
std::vector<Vector> kernel_basis(const ExactMatrix& m);

struct SolveResult {
    bool solvable = false;
    Vector solution;     // particular solution with free variables zero
    Vector certificate;  // if unsolvable: y with y^T M = 0 and y.b = 1
};

SolveResult solve_linear(const ExactMatrix& m, const Vector& b);
std::vector<SolveResult> solve_linear_many(const ExactMatrix& m, const std::vector<Vector>& rhs);

struct SpanResult {
    bool member = false;
    Vector coordinates;
};

// Whether v lies in the span of the given vectors (all of length v.size()).
SpanResult in_span(const FieldSpec& k, const std::vector<Vector>& basis, const Vector& v);

Vector multiply(const ExactMatrix& m, const Vector& v);
std::vector<TruncatedScalar> multiply(const TruncatedMatrix& m, const std::vector<TruncatedScalar>& v);
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);

Vector to_dense(const SparseVector& v, std::size_t n, const FieldSpec& k);
SparseVector to_sparse(const Vector& v);

}  // namespace ybh
