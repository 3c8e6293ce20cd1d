#include "ybh/tensor_map.hpp"

#include <algorithm>

#include "accumulator.hpp"
#include "ybh/errors.hpp"

namespace ybh {

namespace {

constexpr std::size_t kMaxGridSide = std::size_t(1) << 31;

void require_field(const Scalar& s, const FieldSpec& k) {
    if (s.field() != k) throw InputError("scalar field " + s.field().name() + " does not match map field " + k.name());
}

}  // namespace

std::size_t ipow(std::size_t d, int n) {
    if (n < 0) throw ArityError("negative arity");
    std::size_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (d != 0 && r > kMaxGridSide / d) throw ResourceError("tensor power exceeds 2^31 basis elements");
        r *= d;
    }
    return r;
}

std::size_t encode(std::span<const std::size_t> idx, std::size_t d) {
    std::size_t r = 0;
    for (auto i : idx) {
        if (i >= d) throw InputError("basis index " + std::to_string(i) + " out of range for dimension " + std::to_string(d));
        r = r * d + i;
    }
    return r;
}

std::vector<std::size_t> decode(std::size_t index, std::size_t d, int n) {
    std::vector<std::size_t> idx(n);
    for (int t = n - 1; t >= 0; --t) {
        idx[t] = index % d;
        index /= d;
    }
    return idx;
}

TensorMap::TensorMap(const FieldSpec& k, std::size_t dim, int in_arity, int out_arity)
    : field_(k), dim_(dim), in_(in_arity), out_(out_arity) {
    if (dim == 0) throw InputError("dimension must be positive");
    rows_ = ipow(dim, out_arity);
    cols_.resize(ipow(dim, in_arity));
}

TensorMap TensorMap::identity(const FieldSpec& k, std::size_t dim, int arity) {
    TensorMap f(k, dim, arity, arity);
    Scalar one = Scalar::one(k);
    for (std::size_t j = 0; j < f.cols(); ++j) f.cols_[j].push_back({static_cast<std::uint32_t>(j), one});
    return f;
}

TensorMap TensorMap::from_dense(const FieldSpec& k, std::size_t dim, int in_arity, int out_arity,
                                const std::vector<std::vector<Scalar>>& rows) {
    TensorMap f(k, dim, in_arity, out_arity);
    if (rows.size() != f.rows()) throw ArityError("dense grid has wrong number of rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != f.cols()) throw ArityError("dense grid has wrong number of columns");
        for (std::size_t j = 0; j < f.cols(); ++j) {
            require_field(rows[i][j], k);
            if (!rows[i][j].is_zero()) f.cols_[j].push_back({static_cast<std::uint32_t>(i), rows[i][j]});
        }
    }
    return f;
}

TensorMap TensorMap::permutation(const FieldSpec& k, std::size_t dim, const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<int> seen(n, 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]++) throw InputError("not a permutation");
    }
    TensorMap f(k, dim, n, n);
    Scalar one = Scalar::one(k);
    std::vector<std::size_t> out(n);
    for (std::size_t j = 0; j < f.cols(); ++j) {
        auto in = decode(j, dim, n);
        for (int t = 0; t < n; ++t) out[t] = in[perm[t]];
        f.cols_[j].push_back({static_cast<std::uint32_t>(encode(out, dim)), one});
    }
    return f;
}

TensorMap TensorMap::unit_entry(const FieldSpec& k, std::size_t dim, int in_arity, int out_arity,
                                std::size_t row, std::size_t col) {
    TensorMap f(k, dim, in_arity, out_arity);
    f.set(row, col, Scalar::one(k));
    return f;
}

Scalar TensorMap::at(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols()) throw InputError("map entry out of range");
    const auto& c = cols_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.row < r; });
    if (it != c.end() && it->row == row) return it->value;
    return Scalar::zero(field_);
}

void TensorMap::set(std::size_t row, std::size_t col, const Scalar& value) {
    if (row >= rows_ || col >= cols()) throw InputError("map entry out of range");
    require_field(value, field_);
    auto& c = cols_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.row < r; });
    bool present = it != c.end() && it->row == row;
    if (value.is_zero()) {
        if (present) c.erase(it);
    } else if (present) {
        it->value = value;
    } else {
        c.insert(it, Entry{static_cast<std::uint32_t>(row), value});
    }
}

void TensorMap::add(std::size_t row, std::size_t col, const Scalar& value) { set(row, col, at(row, col) + value); }

void TensorMap::set_column(std::size_t col, Column entries) {
    if (col >= cols()) throw InputError("column out of range");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].row >= rows_) throw InputError("row out of range");
        if (i && entries[i].row <= entries[i - 1].row) throw InputError("column entries must be strictly increasing");
        require_field(entries[i].value, field_);
    }
    std::erase_if(entries, [](const Entry& e) { return e.value.is_zero(); });
    cols_[col] = std::move(entries);
}

std::size_t TensorMap::nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

bool TensorMap::is_zero() const {
    for (const auto& c : cols_)
        if (!c.empty()) return false;
    return true;
}

void TensorMap::require_same_shape(const TensorMap& o, const char* op) const {
    if (field_ != o.field_) throw InputError(std::string(op) + ": field mismatch");
    if (dim_ != o.dim_ || in_ != o.in_ || out_ != o.out_)
        throw ArityError(std::string(op) + ": maps have different shapes");
}

TensorMap TensorMap::operator-() const {
    TensorMap r(*this);
    for (auto& c : r.cols_)
        for (auto& e : c) e.value = -e.value;
    return r;
}

namespace {

TensorMap::Column merge(const TensorMap::Column& a, const TensorMap::Column& b, bool subtract) {
    TensorMap::Column out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].row < a[i].row) {
            out.push_back({b[j].row, subtract ? -b[j].value : b[j].value});
            ++j;
        } else {
            Scalar v = subtract ? a[i].value - b[j].value : a[i].value + b[j].value;
            if (!v.is_zero()) out.push_back({a[i].row, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

TensorMap& TensorMap::operator+=(const TensorMap& o) {
    require_same_shape(o, "add");
    for (std::size_t j = 0; j < cols_.size(); ++j)
        if (!o.cols_[j].empty()) cols_[j] = merge(cols_[j], o.cols_[j], false);
    return *this;
}

TensorMap& TensorMap::operator-=(const TensorMap& o) {
    require_same_shape(o, "subtract");
    for (std::size_t j = 0; j < cols_.size(); ++j)
        if (!o.cols_[j].empty()) cols_[j] = merge(cols_[j], o.cols_[j], true);
    return *this;
}

TensorMap& TensorMap::operator*=(const Scalar& c) {
    require_field(c, field_);
    if (c.is_zero()) {
        for (auto& col : cols_) col.clear();
        return *this;
    }
    for (auto& col : cols_)
        for (auto& e : col) e.value *= c;
    return *this;
}

bool operator==(const TensorMap& a, const TensorMap& b) {
    if (a.field_ != b.field_ || a.dim_ != b.dim_ || a.in_ != b.in_ || a.out_ != b.out_) return false;
    for (std::size_t j = 0; j < a.cols_.size(); ++j) {
        const auto& x = a.cols_[j];
        const auto& y = b.cols_[j];
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i].row != y[i].row || !(x[i].value == y[i].value)) return false;
    }
    return true;
}

TensorMap TensorMap::regroup(std::size_t dim, int in_arity, int out_arity) const {
    TensorMap r(field_, dim, in_arity, out_arity);
    if (r.rows_ != rows_ || r.cols() != cols()) throw ArityError("regroup: grid shapes differ");
    r.cols_ = cols_;
    return r;
}

std::vector<std::vector<Scalar>> TensorMap::to_dense() const {
    std::vector<std::vector<Scalar>> out(rows_, std::vector<Scalar>(cols(), Scalar::zero(field_)));
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& e : cols_[j]) out[e.row][j] = e.value;
    return out;
}

TensorMap compose(const TensorMap& f, const TensorMap& g) {
    if (f.field() != g.field()) throw InputError("compose: field mismatch");
    if (f.dim() != g.dim()) throw ArityError("compose: dimension mismatch");
    if (f.in_arity() != g.out_arity())
        throw ArityError("compose: f takes " + std::to_string(f.in_arity()) + " factors but g yields " +
                         std::to_string(g.out_arity()));
    TensorMap h(f.field(), f.dim(), g.in_arity(), f.out_arity());
    detail::Accumulator acc(f.field(), f.rows());
    TensorMap::Column col;
    for (std::size_t j = 0; j < g.cols(); ++j) {
        const auto& gc = g.column(j);
        if (gc.empty()) continue;
        for (const auto& ge : gc)
            for (const auto& fe : f.column(ge.row)) acc.add_product(fe.row, fe.value, ge.value);
        acc.drain(col);
        h.set_column(j, col);
    }
    return h;
}

TensorMap tensor(const TensorMap& f, const TensorMap& g) {
    if (f.field() != g.field()) throw InputError("tensor: field mismatch");
    if (f.dim() != g.dim()) throw ArityError("tensor: dimension mismatch");
    TensorMap h(f.field(), f.dim(), f.in_arity() + g.in_arity(), f.out_arity() + g.out_arity());
    const std::size_t gr = g.rows(), gcn = g.cols();
    for (std::size_t j1 = 0; j1 < f.cols(); ++j1) {
        const auto& fc = f.column(j1);
        if (fc.empty()) continue;
        for (std::size_t j2 = 0; j2 < gcn; ++j2) {
            const auto& gc = g.column(j2);
            if (gc.empty()) continue;
            TensorMap::Column col;
            col.reserve(fc.size() * gc.size());
            for (const auto& a : fc)
                for (const auto& b : gc)
                    col.push_back({static_cast<std::uint32_t>(a.row * gr + b.row), a.value * b.value});
            h.set_column(j1 * gcn + j2, std::move(col));
        }
    }
    return h;
}

TensorMap linear_combination(const std::vector<std::pair<Scalar, TensorMap>>& terms) {
    if (terms.empty()) throw InputError("linear_combination of no terms");
    const TensorMap& first = terms.front().second;
    TensorMap h(first.field(), first.dim(), first.in_arity(), first.out_arity());
    for (const auto& [c, f] : terms) {
        if (f.field() != first.field() || f.dim() != first.dim() || f.in_arity() != first.in_arity() ||
            f.out_arity() != first.out_arity())
            throw ArityError("linear_combination: terms have different shapes");
        require_field(c, first.field());
    }
    detail::Accumulator acc(first.field(), first.rows());
    TensorMap::Column col;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        bool any = false;
        for (const auto& [c, f] : terms) {
            if (c.is_zero()) continue;
            for (const auto& e : f.column(j)) {
                acc.add_product(e.row, c, e.value);
                any = true;
            }
        }
        if (!any) continue;
        acc.drain(col);
        h.set_column(j, col);
    }
    return h;
}

std::vector<Scalar> flatten(const TensorMap& f) {
    std::vector<Scalar> out(f.rows() * f.cols(), Scalar::zero(f.field()));
    for (std::size_t j = 0; j < f.cols(); ++j)
        for (const auto& e : f.column(j)) out[e.row * f.cols() + j] = e.value;
    return out;
}

std::vector<std::pair<std::size_t, Scalar>> flatten_sparse(const TensorMap& f) {
    std::vector<std::pair<std::size_t, Scalar>> out;
    out.reserve(f.nnz());
    for (std::size_t j = 0; j < f.cols(); ++j)
        for (const auto& e : f.column(j)) out.emplace_back(e.row * f.cols() + j, e.value);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

TensorMap unflatten(std::span<const Scalar> values, const FieldSpec& k, std::size_t dim, int in_arity,
                    int out_arity) {
    TensorMap f(k, dim, in_arity, out_arity);
    if (values.size() != f.rows() * f.cols()) throw ArityError("unflatten: wrong vector length");
    const std::size_t nc = f.cols();
    std::vector<TensorMap::Column> cols(nc);
    for (std::size_t pos = 0; pos < values.size(); ++pos) {
        if (values[pos].is_zero()) continue;
        require_field(values[pos], k);
        cols[pos % nc].push_back({static_cast<std::uint32_t>(pos / nc), values[pos]});
    }
    for (std::size_t j = 0; j < nc; ++j)
        if (!cols[j].empty()) f.set_column(j, std::move(cols[j]));
    return f;
}

TensorMap reverse_factors(const TensorMap& f) {
    auto rev = [&](int n) {
        std::vector<int> perm(n);
        for (int t = 0; t < n; ++t) perm[t] = n - 1 - t;
        return TensorMap::permutation(f.field(), f.dim(), perm);
    };
    return compose(rev(f.out_arity()), f, rev(f.in_arity()));
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const TensorMap& f, const TensorMap& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols()) throw ArityError("first_difference: shapes differ");
    for (std::size_t j = 0; j < f.cols(); ++j) {
        const auto& a = f.column(j);
        const auto& b = g.column(j);
        std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i].row != b[i].row) return std::make_pair(j, std::size_t(std::min(a[i].row, b[i].row)));
            if (!(a[i].value == b[i].value)) return std::make_pair(j, std::size_t(a[i].row));
        }
        if (a.size() > n) return std::make_pair(j, std::size_t(a[n].row));
        if (b.size() > n) return std::make_pair(j, std::size_t(b[n].row));
    }
    return std::nullopt;
}

}  // namespace ybh
