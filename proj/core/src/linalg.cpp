#include "ybh/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace ybh {

namespace {

template <class V>
using SRow = std::vector<std::pair<std::size_t, V>>;

// Arithmetic over F_p on native residues; pivot rows are kept monic.
struct PrimeOps {
    using V = std::uint64_t;
    std::uint64_t p;

    V inv(V a) const {
        std::uint64_t r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }

    // r <- r - r[pos] * piv, where piv is monic with lead at r[pos].first.
    void eliminate(SRow<V>& r, const SRow<V>& piv, std::size_t pos) const {
        V f = r[pos].second;
        SRow<V> out;
        out.reserve(r.size() + piv.size());
        out.insert(out.end(), r.begin(), r.begin() + pos);
        std::size_t i = pos, j = 0;
        while (i < r.size() || j < piv.size()) {
            if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
                out.push_back(r[i++]);
            } else {
                V sub = f * piv[j].second % p;
                if (i < r.size() && r[i].first == piv[j].first) {
                    V v = (r[i].second + p - sub) % p;
                    if (v) out.emplace_back(r[i].first, v);
                    ++i;
                } else {
                    out.emplace_back(piv[j].first, (p - sub) % p);
                }
                ++j;
            }
        }
        r.swap(out);
    }

    void normalize(SRow<V>& r) const {
        V li = inv(r.front().second);
        for (auto& e : r) e.second = e.second * li % p;
    }
};

// Fraction-free arithmetic over Z; rows are primitive with positive lead.
struct IntegerOps {
    using V = mpz_class;

    // r <- lead(piv) * r - r[pos] * piv, then divide out the content.
    void eliminate(SRow<V>& r, const SRow<V>& piv, std::size_t pos) const {
        mpz_class a = piv.front().second;
        mpz_class b = r[pos].second;
        mpz_class g = gcd(a, b);
        a /= g;
        b /= g;
        SRow<V> out;
        out.reserve(r.size() + piv.size());
        for (std::size_t i = 0; i < pos; ++i) out.emplace_back(r[i].first, a * r[i].second);
        std::size_t i = pos, j = 0;
        while (i < r.size() || j < piv.size()) {
            if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
                out.emplace_back(r[i].first, a * r[i].second);
                ++i;
            } else if (i < r.size() && r[i].first == piv[j].first) {
                mpz_class v = a * r[i].second - b * piv[j].second;
                if (v != 0) out.emplace_back(r[i].first, std::move(v));
                ++i;
                ++j;
            } else {
                out.emplace_back(piv[j].first, -b * piv[j].second);
                ++j;
            }
        }
        make_primitive(out);
        r.swap(out);
    }

    static void make_primitive(SRow<V>& r) {
        if (r.empty()) return;
        mpz_class g = 0;
        for (const auto& e : r) {
            g = gcd(g, e.second);
            if (g == 1) break;
        }
        if (r.front().second < 0) g = -g;
        if (g != 1)
            for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    }

    void normalize(SRow<V>& r) const { make_primitive(r); }
};

template <class Ops>
class Echelon {
public:
    using V = typename Ops::V;

    Echelon(Ops ops, std::size_t ncols) : ops_(std::move(ops)), pivot_of_col_(ncols, -1) {}

    void reduce(SRow<V>& r) const {
        std::size_t pos = 0;
        while (pos < r.size()) {
            long k = pivot_of_col_[r[pos].first];
            if (k < 0) {
                ++pos;
                continue;
            }
            ops_.eliminate(r, pivots_[k], pos);
        }
    }

    bool insert(SRow<V> r) {
        reduce(r);
        if (r.empty()) return false;
        ops_.normalize(r);
        pivot_of_col_[r.front().first] = static_cast<long>(pivots_.size());
        pivots_.push_back(std::move(r));
        return true;
    }

    std::size_t rank() const { return pivots_.size(); }
    bool full(std::size_t ncols) const { return pivots_.size() == ncols; }

    // Pivot rows sorted by lead, fully back-substituted.
    std::vector<SRow<V>> reduced_rows() {
        std::vector<SRow<V>> rows = pivots_;
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
        std::vector<long> idx(pivot_of_col_.size(), -1);
        for (std::size_t i = 0; i < rows.size(); ++i) idx[rows[i].front().first] = static_cast<long>(i);
        for (std::size_t i = rows.size(); i-- > 0;) {
            auto& r = rows[i];
            std::size_t pos = 1;
            while (pos < r.size()) {
                long k = idx[r[pos].first];
                if (k < 0) {
                    ++pos;
                    continue;
                }
                ops_.eliminate(r, rows[k], pos);
            }
            ops_.normalize(r);
        }
        return rows;
    }

private:
    Ops ops_;
    std::vector<long> pivot_of_col_;
    std::vector<SRow<V>> pivots_;
};

// Row lists of m, restricted to its own columns plus optional extra columns.
std::vector<SparseVector> rows_of(const ExactMatrix& m) {
    std::vector<SparseVector> rows(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [i, v] : m.column(j)) rows[i].emplace_back(j, v);
    return rows;
}

SRow<std::uint64_t> to_prime_row(const SparseVector& r) {
    SRow<std::uint64_t> out;
    out.reserve(r.size());
    for (const auto& [j, v] : r) out.emplace_back(j, v.residue_value());
    return out;
}

SRow<mpz_class> to_integer_row(const SparseVector& r) {
    mpz_class l = 1;
    for (const auto& e : r) l = lcm(l, mpz_class(e.second.rational_value().get_den()));
    SRow<mpz_class> out;
    out.reserve(r.size());
    for (const auto& [j, v] : r) {
        const mpq_class& q = v.rational_value();
        out.emplace_back(j, mpz_class(q.get_num() * (l / q.get_den())));
    }
    return out;
}

// Reduced nonzero rows of the RREF as sparse Scalar rows.
std::vector<SparseVector> reduced_rows(const FieldSpec& k, const std::vector<SparseVector>& rows, std::size_t ncols) {
    std::vector<SparseVector> out;
    if (k.is_rational()) {
        Echelon<IntegerOps> ech(IntegerOps{}, ncols);
        for (const auto& r : rows)
            if (!r.empty()) ech.insert(to_integer_row(r));
        for (auto& r : ech.reduced_rows()) {
            SparseVector s;
            mpz_class lead = r.front().second;
            for (auto& [j, v] : r) s.emplace_back(j, Scalar::rational(v, lead));
            out.push_back(std::move(s));
        }
    } else {
        Echelon<PrimeOps> ech(PrimeOps{k.characteristic()}, ncols);
        for (const auto& r : rows)
            if (!r.empty()) ech.insert(to_prime_row(r));
        for (auto& r : ech.reduced_rows()) {
            SparseVector s;
            for (auto& [j, v] : r) s.emplace_back(j, Scalar::residue(v, k.characteristic()));
            out.push_back(std::move(s));
        }
    }
    return out;
}

void require_vector_field(const Vector& v, const FieldSpec& k) {
    for (const auto& s : v)
        if (s.field() != k) throw InputError("vector field does not match matrix field");
}

}  // namespace

ExactMatrix ExactMatrix::from_rows(const FieldSpec& k, const std::vector<std::vector<Scalar>>& rows,
                                   std::size_t cols) {
    ExactMatrix m(k, rows.size(), cols);
    std::vector<Column> c(cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ArityError("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) {
            if (rows[i][j].field() != k) throw InputError("matrix entry field mismatch");
            if (!rows[i][j].is_zero()) c[j].emplace_back(i, rows[i][j]);
        }
    }
    for (std::size_t j = 0; j < cols; ++j) m.set_column(j, std::move(c[j]));
    return m;
}

ExactMatrix ExactMatrix::from_columns(const FieldSpec& k, std::size_t rows, const std::vector<SparseVector>& cols) {
    ExactMatrix m(k, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const auto& e : cols[j])
            if (e.second.field() != k) throw InputError("matrix entry field mismatch");
        m.set_column(j, cols[j]);
    }
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    auto r = rows_of(*this);
    return from_columns(field_, cols(), r);
}

std::vector<std::vector<Scalar>> ExactMatrix::to_dense() const {
    std::vector<std::vector<Scalar>> out(rows(), std::vector<Scalar>(cols(), Scalar::zero(field_)));
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& [i, v] : column(j)) out[i][j] = v;
    return out;
}

RrefResult rref(const ExactMatrix& m) {
    auto reduced = reduced_rows(m.field(), rows_of(m), m.cols());
    RrefResult res{ExactMatrix(m.field(), m.rows(), m.cols()), {}, reduced.size()};
    std::vector<SparseVector> cols(m.cols());
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        res.pivots.push_back(reduced[i].front().first);
        for (const auto& [j, v] : reduced[i]) cols[j].emplace_back(i, v);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) res.reduced.set_column(j, std::move(cols[j]));
    return res;
}

RrefResult rref(const TruncatedMatrix&) {
    throw UnsupportedRingError("row reduction over k[hbar]/(hbar^m) is not supported: it is not a field");
}

std::size_t rank(const ExactMatrix& m) {
    // Insert whichever side has fewer vectors; rank M = rank M^T.
    bool by_columns = m.cols() < m.rows();
    std::vector<SparseVector> vecs;
    std::size_t len;
    if (by_columns) {
        for (std::size_t j = 0; j < m.cols(); ++j) vecs.push_back(m.column(j));
        len = m.rows();
    } else {
        vecs = rows_of(m);
        len = m.cols();
    }
    const FieldSpec& k = m.field();
    std::size_t limit = std::min(m.rows(), m.cols());
    if (k.is_rational()) {
        Echelon<IntegerOps> ech(IntegerOps{}, len);
        for (const auto& v : vecs) {
            if (!v.empty()) ech.insert(to_integer_row(v));
            if (ech.rank() == limit) break;
        }
        return ech.rank();
    }
    Echelon<PrimeOps> ech(PrimeOps{k.characteristic()}, len);
    for (const auto& v : vecs) {
        if (!v.empty()) ech.insert(to_prime_row(v));
        if (ech.rank() == limit) break;
    }
    return ech.rank();
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
    const FieldSpec& k = m.field();
    auto reduced = reduced_rows(k, rows_of(m), m.cols());
    std::vector<char> is_pivot(m.cols(), 0);
    for (const auto& r : reduced) is_pivot[r.front().first] = 1;
    // Column f of the reduced rows, collected once.
    std::vector<SparseVector> by_col(m.cols());
    for (std::size_t i = 0; i < reduced.size(); ++i)
        for (const auto& [j, v] : reduced[i]) by_col[j].emplace_back(i, v);
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols(), Scalar::zero(k));
        v[f] = Scalar::one(k);
        for (const auto& [i, c] : by_col[f]) v[reduced[i].front().first] = -c;
        basis.push_back(std::move(v));
    }
    return basis;
}

Vector multiply(const ExactMatrix& m, const Vector& v) {
    if (v.size() != m.cols()) throw ArityError("matrix-vector size mismatch");
    require_vector_field(v, m.field());
    Vector out(m.rows(), Scalar::zero(m.field()));
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (v[j].is_zero()) continue;
        for (const auto& [i, c] : m.column(j)) out[i] += c * v[j];
    }
    return out;
}

std::vector<TruncatedScalar> multiply(const TruncatedMatrix& m, const std::vector<TruncatedScalar>& v) {
    if (v.size() != m.cols()) throw ArityError("matrix-vector size mismatch");
    std::vector<TruncatedScalar> out(m.rows(), m.zero());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [i, c] : m.column(j)) out[i] += c * v[j];
    return out;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw ArityError("matrix product size mismatch");
    if (a.field() != b.field()) throw InputError("matrix product field mismatch");
    ExactMatrix c(a.field(), a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        Vector acc(a.rows(), Scalar::zero(a.field()));
        for (const auto& [l, bv] : b.column(j))
            for (const auto& [i, av] : a.column(l)) acc[i] += av * bv;
        c.set_column(j, to_sparse(acc));
    }
    return c;
}

std::vector<SolveResult> solve_linear_many(const ExactMatrix& m, const std::vector<Vector>& rhs) {
    const FieldSpec& k = m.field();
    const std::size_t n = m.cols();
    for (const auto& b : rhs) {
        if (b.size() != m.rows()) throw ArityError("right-hand side has wrong length");
        require_vector_field(b, k);
    }
    auto rows = rows_of(m);
    for (std::size_t t = 0; t < rhs.size(); ++t)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!rhs[t][i].is_zero()) rows[i].emplace_back(n + t, rhs[t][i]);
    auto reduced = reduced_rows(k, rows, n + rhs.size());

    std::vector<SolveResult> out(rhs.size());
    for (std::size_t t = 0; t < rhs.size(); ++t) {
        SolveResult& res = out[t];
        res.solvable = true;
        res.solution.assign(n, Scalar::zero(k));
        for (const auto& r : reduced) {
            std::size_t lead = r.front().first;
            Scalar entry = Scalar::zero(k);
            for (const auto& [j, v] : r)
                if (j == n + t) entry = v;
            if (lead >= n) {
                if (!entry.is_zero()) res.solvable = false;
            } else {
                res.solution[lead] = entry;
            }
        }
        if (res.solvable) {
            if (multiply(m, res.solution) != rhs[t]) throw InternalError("linear solve produced a wrong solution");
            continue;
        }
        res.solution.clear();
        // y with M^T y = 0 and b.y = 1.
        std::vector<SparseVector> at(n + 1);
        for (std::size_t j = 0; j < n; ++j) at[j] = m.column(j);
        at[n] = to_sparse(rhs[t]);
        ExactMatrix a(k, n + 1, m.rows());
        std::vector<SparseVector> acols(m.rows());
        for (std::size_t i = 0; i <= n; ++i)
            for (const auto& [j, v] : at[i]) acols[j].emplace_back(i, v);
        for (std::size_t j = 0; j < m.rows(); ++j) a.set_column(j, std::move(acols[j]));
        Vector e(n + 1, Scalar::zero(k));
        e[n] = Scalar::one(k);
        auto cert = solve_linear_many(a, {e});
        if (!cert[0].solvable) throw InternalError("no certificate for an inconsistent system");
        res.certificate = std::move(cert[0].solution);
    }
    return out;
}

SolveResult solve_linear(const ExactMatrix& m, const Vector& b) { return solve_linear_many(m, {b}).front(); }

SpanResult in_span(const FieldSpec& k, const std::vector<Vector>& basis, const Vector& v) {
    std::vector<SparseVector> cols;
    for (const auto& b : basis) {
        if (b.size() != v.size()) throw ArityError("in_span: vectors have different lengths");
        cols.push_back(to_sparse(b));
    }
    auto m = ExactMatrix::from_columns(k, v.size(), cols);
    auto s = solve_linear(m, v);
    return SpanResult{s.solvable, std::move(s.solution)};
}

Vector to_dense(const SparseVector& v, std::size_t n, const FieldSpec& k) {
    Vector out(n, Scalar::zero(k));
    for (const auto& [i, s] : v) {
        if (i >= n) throw InputError("sparse index out of range");
        out[i] = s;
    }
    return out;
}

SparseVector to_sparse(const Vector& v) {
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.emplace_back(i, v[i]);
    return out;
}

}  // namespace ybh
