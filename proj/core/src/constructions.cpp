#include "ybh/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "ybh/errors.hpp"

namespace ybh {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
    const std::size_t n = table_.size();
    if (n == 0) throw InputError("group must be nonempty");
    for (const auto& row : table_) {
        if (row.size() != n) throw InputError("Cayley table is not square");
        for (auto v : row)
            if (v >= n) throw InputError("Cayley table entry out of range");
    }
    if (labels_.empty())
        for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    if (labels_.size() != n) throw InputError("group label count does not match order");

    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw ValidationError("group identity", {}, "Cayley table has no identity element");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw ValidationError("group associativity", {a, b, c}, "Cayley table is not associative");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
        if (inverse_[a] == n) throw ValidationError("group inverse", {a}, "element without inverse");
    }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({{0}}, {"e"}); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw InputError("cyclic group order must be positive");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        labels.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    if (n == 0 || n > 5) throw InputError("symmetric group supported for 1 <= n <= 5");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::vector<std::size_t>& q) {
        return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<std::size_t>> t(perms.size(), std::vector<std::size_t>(perms.size()));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < perms.size(); ++a) {
        std::string l;
        for (auto v : perms[a]) l += std::to_string(v);
        labels.push_back(l);
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::vector<std::size_t> c(n);
            for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = index_of(c);
        }
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const std::size_t m = h.order(), n = g.order() * m;
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back("(" + g.labels()[a / m] + "," + h.labels()[a % m] + ")");
        for (std::size_t b = 0; b < n; ++b) t[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = 0; b < order(); ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

namespace {

struct UnionIndex {
    std::vector<std::size_t> component, offset;

    explicit UnionIndex(const std::vector<FiniteGroup>& comps) {
        std::size_t off = 0;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            offset.push_back(off);
            for (std::size_t i = 0; i < comps[c].order(); ++i) component.push_back(c);
            off += comps[c].order();
        }
    }
    std::size_t size() const { return component.size(); }
};

}  // namespace

CheckResult check_mcq_table(const std::vector<FiniteGroup>& comps, const std::vector<std::vector<std::size_t>>& star) {
    UnionIndex u(comps);
    const std::size_t n = u.size();
    CheckResult r;
    if (star.size() != n) throw InputError("star table has wrong size");
    for (const auto& row : star) {
        if (row.size() != n) throw InputError("star table is not square");
        for (auto v : row)
            if (v >= n) throw InputError("star table entry out of range");
    }
    auto fail = [&](const char* axiom, std::vector<std::size_t> w) {
        r.passed = false;
        r.axiom = axiom;
        r.witness = std::move(w);
        return r;
    };
    auto same = [&](std::size_t a, std::size_t b) { return u.component[a] == u.component[b]; };
    auto mul = [&](std::size_t a, std::size_t b) {
        std::size_t c = u.component[a], o = u.offset[c];
        return o + comps[c].mul(a - o, b - o);
    };
    auto inv = [&](std::size_t a) {
        std::size_t c = u.component[a], o = u.offset[c];
        return o + comps[c].inv(a - o);
    };

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (same(a, b) && star[a][b] != mul(mul(inv(b), a), b)) return fail("MCQ conjugation", {a, b});
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t c = 0; c < comps.size(); ++c) {
            std::size_t e = u.offset[c] + comps[c].identity();
            if (star[x][e] != x) return fail("MCQ identity action", {x, e});
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (same(a, b) && star[x][mul(a, b)] != star[star[x][a]][b]) return fail("MCQ product action", {x, a, b});
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (star[star[x][y]][z] != star[star[x][z]][star[y][z]])
                    return fail("MCQ self-distributivity", {x, y, z});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!same(a, b)) continue;
            for (std::size_t x = 0; x < n; ++x) {
                std::size_t ax = star[a][x], bx = star[b][x];
                if (!same(ax, bx) || star[mul(a, b)][x] != mul(ax, bx)) return fail("MCQ product compatibility", {a, b, x});
            }
        }
    r.axiom = "MCQ";
    return r;
}

MCQ::MCQ(std::vector<FiniteGroup> components, std::vector<std::vector<std::size_t>> star)
    : MCQ(std::move(components), std::move(star), true) {}

MCQ::MCQ(std::vector<FiniteGroup> components, std::vector<std::vector<std::size_t>> star, bool validate)
    : components_(std::move(components)), star_(std::move(star)) {
    if (components_.empty()) throw InputError("MCQ needs at least one component");
    UnionIndex u(components_);
    component_ = u.component;
    offset_ = u.offset;
    if (validate) {
        auto c = check_mcq_table(components_, star_);
        if (!c.passed) throw ValidationError(c.axiom, c.witness, "invalid MCQ: " + c.describe());
    }
}

CheckResult check_mcq(const MCQ& q) { return check_mcq_table(q.components_, q.star_); }

std::size_t MCQ::mul(std::size_t x, std::size_t y) const {
    if (component_[x] != component_[y]) throw InputError("MCQ product of elements in different components");
    std::size_t c = component_[x], o = offset_[c];
    return o + components_[c].mul(x - o, y - o);
}

MCQ MCQ::conjugation(const FiniteGroup& g) {
    std::vector<std::vector<std::size_t>> star(g.order(), std::vector<std::size_t>(g.order()));
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t y = 0; y < g.order(); ++y) star[x][y] = g.mul(g.mul(g.inv(y), x), y);
    return MCQ({g}, std::move(star));
}

MCQ MCQ::trivial_union(const std::vector<FiniteGroup>& groups) {
    std::size_t n = 0;
    for (const auto& g : groups) {
        if (!g.is_abelian()) throw PreconditionError("trivial-star union needs abelian components");
        n += g.order();
    }
    std::vector<std::vector<std::size_t>> star(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) star[x][y] = x;
    return MCQ(groups, std::move(star));
}

AssociativeAlgebra group_algebra(const FiniteGroup& g, const FieldSpec& k) {
    const std::size_t n = g.order();
    TensorMap mu(k, n, 2, 1);
    Scalar one = Scalar::one(k);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mu.set(g.mul(a, b), a * n + b, one);
    TensorMap unit(k, n, 0, 1);
    unit.set(g.identity(), 0, one);
    return AssociativeAlgebra(std::move(mu), std::move(unit), g.labels());
}

namespace {

BraidedAlgebra verified(BraidedAlgebra b, const std::string& what) {
    for (const auto& c : check_all(b))
        if (!c.passed) throw InternalError(what + " produced a structure failing " + c.describe());
    return b;
}

}  // namespace

BraidedAlgebra from_mcq(const MCQ& q, const FieldSpec& k) {
    const std::size_t n = q.size();
    Scalar one = Scalar::one(k);
    TensorMap mu(k, n, 2, 1), r(k, n, 2, 2);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (q.component_of(x) == q.component_of(y)) mu.set(q.mul(x, y), x * n + y, one);
            r.set(y * n + q.star(x, y), x * n + y, one);
        }
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < q.components().size(); ++c)
        for (const auto& l : q.components()[c].labels())
            labels.push_back(q.components().size() > 1 ? l + "_" + std::to_string(c) : l);
    return verified(BraidedAlgebra(AssociativeAlgebra(std::move(mu), std::nullopt, std::move(labels)),
                                   YangBaxterOperator(std::move(r))),
                    "from_mcq");
}

BraidedAlgebra from_heap(const FiniteGroup& g, const FieldSpec& k) {
    const std::size_t n = g.order(), d = n * n;
    Scalar one = Scalar::one(k);
    TensorMap mu(k, d, 2, 1), r(k, d, 2, 2);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v) {
                    std::size_t p = x * n + y, q = u * n + v, col = p * d + q;
                    if (y == u) mu.set(x * n + v, col, one);
                    std::size_t w = g.mul(g.inv(u), v);
                    std::size_t star = g.mul(x, w) * n + g.mul(y, w);
                    r.set(q * d + star, col, one);
                }
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) labels.push_back("(" + g.labels()[x] + "," + g.labels()[y] + ")");
    return verified(BraidedAlgebra(AssociativeAlgebra(std::move(mu), std::nullopt, std::move(labels)),
                                   YangBaxterOperator(std::move(r))),
                    "from_heap");
}

BraidedAlgebra trivial_braiding(const AssociativeAlgebra& a) {
    auto assoc = check_associative(a);
    if (!assoc.passed) throw PreconditionError("trivial_braiding needs an associative algebra; " + assoc.describe());
    return verified(BraidedAlgebra(a, YangBaxterOperator(TensorMap::swap(a.field(), a.dim()))), "trivial_braiding");
}

AssociativeAlgebra matrix_algebra(std::size_t n, const FieldSpec& k) {
    const std::size_t d = n * n;
    Scalar one = Scalar::one(k);
    TensorMap mu(k, d, 2, 1), unit(k, d, 0, 1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
            for (std::size_t l = 0; l < n; ++l) mu.set(i * n + l, (i * n + j) * d + j * n + l, one);
        }
    for (std::size_t i = 0; i < n; ++i) unit.set(i * n + i, 0, one);
    return AssociativeAlgebra(std::move(mu), std::move(unit), std::move(labels));
}

AssociativeAlgebra dual_numbers(const FieldSpec& k) {
    Scalar one = Scalar::one(k);
    TensorMap mu(k, 2, 2, 1), unit(k, 2, 0, 1);
    mu.set(0, 0, one);  // 1*1 = 1
    mu.set(1, 1, one);  // 1*t = t
    mu.set(1, 2, one);  // t*1 = t
    unit.set(0, 0, one);
    return AssociativeAlgebra(std::move(mu), std::move(unit), {"1", "t"});
}

}  // namespace ybh
