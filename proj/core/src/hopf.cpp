#include "ybh/hopf.hpp"

#include <algorithm>
#include <span>

#include "ybh/cohomology.hpp"
#include "ybh/errors.hpp"
#include "ybh/hbar_map.hpp"
#include "ybh/linalg.hpp"

namespace ybh {

namespace {

TensorMap id(const TensorMap& like, int n = 1) { return TensorMap::identity(like.field(), like.dim(), n); }

void require_shape(const TensorMap& f, std::size_t dim, int in, int out, const char* what) {
    if (f.in_arity() != in || f.out_arity() != out)
        throw ArityError(std::string(what) + " must be a " + std::to_string(in) + "->" + std::to_string(out) +
                         " map, got " + std::to_string(f.in_arity()) + "->" + std::to_string(f.out_arity()));
    if (f.dim() != dim) throw ArityError(std::string(what) + " has the wrong dimension");
}

// 1(x)tau(x)1: a (x) b (x) c (x) d -> a (x) c (x) b (x) d.
TensorMap middle_swap(const TensorMap& like) { return TensorMap::permutation(like.field(), like.dim(), {0, 2, 1, 3}); }

// x (x) y (x) z (x) w -> y (x) z (x) x (x) w.
const std::vector<int> kAdjointShuffle = {1, 2, 0, 3};

// R_H = (1 (x) mu(mu (x) 1)) (1 (x) S (x) 1 (x) 1) sigma (1 (x) (Delta (x) 1) Delta).
template <class M>
M adjoint_composite(const M& mu, const M& delta, const M& s, const M& one, const M& shuffle) {
    return compose(tensor(one, compose(mu, tensor(mu, one))), tensor(one, s, one, one), shuffle,
                   tensor(one, compose(tensor(delta, one), delta)));
}

TensorMap zero_like(const TensorMap& f) { return TensorMap(f.field(), f.dim(), f.in_arity(), f.out_arity()); }

CheckResult is_zero_check(const std::string& axiom, const TensorMap& f) { return compare_maps(axiom, f, zero_like(f)); }

// The three linear conditions on (xi, zeta), in order algebra, coalgebra, compatibility.
std::vector<std::pair<std::string, TensorMap>> cocycle_conditions(const HopfAlgebra& h, const HopfTwoCochain& c) {
    const auto& mu = h.mu();
    const auto& dl = h.delta();
    auto i1 = id(mu);
    auto p = middle_swap(mu);
    auto alg = compose(mu, tensor(c.xi, i1)) + compose(c.xi, tensor(mu, i1)) - compose(mu, tensor(i1, c.xi)) -
               compose(c.xi, tensor(i1, mu));
    auto coalg = compose(tensor(i1, c.zeta), dl) + compose(tensor(i1, dl), c.zeta) - compose(tensor(c.zeta, i1), dl) -
                 compose(tensor(dl, i1), c.zeta);
    auto compat = compose(dl, c.xi) + compose(c.zeta, mu) -
                  compose(tensor(mu, c.xi) + tensor(c.xi, mu), p, tensor(dl, dl)) -
                  compose(tensor(mu, mu), p, tensor(c.zeta, dl) + tensor(dl, c.zeta));
    return {{"hopf_cocycle_algebra", std::move(alg)},
            {"hopf_cocycle_coalgebra", std::move(coalg)},
            {"hopf_cocycle_compatibility", std::move(compat)}};
}

std::vector<std::pair<std::string, TensorMap>> normalization_conditions(const HopfAlgebra& h,
                                                                        const HopfTwoCochain& c) {
    auto i1 = id(h.mu());
    return {{"xi(eta,1)", compose(c.xi, tensor(h.eta(), i1))},
            {"xi(1,eta)", compose(c.xi, tensor(i1, h.eta()))},
            {"(1,eps)zeta", compose(tensor(i1, h.epsilon()), c.zeta)},
            {"(eps,1)zeta", compose(tensor(h.epsilon(), i1), c.zeta)}};
}

void append(SparseVector& out, std::size_t& offset, const TensorMap& f) {
    for (auto& [i, v] : flatten_sparse(f)) out.emplace_back(offset + i, std::move(v));
    offset += f.rows() * f.cols();
}

}  // namespace

HopfAlgebra::HopfAlgebra(TensorMap mu, TensorMap eta, TensorMap delta, TensorMap epsilon, TensorMap antipode,
                         std::vector<std::string> labels)
    : mu_(std::move(mu)), eta_(std::move(eta)), delta_(std::move(delta)), epsilon_(std::move(epsilon)),
      s_(std::move(antipode)), labels_(std::move(labels)) {
    const std::size_t d = mu_.dim();
    require_shape(mu_, d, 2, 1, "multiplication");
    require_shape(eta_, d, 0, 1, "unit");
    require_shape(delta_, d, 1, 2, "comultiplication");
    require_shape(epsilon_, d, 1, 0, "counit");
    require_shape(s_, d, 1, 1, "antipode");
    for (const auto* f : {&eta_, &delta_, &epsilon_, &s_})
        if (f->field() != mu_.field()) throw InputError("Hopf structure maps are over different fields");
    if (!labels_.empty() && labels_.size() != d) throw InputError("basis label count does not match dimension");
    auto tau = TensorMap::swap(mu_.field(), d);
    commutative_ = compose(mu_, tau) == mu_;
    cocommutative_ = compose(tau, delta_) == delta_;
    involutory_ = compose(s_, s_) == id(mu_);
}

HopfCheck check_hopf(const HopfAlgebra& h) {
    HopfCheck out;
    const auto& mu = h.mu();
    const auto& dl = h.delta();
    const auto& eta = h.eta();
    const auto& eps = h.epsilon();
    const auto& s = h.antipode();
    auto i1 = id(mu);
    auto scalar_one = id(mu, 0);
    auto p = middle_swap(mu);
    auto eta_eps = compose(eta, eps);
    const std::vector<CheckResult> checks = {
        compare_maps("associativity", compose(mu, tensor(mu, i1)), compose(mu, tensor(i1, mu))),
        compare_maps("left_unit", compose(mu, tensor(eta, i1)), i1),
        compare_maps("right_unit", compose(mu, tensor(i1, eta)), i1),
        compare_maps("coassociativity", compose(tensor(dl, i1), dl), compose(tensor(i1, dl), dl)),
        compare_maps("left_counit", compose(tensor(eps, i1), dl), i1),
        compare_maps("right_counit", compose(tensor(i1, eps), dl), i1),
        compare_maps("comultiplication_multiplicative", compose(dl, mu), compose(tensor(mu, mu), p, tensor(dl, dl))),
        compare_maps("comultiplication_unital", compose(dl, eta), tensor(eta, eta)),
        compare_maps("counit_multiplicative", compose(eps, mu), tensor(eps, eps)),
        compare_maps("counit_unital", compose(eps, eta), scalar_one),
        compare_maps("left_antipode", compose(mu, tensor(s, i1), dl), eta_eps),
        compare_maps("right_antipode", compose(mu, tensor(i1, s), dl), eta_eps),
    };
    for (const auto& c : checks)
        if (!c.passed) out.violations.push_back(c);
    out.commutative = h.commutative();
    out.cocommutative = h.cocommutative();
    out.involutory = h.involutory();
    return out;
}

namespace {

HopfAlgebra verified(HopfAlgebra h, const std::string& what) {
    auto c = check_hopf(h);
    if (!c.passed()) throw InternalError(what + " produced a structure failing " + c.violations.front().describe());
    return h;
}

}  // namespace

HopfAlgebra group_hopf(const FiniteGroup& g, const FieldSpec& k) {
    const std::size_t n = g.order();
    auto alg = group_algebra(g, k);
    Scalar one = Scalar::one(k);
    TensorMap delta(k, n, 1, 2), eps(k, n, 1, 0), s(k, n, 1, 1);
    for (std::size_t a = 0; a < n; ++a) {
        delta.set(a * n + a, a, one);
        eps.set(0, a, one);
        s.set(g.inv(a), a, one);
    }
    return verified(HopfAlgebra(alg.mu(), *alg.unit(), delta, eps, s, g.labels()), "group_hopf");
}

HopfAlgebra dual_numbers_hopf(const FieldSpec& k) {
    if (k.characteristic() != 2)
        throw PreconditionError("F_2[t]/(t^2) with primitive t is a Hopf algebra only in characteristic 2");
    auto alg = dual_numbers(k);
    Scalar one = Scalar::one(k);
    TensorMap delta(k, 2, 1, 2), eps(k, 2, 1, 0), s(k, 2, 1, 1);
    delta.set(0, 0, one);      // 1 -> 1 (x) 1
    delta.set(1, 1, one);      // t -> 1 (x) t
    delta.set(2, 1, one);      //    + t (x) 1
    eps.set(0, 0, one);
    s.set(0, 0, one);
    s.set(1, 1, -one);
    return verified(HopfAlgebra(alg.mu(), *alg.unit(), delta, eps, s, alg.labels()), "dual_numbers_hopf");
}

YangBaxterOperator adjoint_yb(const HopfAlgebra& h) {
    auto shuffle = TensorMap::permutation(h.field(), h.dim(), kAdjointShuffle);
    auto r = adjoint_composite(h.mu(), h.delta(), h.antipode(), id(h.mu()), shuffle);
    auto yb = check_yb(r);
    if (!yb.passed) throw InternalError("adjoint operator fails " + yb.describe());
    return YangBaxterOperator(std::move(r));
}

BraidedAlgebra braided_from_hopf(const HopfAlgebra& h) {
    BraidedAlgebra b(h.algebra(), adjoint_yb(h));
    for (const auto& c : check_all(b))
        if (!c.passed) throw InternalError("adjoint braided algebra fails " + c.describe());
    return b;
}

IntegralResult find_left_integral(const HopfAlgebra& h) {
    const std::size_t d = h.dim();
    const auto& k = h.field();
    const auto& dl = h.delta();
    const auto& eta = h.eta();
    // Unknowns lambda_b; one equation per (a, j):
    //   sum_b Delta[(a,b), j] lambda_b - eta[a] lambda_j = 0.
    std::vector<SparseVector> cols(d);
    for (std::size_t j = 0; j < d; ++j) {
        for (const auto& e : dl.column(j)) cols[e.row % d].emplace_back((e.row / d) * d + j, e.value);
        for (const auto& e : eta.column(0)) cols[j].emplace_back(e.row * d + j, -e.value);
    }
    for (auto& c : cols) {
        std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        SparseVector merged;
        for (auto& [i, v] : c) {
            if (!merged.empty() && merged.back().first == i)
                merged.back().second = merged.back().second + v;
            else
                merged.emplace_back(i, v);
        }
        std::erase_if(merged, [](const auto& x) { return x.second.is_zero(); });
        c = std::move(merged);
    }
    auto basis = kernel_basis(ExactMatrix::from_columns(k, d * d, cols));
    if (basis.empty()) throw NoIntegralError("no nonzero left integral in the dual");
    IntegralResult out{TensorMap(k, d, 1, 0), {}};
    for (const auto& v : basis) out.solutions.push_back(unflatten(v, k, d, 1, 0));
    // Normalize the first basis vector so its first nonzero coordinate is 1.
    const auto& v = basis.front();
    auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
    Scalar scale = lead->inverse();
    Vector normalized;
    for (const auto& x : v) normalized.push_back(x * scale);
    out.lambda = unflatten(normalized, k, d, 1, 0);
    if (compose(tensor(id(h.mu()), out.lambda), dl) != compose(eta, out.lambda))
        throw InternalError("integral solve returned a non-integral");
    return out;
}

BraidedAlgebra braided_frobenius(const HopfAlgebra& h) {
    const std::size_t n = h.dim();
    const auto& k = h.field();
    const auto& mu = h.mu();
    const auto& dl = h.delta();
    const auto& s = h.antipode();
    if (!h.commutative() || !h.cocommutative())
        throw PreconditionError("braided_frobenius needs a commutative and cocommutative Hopf algebra");
    auto integral = find_left_integral(h);
    if (integral.ambiguous()) throw PreconditionError("braided_frobenius needs a unique integral up to scale");
    const auto& lambda = integral.lambda;
    auto i1 = id(mu);
    auto cup = compose(lambda, mu, tensor(i1, s));  // 2 -> 0
    auto mu_x = tensor(i1, cup, i1);                // X^4 -> X^2
    auto delta2 = compose(tensor(dl, i1), dl);      // 1 -> 3
    auto t = compose(mu, tensor(mu, i1), tensor(i1, s, i1));
    auto spread = tensor(i1, i1, delta2, delta2);   // X^4 -> X^8
    auto shuffle = TensorMap::permutation(k, n, {2, 5, 0, 3, 6, 1, 4, 7});
    auto r_x = compose(tensor(i1, i1, t, t), shuffle, spread);
    std::vector<std::string> labels;
    const auto& base = h.labels();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto lx = base.empty() ? std::to_string(x) : base[x];
            auto ly = base.empty() ? std::to_string(y) : base[y];
            labels.push_back("(" + lx + "," + ly + ")");
        }
    const std::size_t d = n * n;
    AssociativeAlgebra alg(mu_x.regroup(d, 2, 1), std::nullopt, std::move(labels));
    BraidedAlgebra b(std::move(alg), YangBaxterOperator(r_x.regroup(d, 2, 2)));
    for (const auto& c : check_all(b))
        if (!c.passed) throw InternalError("braided Frobenius algebra fails " + c.describe());
    return b;
}

HopfTwoCochain hopf_coboundary(const HopfAlgebra& h, const TensorMap& f) {
    require_shape(f, h.dim(), 1, 1, "hopf_coboundary argument");
    const auto& mu = h.mu();
    const auto& dl = h.delta();
    auto i1 = id(mu);
    return HopfTwoCochain{compose(f, mu) - compose(mu, tensor(f, i1)) - compose(mu, tensor(i1, f)),
                          compose(tensor(f, i1), dl) + compose(tensor(i1, f), dl) - compose(dl, f)};
}

CheckResult check_hopf_2cocycle(const HopfAlgebra& h, const HopfTwoCochain& c) {
    require_shape(c.xi, h.dim(), 2, 1, "xi");
    require_shape(c.zeta, h.dim(), 1, 2, "zeta");
    for (const auto& [name, m] : cocycle_conditions(h, c)) {
        auto r = is_zero_check(name, m);
        if (!r.passed) return r;
    }
    return CheckResult{};
}

bool check_normalized(const HopfAlgebra& h, const HopfTwoCochain& c) {
    for (const auto& [name, m] : normalization_conditions(h, c))
        if (!m.is_zero()) return false;
    return true;
}

TensorMap antipode_correction(const HopfAlgebra& h, const HopfTwoCochain& c) {
    auto cocycle = check_hopf_2cocycle(h, c);
    if (!cocycle.passed) throw PreconditionError("antipode correction needs a Hopf 2-cocycle: " + cocycle.describe());
    const auto& mu = h.mu();
    const auto& dl = h.delta();
    const auto& s = h.antipode();
    auto i1 = id(mu);
    auto d3 = compose(tensor(dl, i1), dl);
    TensorMap sp = -(compose(mu, tensor(s, compose(c.xi, tensor(i1, s))), d3) +
                     compose(mu, tensor(s, compose(mu, tensor(i1, s), c.zeta)), dl));
    auto hex1 = compose(c.xi, tensor(i1, s), dl) + compose(mu, tensor(i1, s), c.zeta) + compose(mu, tensor(i1, sp), dl);
    auto hex2 = compose(c.xi, tensor(s, i1), dl) + compose(mu, tensor(s, i1), c.zeta) + compose(mu, tensor(sp, i1), dl);
    if (!hex1.is_zero() || !hex2.is_zero()) throw InternalError("antipode correction fails the hexagon identities");
    return sp;
}

Cochain2 psi_map(const HopfAlgebra& h, const HopfTwoCochain& c) {
    if (!check_normalized(h, c)) throw PreconditionError("psi_map needs a normalized Hopf 2-cocycle");
    auto sp = antipode_correction(h, c);
    const std::size_t order = 2;
    HbarMap mu({h.mu(), c.xi});
    HbarMap dl({h.delta(), c.zeta});
    HbarMap s({h.antipode(), sp});
    auto one = HbarMap::identity(h.field(), h.dim(), 1, order);
    HbarMap shuffle(TensorMap::permutation(h.field(), h.dim(), kAdjointShuffle), order);
    auto r = adjoint_composite(mu, dl, s, one, shuffle);
    Cochain2 out{r.coefficient(1), c.xi};
    auto b = braided_from_hopf(h);
    if (!delta2(b, out).is_zero()) throw InternalError("(Psi, xi) is not a 2-cocycle of the adjoint structure");
    return out;
}

std::vector<HopfTwoCochain> normalized_cocycle_basis(const HopfAlgebra& h) {
    const std::size_t d = h.dim();
    const auto& k = h.field();
    const std::size_t nxi = d * d * d, nzeta = d * d * d;
    std::vector<SparseVector> cols;
    std::size_t rows = 0;
    for (std::size_t pos = 0; pos < nxi + nzeta; ++pos) {
        HopfTwoCochain c{TensorMap(k, d, 2, 1), TensorMap(k, d, 1, 2)};
        if (pos < nxi)
            c.xi.set(pos / (d * d), pos % (d * d), Scalar::one(k));
        else
            c.zeta.set((pos - nxi) / d, (pos - nxi) % d, Scalar::one(k));
        SparseVector col;
        std::size_t offset = 0;
        for (const auto& [name, m] : cocycle_conditions(h, c)) append(col, offset, m);
        for (const auto& [name, m] : normalization_conditions(h, c)) append(col, offset, m);
        rows = offset;
        cols.push_back(std::move(col));
    }
    auto m = ExactMatrix::from_columns(k, rows, cols);
    std::vector<HopfTwoCochain> out;
    for (const auto& v : kernel_basis(m)) {
        std::span<const Scalar> all(v);
        out.push_back(HopfTwoCochain{unflatten(all.subspan(0, nxi), k, d, 2, 1),
                                     unflatten(all.subspan(nxi, nzeta), k, d, 1, 2)});
    }
    return out;
}

}  // namespace ybh
