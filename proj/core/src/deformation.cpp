#include "ybh/deformation.hpp"

#include "ybh/errors.hpp"

namespace ybh {

namespace {

TensorMap id(const TensorMap& like, int n = 1) { return TensorMap::identity(like.field(), like.dim(), n); }

template <class M>
M defect_assoc(const M& mu, const M& i1) {
    return compose(mu, tensor(mu, i1)) - compose(mu, tensor(i1, mu));
}
template <class M>
M defect_yb(const M& r, const M& i1) {
    auto r1 = tensor(r, i1), r2 = tensor(i1, r);
    return compose(r1, r2, r1) - compose(r2, r1, r2);
}
template <class M>
M defect_yi(const M& mu, const M& r, const M& i1) {
    return compose(tensor(mu, i1), tensor(i1, r), tensor(r, i1)) - compose(r, tensor(i1, mu));
}
template <class M>
M defect_iy(const M& mu, const M& r, const M& i1) {
    return compose(tensor(i1, mu), tensor(r, i1), tensor(i1, r)) - compose(r, tensor(mu, i1));
}

HbarMap series_map(const TensorMap& base, const std::vector<TensorMap>& terms, std::size_t m) {
    std::vector<TensorMap> coeffs;
    coeffs.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        if (j == 0)
            coeffs.push_back(base);
        else if (j <= terms.size())
            coeffs.push_back(terms[j - 1]);
        else
            coeffs.emplace_back(base.field(), base.dim(), base.in_arity(), base.out_arity());
    }
    return HbarMap(std::move(coeffs));
}

void require_cocycle(const BraidedAlgebra& b, const Cochain2& c, const char* op) {
    b.require_braided(op);
    if (!delta2(b, c).is_zero()) throw PreconditionError(std::string(op) + " needs a 2-cocycle");
}

}  // namespace

DeformationSeries::DeformationSeries(BraidedAlgebra b, std::vector<TensorMap> phi, std::vector<TensorMap> psi)
    : base(std::move(b)), phi_terms(std::move(phi)), psi_terms(std::move(psi)) {
    if (phi_terms.size() != psi_terms.size()) throw InputError("phi_terms and psi_terms differ in length");
    for (const auto& f : phi_terms)
        if (f.dim() != base.dim() || f.in_arity() != 2 || f.out_arity() != 2 || f.field() != base.field())
            throw ArityError("phi terms must be 2->2 maps over the base space");
    for (const auto& f : psi_terms)
        if (f.dim() != base.dim() || f.in_arity() != 2 || f.out_arity() != 1 || f.field() != base.field())
            throw ArityError("psi terms must be 2->1 maps over the base space");
}

DeformationSeries DeformationSeries::infinitesimal(const BraidedAlgebra& b, const Cochain2& c) {
    return DeformationSeries(b, {c.phi}, {c.psi});
}

DeformationSeries DeformationSeries::zero(const BraidedAlgebra& b, std::size_t order) {
    auto z = Cochain2::zero(b.field(), b.dim());
    return DeformationSeries(b, std::vector<TensorMap>(order, z.phi), std::vector<TensorMap>(order, z.psi));
}

const TensorMap& DeformationSeries::phi(std::size_t i) const {
    if (i == 0) return base.R();
    if (i > phi_terms.size()) throw InputError("series term beyond its order");
    return phi_terms[i - 1];
}

const TensorMap& DeformationSeries::psi(std::size_t i) const {
    if (i == 0) return base.mu();
    if (i > psi_terms.size()) throw InputError("series term beyond its order");
    return psi_terms[i - 1];
}

HbarMap DeformationSeries::braiding(std::optional<std::size_t> m) const {
    return series_map(base.R(), phi_terms, m.value_or(order() + 1));
}

HbarMap DeformationSeries::multiplication(std::optional<std::size_t> m) const {
    return series_map(base.mu(), psi_terms, m.value_or(order() + 1));
}

std::string DeformationCheck::describe() const {
    if (passed) return "deformation passes";
    return detail.describe() + " (hbar^" + std::to_string(degree) + ")";
}

DeformationCheck verify_deformation(const DeformationSeries& s) {
    const std::size_t m = s.order() + 1;
    auto mu = s.multiplication(m);
    auto r = s.braiding(m);
    auto i1 = HbarMap::identity(s.base.field(), s.base.dim(), 1, m);
    // R_n is invertible over k[hbar]/(hbar^m) because its hbar^0 part R is.
    const std::pair<const char*, HbarMap> defects[] = {
        {"associativity", defect_assoc(mu, i1)},
        {"yang_baxter", defect_yb(r, i1)},
        {"yi", defect_yi(mu, r, i1)},
        {"iy", defect_iy(mu, r, i1)},
    };
    DeformationCheck best;
    for (const auto& [name, defect] : defects) {
        auto lead = defect.leading_degree();
        if (!lead) continue;
        if (best.passed || *lead < best.degree) {
            const auto& c = defect.coefficient(*lead);
            best.passed = false;
            best.axiom = name;
            best.degree = *lead;
            best.detail = compare_maps(name, c, TensorMap(c.field(), c.dim(), c.in_arity(), c.out_arity()));
        }
    }
    return best;
}

ObstructionBundle obstruction_bundle(const DeformationSeries& s, std::size_t r) {
    if (r < 2) throw InputError("obstruction degree must be at least 2");
    if (s.order() + 1 < r) throw InputError("series must be defined through degree r-1");
    const auto& k = s.base.field();
    const std::size_t d = s.base.dim();
    auto i1 = id(s.base.mu());
    ObstructionBundle out{TensorMap(k, d, 3, 3), TensorMap(k, d, 3, 2), TensorMap(k, d, 3, 2), TensorMap(k, d, 3, 1),
                          r};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; i + j <= r; ++j) {
            std::size_t kk = r - i - j;
            if (j == r || kk == r) continue;
            out.theta += compose(tensor(s.phi(i), i1), tensor(i1, s.phi(j)), tensor(s.phi(kk), i1)) -
                         compose(tensor(i1, s.phi(i)), tensor(s.phi(j), i1), tensor(i1, s.phi(kk)));
            out.xi_minus_omega_yi += compose(tensor(s.psi(i), i1), tensor(i1, s.phi(j)), tensor(s.phi(kk), i1));
            out.xi_minus_omega_iy += compose(tensor(i1, s.psi(i)), tensor(s.phi(j), i1), tensor(i1, s.phi(kk)));
        }
    for (std::size_t p = 1; p < r; ++p) {
        std::size_t q = r - p;
        out.xi_minus_omega_yi -= compose(s.phi(p), tensor(i1, s.psi(q)));
        out.xi_minus_omega_iy -= compose(s.phi(p), tensor(s.psi(q), i1));
        out.lambda += compose(s.psi(p), tensor(s.psi(q), i1)) - compose(s.psi(p), tensor(i1, s.psi(q)));
    }
    return out;
}

DeformationSeries QuadraticExtension::series(const BraidedAlgebra& b, const Cochain2& first) const {
    if (!extended) throw PreconditionError("quadratic extension does not exist");
    return DeformationSeries(b, {first.phi, second.phi}, {first.psi, second.psi});
}

std::vector<QuadraticExtension> extend_to_quadratic(const ComplexSlice& slice, const std::vector<Cochain2>& cs) {
    const auto& b = slice.algebra();
    const auto& k = b.field();
    const std::size_t d = b.dim();
    std::vector<QuadraticExtension> out;
    std::vector<Vector> rhs;
    for (const auto& c : cs) {
        require_cocycle(b, c, "extend_to_quadratic");
        QuadraticExtension q{false, Cochain2::zero(k, d), {}, obstruction_bundle(DeformationSeries::infinitesimal(b, c), 2)};
        Vector v = to_dense(q.bundle.to_cochain3().flatten(), Cochain3::size(d), k);
        for (auto& x : v) x = -x;
        rhs.push_back(std::move(v));
        out.push_back(std::move(q));
    }
    auto solved = solve_linear_many(slice.D2(), rhs);
    for (std::size_t t = 0; t < cs.size(); ++t) {
        auto& q = out[t];
        if (solved[t].solvable) {
            q.extended = true;
            q.second = Cochain2::unflatten(solved[t].solution, k, d);
            auto check = verify_deformation(q.series(b, cs[t]));
            if (!check) throw InternalError("quadratic extension fails verification: " + check.describe());
        } else {
            q.certificate = std::move(solved[t].certificate);
        }
    }
    return out;
}

QuadraticExtension extend_to_quadratic(const ComplexSlice& slice, const Cochain2& c) {
    return std::move(extend_to_quadratic(slice, std::vector<Cochain2>{c}).front());
}

QuadraticExtension extend_to_quadratic(const BraidedAlgebra& b, const Cochain2& c) {
    require_cocycle(b, c, "extend_to_quadratic");
    return extend_to_quadratic(ComplexSlice(b), c);
}

bool certificate_valid(const ExactMatrix& d2, const QuadraticExtension& q) {
    if (q.extended || q.certificate.size() != d2.rows()) return false;
    const auto& k = d2.field();
    for (auto x : multiply(d2.transpose(), q.certificate))
        if (!x.is_zero()) return false;
    Scalar dot = Scalar::zero(k);
    for (const auto& [i, v] : q.bundle.to_cochain3().flatten()) dot -= q.certificate[i] * v;
    return dot.is_one();
}

bool obstruction_is_cocycle(const BraidedAlgebra& b, const Cochain3& bundle) { return delta3(b, bundle).is_zero(); }

bool obstruction_is_cocycle(const BraidedAlgebra& b, const Cochain2& c) {
    require_cocycle(b, c, "obstruction_is_cocycle");
    return obstruction_is_cocycle(b, obstruction_bundle(DeformationSeries::infinitesimal(b, c), 2).to_cochain3());
}

namespace {

IsomorphismReport connect(const BraidedAlgebra& b, const Cochain2& target, const Cochain2& source, const TensorMap& f) {
    if (f.dim() != b.dim() || f.in_arity() != 1 || f.out_arity() != 1 || f.field() != b.field())
        throw ArityError("isomorphism generator must be a 1->1 map over the base space");
    const std::size_t m = 2;
    auto mu_src = series_map(b.mu(), {source.psi}, m);
    auto r_src = series_map(b.R(), {source.phi}, m);
    auto mu_dst = series_map(b.mu(), {target.psi}, m);
    auto r_dst = series_map(b.R(), {target.phi}, m);
    auto i1 = id(f);
    HbarMap ft({i1, f});
    HbarMap ft_inv({i1, -f});
    IsomorphismReport rep;
    rep.inverse = compose(ft_inv, ft) == HbarMap::identity(b.field(), b.dim(), 1, m);
    rep.multiplication = compose(ft, mu_src) == compose(mu_dst, tensor(ft, ft));
    rep.braiding = compose(tensor(ft, ft), r_src) == compose(r_dst, tensor(ft, ft));
    return rep;
}

}  // namespace

IsomorphismReport trivializing_isomorphism(const BraidedAlgebra& b, const TensorMap& f) {
    auto rep = connect(b, Cochain2::zero(b.field(), b.dim()), delta1(b, f), f);
    if (!rep.passed()) throw InternalError("1 + hbar f does not trivialize the coboundary deformation");
    return rep;
}

IsomorphismReport deformations_connected(const BraidedAlgebra& b, const Cochain2& c, const TensorMap& f) {
    auto shifted = delta1(b, f);
    shifted += c;
    return connect(b, c, shifted, f);
}

}  // namespace ybh
