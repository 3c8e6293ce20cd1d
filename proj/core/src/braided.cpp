#include "ybh/braided.hpp"

#include "ybh/convert.hpp"
#include "ybh/errors.hpp"

namespace ybh {

namespace {

TensorMap id(const TensorMap& like, int n = 1) { return TensorMap::identity(like.field(), like.dim(), n); }

}  // namespace

std::string CheckResult::describe() const {
    if (passed) return axiom + ": ok";
    std::string w;
    for (std::size_t i = 0; i < witness.size(); ++i) w += (i ? "," : "") + std::to_string(witness[i]);
    return axiom + ": fails at input (" + w + "), output " + std::to_string(output_index) + ": " + lhs_value +
           " != " + rhs_value;
}

CheckResult compare_maps(const std::string& axiom, const TensorMap& lhs, const TensorMap& rhs) {
    CheckResult r;
    r.axiom = axiom;
    auto diff = first_difference(lhs, rhs);
    if (!diff) return r;
    r.passed = false;
    r.witness = decode(diff->first, lhs.dim(), lhs.in_arity());
    r.output_index = diff->second;
    r.lhs_value = lhs.at(diff->second, diff->first).to_string();
    r.rhs_value = rhs.at(diff->second, diff->first).to_string();
    return r;
}

AssociativeAlgebra::AssociativeAlgebra(TensorMap mu, std::optional<TensorMap> unit, std::vector<std::string> labels)
    : mu_(std::move(mu)), unit_(std::move(unit)), labels_(std::move(labels)) {
    if (mu_.in_arity() != 2 || mu_.out_arity() != 1) throw ArityError("multiplication must be a map V(x)V -> V");
    if (unit_ && (unit_->in_arity() != 0 || unit_->out_arity() != 1 || unit_->dim() != mu_.dim() ||
                  unit_->field() != mu_.field()))
        throw ArityError("unit must be a map k -> V");
    if (!labels_.empty() && labels_.size() != mu_.dim()) throw InputError("basis label count does not match dimension");
}

TensorMap associativity_defect(const TensorMap& mu) {
    auto i1 = id(mu);
    return compose(mu, tensor(mu, i1)) - compose(mu, tensor(i1, mu));
}

CheckResult check_associative(const AssociativeAlgebra& a) {
    auto i1 = id(a.mu());
    return compare_maps("associativity", compose(a.mu(), tensor(a.mu(), i1)), compose(a.mu(), tensor(i1, a.mu())));
}

CheckResult check_unit(const AssociativeAlgebra& a) {
    if (!a.unit()) {
        CheckResult r;
        r.axiom = "unit";
        r.passed = false;
        r.lhs_value = "no unit";
        r.rhs_value = "unit";
        return r;
    }
    auto i1 = id(a.mu());
    auto left = compare_maps("left unit", compose(a.mu(), tensor(*a.unit(), i1)), i1);
    if (!left) return left;
    return compare_maps("right unit", compose(a.mu(), tensor(i1, *a.unit())), i1);
}

YangBaxterOperator::YangBaxterOperator(TensorMap r) : r_(std::move(r)), inv_(r_) {
    if (r_.in_arity() != 2 || r_.out_arity() != 2) throw ArityError("R must be a map V(x)V -> V(x)V");
    auto m = to_matrix(r_);
    std::vector<Vector> unit_cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Vector e(m.rows(), Scalar::zero(r_.field()));
        e[j] = Scalar::one(r_.field());
        unit_cols.push_back(std::move(e));
    }
    auto sols = solve_linear_many(m, unit_cols);
    ExactMatrix inv(r_.field(), m.rows(), m.cols());
    for (std::size_t j = 0; j < sols.size(); ++j) {
        if (!sols[j].solvable)
            throw ValidationError("invertibility", decode(j, r_.dim(), 2), "R is not invertible");
        inv.set_column(j, to_sparse(sols[j].solution));
    }
    inv_ = from_matrix(inv, r_.dim(), 2, 2);
}

TensorMap yb_defect(const TensorMap& r) {
    auto i1 = id(r);
    auto r1 = tensor(r, i1), r2 = tensor(i1, r);
    return compose(r1, r2, r1) - compose(r2, r1, r2);
}

CheckResult check_yb(const TensorMap& r) {
    if (r.in_arity() != 2 || r.out_arity() != 2) throw ArityError("R must be a map V(x)V -> V(x)V");
    auto i1 = id(r);
    auto r1 = tensor(r, i1), r2 = tensor(i1, r);
    return compare_maps("Yang-Baxter", compose(r1, r2, r1), compose(r2, r1, r2));
}

TensorMap yi_defect(const TensorMap& mu, const TensorMap& r) {
    auto i1 = id(mu);
    return compose(tensor(mu, i1), tensor(i1, r), tensor(r, i1)) - compose(r, tensor(i1, mu));
}

TensorMap iy_defect(const TensorMap& mu, const TensorMap& r) {
    auto i1 = id(mu);
    return compose(tensor(i1, mu), tensor(r, i1), tensor(i1, r)) - compose(r, tensor(mu, i1));
}

CheckResult check_yi(const TensorMap& mu, const TensorMap& r) {
    auto i1 = id(mu);
    return compare_maps("YI", compose(tensor(mu, i1), tensor(i1, r), tensor(r, i1)), compose(r, tensor(i1, mu)));
}

CheckResult check_iy(const TensorMap& mu, const TensorMap& r) {
    auto i1 = id(mu);
    return compare_maps("IY", compose(tensor(i1, mu), tensor(r, i1), tensor(i1, r)), compose(r, tensor(mu, i1)));
}

BraidedAlgebra::BraidedAlgebra(AssociativeAlgebra algebra, YangBaxterOperator r)
    : algebra_(std::move(algebra)), yb_(std::move(r)) {
    if (algebra_.field() != yb_.R().field()) throw InputError("algebra and braiding over different fields");
    if (algebra_.dim() != yb_.R().dim()) throw ArityError("algebra and braiding of different dimensions");
    associative_ = check_associative(algebra_).passed;
    yb_holds_ = check_yb(yb_.R()).passed;
    yi_holds_ = check_yi(mu(), R()).passed;
    iy_holds_ = check_iy(mu(), R()).passed;
}

std::vector<CheckResult> check_all(const BraidedAlgebra& b) {
    return {check_associative(b.algebra()), check_yb(b.R()), check_yi(b), check_iy(b)};
}

void BraidedAlgebra::require_braided(const std::string& operation) const {
    if (is_braided()) return;
    for (const auto& c : check_all(*this))
        if (!c.passed) throw PreconditionError(operation + " needs a braided algebra; " + c.describe());
}

TensorMap braided_multiplication(const BraidedAlgebra& b, int n) {
    b.require_braided("braided_multiplication");
    if (n < 0) throw InputError("braided_multiplication needs n >= 0");
    TensorMap m = b.mu();
    for (int i = 0; i < n; ++i) m = compose(m, b.R());
    auto check = check_associative(AssociativeAlgebra(m));
    if (!check.passed) throw InternalError("mu o R^" + std::to_string(n) + " is not associative: " + check.describe());
    return m;
}

CheckResult check_braided_homomorphism(const BraidedAlgebra& from, const BraidedAlgebra& to, const TensorMap& h) {
    if (h.in_arity() != 1 || h.out_arity() != 1) throw ArityError("homomorphism must be a map V -> V");
    if (from.dim() != to.dim() || h.dim() != from.dim()) throw InputError("homomorphism dimensions do not match");
    auto hh = tensor(h, h);
    auto mult = compare_maps("multiplicative", compose(h, from.mu()), compose(to.mu(), hh));
    if (!mult) return mult;
    return compare_maps("braid-compatible", compose(hh, from.R()), compose(to.R(), hh));
}

TensorMap mirror_map(const TensorMap& f) { return reverse_factors(f); }

BraidedAlgebra mirror(const BraidedAlgebra& b) {
    const auto& a = b.algebra();
    return BraidedAlgebra(AssociativeAlgebra(mirror_map(a.mu()), a.unit(), a.labels()),
                          YangBaxterOperator(mirror_map(b.R())));
}

}  // namespace ybh
