#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybh/tensor_map.hpp"

namespace ybh {

// Outcome of an identity check; on failure, the first input basis multi-index
// (lexicographic) where the two sides differ, and the output index there.
struct CheckResult {
    bool passed = true;
    std::string axiom;
    std::vector<std::size_t> witness;
    std::size_t output_index = 0;
    std::string lhs_value;
    std::string rhs_value;

    explicit operator bool() const { return passed; }
    std::string describe() const;
};

// Compares two maps entrywise and reports the first difference.
CheckResult compare_maps(const std::string& axiom, const TensorMap& lhs, const TensorMap& rhs);

class AssociativeAlgebra {
public:
    explicit AssociativeAlgebra(TensorMap mu, std::optional<TensorMap> unit = std::nullopt,
                                std::vector<std::string> labels = {});

    const TensorMap& mu() const { return mu_; }
    const std::optional<TensorMap>& unit() const { return unit_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t dim() const { return mu_.dim(); }
    const FieldSpec& field() const { return mu_.field(); }

private:
    TensorMap mu_;
    std::optional<TensorMap> unit_;
    std::vector<std::string> labels_;
};

CheckResult check_associative(const AssociativeAlgebra& a);
CheckResult check_unit(const AssociativeAlgebra& a);

// Invertible R: V (x) V -> V (x) V. The inverse is computed exactly at construction.
class YangBaxterOperator {
public:
    explicit YangBaxterOperator(TensorMap r);

    const TensorMap& R() const { return r_; }
    const TensorMap& inverse() const { return inv_; }

private:
    TensorMap r_;
    TensorMap inv_;
};

CheckResult check_yb(const TensorMap& r);

// Axiom defects, each "LHS - RHS"; zero iff the axiom holds.
TensorMap associativity_defect(const TensorMap& mu);
// (R(x)1)(1(x)R)(R(x)1) - (1(x)R)(R(x)1)(1(x)R)
TensorMap yb_defect(const TensorMap& r);
// (mu(x)1)(1(x)R)(R(x)1) - R(1(x)mu): a strand crossing a product.
TensorMap yi_defect(const TensorMap& mu, const TensorMap& r);
// (1(x)mu)(R(x)1)(1(x)R) - R(mu(x)1): a product crossing a strand.
TensorMap iy_defect(const TensorMap& mu, const TensorMap& r);

// (A, mu, R) with the axioms evaluated once at construction. A structure that
// fails some axiom can still be held (for searches); is_braided() tells.
class BraidedAlgebra {
public:
    BraidedAlgebra(AssociativeAlgebra algebra, YangBaxterOperator r);

    const AssociativeAlgebra& algebra() const { return algebra_; }
    const YangBaxterOperator& yb() const { return yb_; }
    const TensorMap& mu() const { return algebra_.mu(); }
    const TensorMap& R() const { return yb_.R(); }
    std::size_t dim() const { return algebra_.dim(); }
    const FieldSpec& field() const { return algebra_.field(); }

    bool associative() const { return associative_; }
    bool yb_holds() const { return yb_holds_; }
    bool yi_holds() const { return yi_holds_; }
    bool iy_holds() const { return iy_holds_; }
    bool is_braided() const { return associative_ && yb_holds_ && yi_holds_ && iy_holds_; }
    // Throws PreconditionError naming the first failing axiom.
    void require_braided(const std::string& operation) const;

private:
    AssociativeAlgebra algebra_;
    YangBaxterOperator yb_;
    bool associative_;
    bool yb_holds_;
    bool yi_holds_;
    bool iy_holds_;
};

// (mu(x)1)(1(x)R)(R(x)1) = R(1(x)mu)
CheckResult check_yi(const TensorMap& mu, const TensorMap& r);
// (1(x)mu)(R(x)1)(1(x)R) = R(mu(x)1)
CheckResult check_iy(const TensorMap& mu, const TensorMap& r);
inline CheckResult check_yi(const BraidedAlgebra& b) { return check_yi(b.mu(), b.R()); }
inline CheckResult check_iy(const BraidedAlgebra& b) { return check_iy(b.mu(), b.R()); }
std::vector<CheckResult> check_all(const BraidedAlgebra& b);

// mu o R^n; the result is re-verified to be associative.
TensorMap braided_multiplication(const BraidedAlgebra& b, int n);

// h: from -> to with h mu = mu (h(x)h) and (h(x)h) R = R (h(x)h).
CheckResult check_braided_homomorphism(const BraidedAlgebra& from, const BraidedAlgebra& to, const TensorMap& h);

// rev o f o rev.
TensorMap mirror_map(const TensorMap& f);
// (V, mirror(mu), mirror(R)); exchanges the two mixed axioms.
BraidedAlgebra mirror(const BraidedAlgebra& b);

}  // namespace ybh
