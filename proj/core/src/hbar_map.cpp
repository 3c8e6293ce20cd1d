#include "ybh/hbar_map.hpp"

#include "ybh/errors.hpp"

namespace ybh {

HbarMap::HbarMap(std::vector<TensorMap> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw InputError("hbar map needs at least one coefficient");
    const auto& f = coeffs_.front();
    for (const auto& c : coeffs_)
        if (c.field() != f.field() || c.dim() != f.dim() || c.in_arity() != f.in_arity() ||
            c.out_arity() != f.out_arity())
            throw ArityError("hbar map coefficients have different shapes");
}

HbarMap::HbarMap(const TensorMap& constant, std::size_t order) {
    if (order == 0) throw InputError("truncation order must be positive");
    coeffs_.push_back(constant);
    for (std::size_t j = 1; j < order; ++j)
        coeffs_.emplace_back(constant.field(), constant.dim(), constant.in_arity(), constant.out_arity());
}

HbarMap HbarMap::identity(const FieldSpec& k, std::size_t dim, int arity, std::size_t order) {
    return HbarMap(TensorMap::identity(k, dim, arity), order);
}

const TensorMap& HbarMap::coefficient(std::size_t j) const {
    if (j >= coeffs_.size()) throw InputError("hbar degree beyond truncation order");
    return coeffs_[j];
}

TruncatedScalar HbarMap::at(std::size_t row, std::size_t col) const {
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const auto& f : coeffs_) c.push_back(f.at(row, col));
    return TruncatedScalar(std::move(c), field());
}

bool HbarMap::is_zero() const { return !leading_degree().has_value(); }

std::optional<std::size_t> HbarMap::leading_degree() const {
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero()) return j;
    return std::nullopt;
}

void HbarMap::require_compatible(const HbarMap& o) const {
    if (order() != o.order()) throw InputError("hbar maps have different truncation orders");
}

HbarMap HbarMap::operator-() const {
    HbarMap r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

HbarMap& HbarMap::operator+=(const HbarMap& o) {
    require_compatible(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
}

HbarMap& HbarMap::operator-=(const HbarMap& o) {
    require_compatible(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
}

HbarMap compose(const HbarMap& f, const HbarMap& g) {
    if (f.order() != g.order()) throw InputError("compose: truncation orders differ");
    std::size_t m = f.order();
    std::vector<TensorMap> out;
    for (std::size_t n = 0; n < m; ++n) {
        TensorMap acc(f.field(), f.dim(), g.in_arity(), f.out_arity());
        for (std::size_t i = 0; i <= n; ++i) {
            if (f.coefficient(i).is_zero() || g.coefficient(n - i).is_zero()) continue;
            acc += compose(f.coefficient(i), g.coefficient(n - i));
        }
        out.push_back(std::move(acc));
    }
    return HbarMap(std::move(out));
}

HbarMap tensor(const HbarMap& f, const HbarMap& g) {
    if (f.order() != g.order()) throw InputError("tensor: truncation orders differ");
    std::size_t m = f.order();
    std::vector<TensorMap> out;
    for (std::size_t n = 0; n < m; ++n) {
        TensorMap acc(f.field(), f.dim(), f.in_arity() + g.in_arity(), f.out_arity() + g.out_arity());
        for (std::size_t i = 0; i <= n; ++i) {
            if (f.coefficient(i).is_zero() || g.coefficient(n - i).is_zero()) continue;
            acc += tensor(f.coefficient(i), g.coefficient(n - i));
        }
        out.push_back(std::move(acc));
    }
    return HbarMap(std::move(out));
}

}  // namespace ybh
