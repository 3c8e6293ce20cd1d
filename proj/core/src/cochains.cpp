#include "ybh/cochains.hpp"

#include "ybh/errors.hpp"

namespace ybh {

namespace {

void append(SparseVector& out, const TensorMap& f, std::size_t& offset) {
    for (auto& [i, v] : flatten_sparse(f)) out.emplace_back(offset + i, std::move(v));
    offset += f.rows() * f.cols();
}

TensorMap take(const Vector& v, std::size_t& offset, const FieldSpec& k, std::size_t dim, int in, int out) {
    std::size_t n = ipow(dim, in) * ipow(dim, out);
    auto f = unflatten(std::span<const Scalar>(v.data() + offset, n), k, dim, in, out);
    offset += n;
    return f;
}

void require_length(const Vector& v, std::size_t n) {
    if (v.size() != n) throw ArityError("cochain vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
}

}  // namespace

Cochain2 Cochain2::zero(const FieldSpec& k, std::size_t dim) {
    return Cochain2{TensorMap(k, dim, 2, 2), TensorMap(k, dim, 2, 1)};
}

std::size_t Cochain2::size(std::size_t d) { return ipow(d, 4) + ipow(d, 3); }

SparseVector Cochain2::flatten() const {
    SparseVector out;
    std::size_t off = 0;
    append(out, phi, off);
    append(out, psi, off);
    return out;
}

Cochain2 Cochain2::unflatten(const Vector& v, const FieldSpec& k, std::size_t dim) {
    require_length(v, size(dim));
    std::size_t off = 0;
    auto phi = take(v, off, k, dim, 2, 2);
    auto psi = take(v, off, k, dim, 2, 1);
    return Cochain2{std::move(phi), std::move(psi)};
}

Cochain2& Cochain2::operator+=(const Cochain2& o) {
    phi += o.phi;
    psi += o.psi;
    return *this;
}

Cochain3 Cochain3::zero(const FieldSpec& k, std::size_t dim) {
    return Cochain3{TensorMap(k, dim, 3, 3), TensorMap(k, dim, 3, 2), TensorMap(k, dim, 3, 2), TensorMap(k, dim, 3, 1)};
}

std::size_t Cochain3::size(std::size_t d) { return ipow(d, 6) + 2 * ipow(d, 5) + ipow(d, 4); }

SparseVector Cochain3::flatten() const {
    SparseVector out;
    std::size_t off = 0;
    append(out, beta, off);
    append(out, alpha_yi, off);
    append(out, alpha_iy, off);
    append(out, gamma, off);
    return out;
}

Cochain3 Cochain3::unflatten(const Vector& v, const FieldSpec& k, std::size_t dim) {
    require_length(v, size(dim));
    std::size_t off = 0;
    auto beta = take(v, off, k, dim, 3, 3);
    auto ayi = take(v, off, k, dim, 3, 2);
    auto aiy = take(v, off, k, dim, 3, 2);
    auto gamma = take(v, off, k, dim, 3, 1);
    return Cochain3{std::move(beta), std::move(ayi), std::move(aiy), std::move(gamma)};
}

std::size_t Cochain4::size(std::size_t d) { return ipow(d, 8) + 2 * ipow(d, 7) + 4 * ipow(d, 6) + ipow(d, 5); }
std::size_t Cochain4::shared_size(std::size_t d) { return ipow(d, 8) + ipow(d, 7) + ipow(d, 6) + ipow(d, 5); }

std::vector<const TensorMap*> Cochain4::components() const {
    return {&yb, &d31_yi, &d31_iy, &d32_yi, &d32_iy, &d33_yi, &d33_iy, &hochschild};
}

bool Cochain4::is_zero() const {
    for (auto* c : components())
        if (!c->is_zero()) return false;
    return true;
}

SparseVector Cochain4::flatten() const {
    SparseVector out;
    std::size_t off = 0;
    for (auto* c : components()) append(out, *c, off);
    return out;
}

SparseVector Cochain4::flatten_shared() const {
    SparseVector out;
    std::size_t off = 0;
    append(out, yb, off);
    append(out, d31_yi + d31_iy, off);
    append(out, d32_yi + d32_iy + d33_yi + d33_iy, off);
    append(out, hochschild, off);
    return out;
}

}  // namespace ybh
