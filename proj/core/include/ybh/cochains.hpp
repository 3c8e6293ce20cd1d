#pragma once

#include <vector>

#include "ybh/linalg.hpp"
#include "ybh/tensor_map.hpp"

namespace ybh {

// Degree-2 YBH cochain: phi (2->2) deforms R, psi (2->1) deforms mu.
struct Cochain2 {
    TensorMap phi;
    TensorMap psi;

    static Cochain2 zero(const FieldSpec& k, std::size_t dim);
    static std::size_t size(std::size_t dim);
    SparseVector flatten() const;
    static Cochain2 unflatten(const Vector& v, const FieldSpec& k, std::size_t dim);
    bool is_zero() const { return phi.is_zero() && psi.is_zero(); }
    Cochain2& operator+=(const Cochain2& o);
    friend Cochain2 operator+(Cochain2 a, const Cochain2& b) { return a += b; }
    friend bool operator==(const Cochain2&, const Cochain2&) = default;
};

// Degree-3 YBH cochain. Each summand is the target of the linearization of one
// axiom defect:
//   beta     (3->3)  Yang-Baxter
//   alpha_yi (3->2)  (mu(x)1)(1(x)R)(R(x)1) = R(1(x)mu)
//   alpha_iy (3->2)  (1(x)mu)(R(x)1)(1(x)R) = R(mu(x)1)
//   gamma    (3->1)  associativity
struct Cochain3 {
    TensorMap beta;
    TensorMap alpha_yi;
    TensorMap alpha_iy;
    TensorMap gamma;

    static Cochain3 zero(const FieldSpec& k, std::size_t dim);
    static std::size_t size(std::size_t dim);
    SparseVector flatten() const;
    static Cochain3 unflatten(const Vector& v, const FieldSpec& k, std::size_t dim);
    bool is_zero() const { return beta.is_zero() && alpha_yi.is_zero() && alpha_iy.is_zero() && gamma.is_zero(); }
    friend bool operator==(const Cochain3&, const Cochain3&) = default;
};

// Degree-4 cochain with one private target per component of the degree-3 differential.
struct Cochain4 {
    TensorMap yb;      // 4->4
    TensorMap d31_yi;  // 4->3
    TensorMap d31_iy;  // 4->3
    TensorMap d32_yi;  // 4->2, both mixed summands
    TensorMap d32_iy;  // 4->2, both mixed summands
    TensorMap d33_yi;  // 4->2, mixed and associativity summands
    TensorMap d33_iy;  // 4->2, mixed and associativity summands
    TensorMap hochschild;  // 4->1

    static std::size_t size(std::size_t dim);
    SparseVector flatten() const;
    // Components of equal Hom-type summed: (4->4, 4->3, 4->2, 4->1).
    SparseVector flatten_shared() const;
    static std::size_t shared_size(std::size_t dim);
    bool is_zero() const;
    std::vector<const TensorMap*> components() const;
};

}  // namespace ybh
