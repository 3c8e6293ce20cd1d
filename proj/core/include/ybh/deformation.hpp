#pragma once

#include <optional>
#include <vector>

#include "ybh/cohomology.hpp"
#include "ybh/hbar_map.hpp"

namespace ybh {

// R_n = R + sum hbar^i phi_i, mu_n = mu + sum hbar^i psi_i.
struct DeformationSeries {
    BraidedAlgebra base;
    std::vector<TensorMap> phi_terms;  // phi_1 .. phi_n, 2 -> 2
    std::vector<TensorMap> psi_terms;  // psi_1 .. psi_n, 2 -> 1

    DeformationSeries(BraidedAlgebra b, std::vector<TensorMap> phi, std::vector<TensorMap> psi);
    static DeformationSeries infinitesimal(const BraidedAlgebra& b, const Cochain2& c);
    static DeformationSeries zero(const BraidedAlgebra& b, std::size_t order);

    std::size_t order() const { return phi_terms.size(); }
    // phi_0 = R, psi_0 = mu.
    const TensorMap& phi(std::size_t i) const;
    const TensorMap& psi(std::size_t i) const;
    // Truncated to k[hbar]/(hbar^m), m = order + 1 by default.
    HbarMap braiding(std::optional<std::size_t> m = std::nullopt) const;
    HbarMap multiplication(std::optional<std::size_t> m = std::nullopt) const;
};

struct DeformationCheck {
    bool passed = true;
    std::string axiom;
    std::size_t degree = 0;  // hbar-degree of the first nonzero defect coefficient
    CheckResult detail;

    explicit operator bool() const { return passed; }
    std::string describe() const;
};

// Associativity, YBE, YI and IY over k[hbar]/(hbar^{n+1}); the first failure is reported.
DeformationCheck verify_deformation(const DeformationSeries& s);

struct ObstructionBundle {
    TensorMap theta;              // 3 -> 3, Yang-Baxter shape
    TensorMap xi_minus_omega_yi;  // 3 -> 2, (mu(x)1)(1(x)R)(R(x)1) - R(1(x)mu) shape
    TensorMap xi_minus_omega_iy;  // 3 -> 2, (1(x)mu)(R(x)1)(1(x)R) - R(mu(x)1) shape
    TensorMap lambda;             // 3 -> 1, associativity shape
    std::size_t r = 2;

    Cochain3 to_cochain3() const { return Cochain3{theta, xi_minus_omega_yi, xi_minus_omega_iy, lambda}; }
};

// Sums over triples (i, j, k) with i + j + k = r and no index equal to r.
ObstructionBundle obstruction_bundle(const DeformationSeries& s, std::size_t r);

struct QuadraticExtension {
    bool extended = false;
    Cochain2 second;        // (phi_2, psi_2) when extended
    Vector certificate;     // otherwise: y with y^T D2 = 0 and y . (-bundle) = 1
    ObstructionBundle bundle;

    DeformationSeries series(const BraidedAlgebra& b, const Cochain2& first) const;
};

// Solves delta2(phi_2, psi_2) = -bundle of the infinitesimal deformation c.
QuadraticExtension extend_to_quadratic(const ComplexSlice& slice, const Cochain2& c);
QuadraticExtension extend_to_quadratic(const BraidedAlgebra& b, const Cochain2& c);
std::vector<QuadraticExtension> extend_to_quadratic(const ComplexSlice& slice, const std::vector<Cochain2>& cs);

// Checks y^T D2 = 0 and y . (-bundle) = 1 for a failed extension.
bool certificate_valid(const ExactMatrix& d2, const QuadraticExtension& q);

bool obstruction_is_cocycle(const BraidedAlgebra& b, const Cochain3& bundle);
bool obstruction_is_cocycle(const BraidedAlgebra& b, const Cochain2& c);

struct IsomorphismReport {
    bool inverse = false;         // (1 - hbar f)(1 + hbar f) = 1
    bool multiplication = false;  // f~ mu~ = mu' (f~ (x) f~)
    bool braiding = false;        // (f~ (x) f~) R~ = R' (f~ (x) f~)
    bool passed() const { return inverse && multiplication && braiding; }
};

// f~ = 1 + hbar f carries the deformation by delta1(f) onto the undeformed structure.
IsomorphismReport trivializing_isomorphism(const BraidedAlgebra& b, const TensorMap& f);
// f~ carries the deformation by c + delta1(f) onto the deformation by c.
IsomorphismReport deformations_connected(const BraidedAlgebra& b, const Cochain2& c, const TensorMap& f);

}  // namespace ybh
