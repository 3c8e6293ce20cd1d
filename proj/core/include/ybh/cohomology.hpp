#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ybh/braided.hpp"
#include "ybh/cochains.hpp"
#include "ybh/linalg.hpp"

namespace ybh {

// Hochschild differentials of degree 0..3 (cochain arities 0, 1, 2, 3).
//   d0 s = mu(1(x)s) - mu(s(x)1)
//   d1 f = mu(f(x)1) + mu(1(x)f) - f mu
//   d2 psi = mu(psi(x)1) + psi(mu(x)1) - mu(1(x)psi) - psi(1(x)mu)
//   d3 gamma = mu(1(x)gamma) - gamma(mu(x)1(x)1) + gamma(1(x)mu(x)1) - gamma(1(x)1(x)mu) + mu(gamma(x)1)
TensorMap hochschild_differential(const TensorMap& mu, int degree, const TensorMap& cochain);

// Degree 1: R(f(x)1) + R(1(x)f) - (f(x)1)R - (1(x)f)R.
// Degree 2: linearization of (R(x)1)(1(x)R)(R(x)1) - (1(x)R)(R(x)1)(1(x)R).
TensorMap yang_baxter_differential(const TensorMap& r, int degree, const TensorMap& cochain);

// Zamolodchikov tetrahedron loop: sum over the eight braid moves of a closed
// loop of reduced words for the longest element of S_4.
TensorMap yb_differential_d3(const TensorMap& r, const TensorMap& beta);

struct MixedD2 {
    TensorMap yi;  // linearized (mu(x)1)(1(x)R)(R(x)1) - R(1(x)mu)
    TensorMap iy;  // linearized (1(x)mu)(R(x)1)(1(x)R) - R(mu(x)1)
};
MixedD2 mixed_differential_d2(const BraidedAlgebra& b, const Cochain2& c);

Cochain2 delta1(const BraidedAlgebra& b, const TensorMap& f);
Cochain3 delta2(const BraidedAlgebra& b, const Cochain2& c);

// Degree-3 differential with its structure-dependent composites cached.
class Delta3 {
public:
    explicit Delta3(const BraidedAlgebra& b);
    ~Delta3();
    Delta3(Delta3&&) noexcept;

    Cochain4 operator()(const Cochain3& c) const;
    // The six mixed components only (yb and hochschild left zero).
    Cochain4 mixed(const Cochain3& c) const;

    struct Context;

private:
    std::unique_ptr<Context> self_;
    std::unique_ptr<Context> mirrored_;
};

Cochain4 delta3(const BraidedAlgebra& b, const Cochain3& c);
std::vector<TensorMap> mixed_differential_d3(const BraidedAlgebra& b, const Cochain3& c);

// Largest dimension accepted per degree; YBH_MAX_DIM overrides both.
struct DimensionGuard {
    std::size_t degree2 = 4;
    std::size_t degree3 = 3;
    static DimensionGuard from_env();
    void require(std::size_t dim, int degree) const;
};

// Degree 1: (d^4 + d^3) x d^2. Degree 2: (d^6 + 2d^5 + d^4) x (d^4 + d^3).
// Degree 3: C^4 x C^3 with private targets.
ExactMatrix differential_matrix(const BraidedAlgebra& b, int degree, const DimensionGuard& guard = {});
ExactMatrix differential_matrix_d3_shared(const BraidedAlgebra& b, const DimensionGuard& guard = {});

struct Degree3Summary {
    std::size_t c4_dim = 0;
    std::size_t c4_shared_dim = 0;
    std::size_t rank_d3 = 0;
    std::size_t rank_d3_shared = 0;
    std::size_t dim_z3 = 0;
    std::size_t dim_z3_shared = 0;
    std::size_t h3 = 0;
    std::size_t h3_shared = 0;
};

struct CohomologySummary {
    std::size_t dim = 0;
    std::size_t c1_dim = 0, c2_dim = 0, c3_dim = 0;
    std::size_t rank_d1 = 0, rank_d2 = 0;
    std::size_t dim_z2 = 0, dim_b2 = 0, h2 = 0;
    std::optional<Degree3Summary> degree3;
};

// D1 and D2 of a braided algebra, with the degree-3 operator.
class ComplexSlice {
public:
    explicit ComplexSlice(const BraidedAlgebra& b, const DimensionGuard& guard = {});

    const BraidedAlgebra& algebra() const { return b_; }
    const ExactMatrix& D1() const { return d1_; }
    const ExactMatrix& D2() const { return d2_; }
    const Delta3& D3() const { return d3_; }

    const std::vector<Cochain2>& cocycle_basis() const;
    const std::vector<Cochain2>& coboundary_basis() const;
    std::size_t rank_d1() const;
    std::size_t rank_d2() const;
    std::size_t h2() const { return cocycle_basis().size() - coboundary_basis().size(); }
    bool is_cocycle(const Cochain2& c) const;

    CohomologySummary summary(bool with_degree3, const DimensionGuard& guard = {}) const;

private:
    BraidedAlgebra b_;
    ExactMatrix d1_;
    ExactMatrix d2_;
    Delta3 d3_;
    mutable std::optional<std::vector<Cochain2>> cocycles_;
    mutable std::optional<std::vector<Cochain2>> coboundaries_;
    mutable std::optional<std::size_t> rank_d2_;
};

std::vector<Cochain2> cocycle_basis(const BraidedAlgebra& b, const DimensionGuard& guard = {});
std::vector<Cochain2> coboundary_basis(const BraidedAlgebra& b, const DimensionGuard& guard = {});
std::size_t cohomology_dimension(const BraidedAlgebra& b, int degree, const DimensionGuard& guard = {});
std::size_t h3_dimension(const BraidedAlgebra& b, const DimensionGuard& guard = {});

// V_R = (V, mu R, R).
BraidedAlgebra twisted_algebra(const BraidedAlgebra& b);
// (phi, psi) -> (phi, mu phi + psi R), a cochain of V_R. Input must be a 2-cocycle.
Cochain2 iota_r(const BraidedAlgebra& b, const Cochain2& c);

}  // namespace ybh
