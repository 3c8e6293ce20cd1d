#pragma once

#include <string>
#include <vector>

#include "ybh/braided.hpp"
#include "ybh/cochains.hpp"
#include "ybh/constructions.hpp"

namespace ybh {

class HopfAlgebra {
public:
    HopfAlgebra(TensorMap mu, TensorMap eta, TensorMap delta, TensorMap epsilon, TensorMap antipode,
                std::vector<std::string> labels = {});

    const TensorMap& mu() const { return mu_; }
    const TensorMap& eta() const { return eta_; }
    const TensorMap& delta() const { return delta_; }
    const TensorMap& epsilon() const { return epsilon_; }
    const TensorMap& antipode() const { return s_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t dim() const { return mu_.dim(); }
    const FieldSpec& field() const { return mu_.field(); }

    bool commutative() const { return commutative_; }
    bool cocommutative() const { return cocommutative_; }
    bool involutory() const { return involutory_; }

    AssociativeAlgebra algebra() const { return AssociativeAlgebra(mu_, eta_, labels_); }

private:
    TensorMap mu_, eta_, delta_, epsilon_, s_;
    std::vector<std::string> labels_;
    bool commutative_, cocommutative_, involutory_;
};

struct HopfCheck {
    std::vector<CheckResult> violations;
    bool commutative = false;
    bool cocommutative = false;
    bool involutory = false;
    bool passed() const { return violations.empty(); }
};

HopfCheck check_hopf(const HopfAlgebra& h);

// k[G]: Delta g = g (x) g, epsilon g = 1, S g = g^{-1}.
HopfAlgebra group_hopf(const FiniteGroup& g, const FieldSpec& k);
// F_2[t]/(t^2) with t primitive and S t = t. Only a Hopf algebra in characteristic 2.
HopfAlgebra dual_numbers_hopf(const FieldSpec& k);

// R_H(x (x) y) = y1 (x) S(y2) x y3.
YangBaxterOperator adjoint_yb(const HopfAlgebra& h);
BraidedAlgebra braided_from_hopf(const HopfAlgebra& h);

struct IntegralResult {
    TensorMap lambda;                 // normalized: first nonzero coordinate is 1
    std::vector<TensorMap> solutions; // basis of the solution space
    std::size_t solution_rank() const { return solutions.size(); }
    bool ambiguous() const { return solutions.size() > 1; }
};

// Functional lambda with (1 (x) lambda) Delta = eta o lambda.
IntegralResult find_left_integral(const HopfAlgebra& h);

// V = X (x) X with mu_V = 1 (x) cup (x) 1, cup = lambda mu (1 (x) S), and the
// braiding ((x,y),(z,w)) -> (z1 (x) w1) (x) T(x,z2,w2) (x) T(y,z3,w3), T(a,b,c) = a S(b) c.
BraidedAlgebra braided_frobenius(const HopfAlgebra& h);

struct HopfTwoCochain {
    TensorMap xi;    // V (x) V -> V
    TensorMap zeta;  // V -> V (x) V
};

// xi = f mu - mu(f (x) 1) - mu(1 (x) f); zeta = (f (x) 1) Delta + (1 (x) f) Delta - Delta f.
HopfTwoCochain hopf_coboundary(const HopfAlgebra& h, const TensorMap& f);

// Algebra cocycle, coalgebra cocycle and bialgebra compatibility; first failure reported.
CheckResult check_hopf_2cocycle(const HopfAlgebra& h, const HopfTwoCochain& c);
bool check_normalized(const HopfAlgebra& h, const HopfTwoCochain& c);

// S' = -mu(S (x) xi(1 (x) S))(Delta (x) 1)Delta - mu(S (x) mu(1 (x) S) zeta) Delta,
// checked against both hexagon identities.
TensorMap antipode_correction(const HopfAlgebra& h, const HopfTwoCochain& c);

// (Psi, xi) where R_H + hbar Psi is the adjoint operator of (mu + hbar xi, Delta + hbar zeta, S + hbar S').
// c must be a normalized 2-cocycle; the result is checked to be a 2-cocycle of braided_from_hopf(h).
Cochain2 psi_map(const HopfAlgebra& h, const HopfTwoCochain& c);

// Basis of normalized Hopf 2-cocycles, by solving the linear conditions.
std::vector<HopfTwoCochain> normalized_cocycle_basis(const HopfAlgebra& h);

}  // namespace ybh
