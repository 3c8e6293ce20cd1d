// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "ybh/cohomology.hpp"
#include "ybh/constructions.hpp"
#include "ybh/deformation.hpp"
#include "ybh/hopf.hpp"
#include "ybh/random.hpp"

using namespace ybh;

namespace {

const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kF2 = FieldSpec::prime(2);
const FieldSpec kF3 = FieldSpec::prime(3);
const FieldSpec kF101 = FieldSpec::prime(101);

// Collects the first failure message of a criterion.
struct Outcome {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

Vector dense(const Cochain2& c, std::size_t dim) {
    return to_dense(c.flatten(), Cochain2::size(dim), c.phi.field());
}

Cochain2 random_combination(Rng& rng, const std::vector<Cochain2>& basis, const FieldSpec& k, std::size_t dim) {
    Cochain2 c = Cochain2::zero(k, dim);
    for (const auto& v : basis) {
        auto a = random_scalar(rng, k);
        c += Cochain2{a * v.phi, a * v.psi};
    }
    return c;
}

Outcome axiom_suite() {
    Outcome o;
    for (const auto& k : {kQ, kF2, kF3, kF101}) {
        for (const auto& [name, b] : test::fixtures_up_to(k, 9)) {
            auto where = name + " over " + k.name();
            o.require(check_associative(b.algebra()).passed, where + ": associativity");
            o.require(check_yb(b.R()).passed, where + ": yang_baxter");
            o.require(check_yi(b).passed, where + ": yi");
            o.require(check_iy(b).passed, where + ": iy");
            o.require(associativity_defect(b.mu()).is_zero() && yb_defect(b.R()).is_zero() &&
                          yi_defect(b.mu(), b.R()).is_zero() && iy_defect(b.mu(), b.R()).is_zero(),
                      where + ": nonzero defect");
        }
    }
    return o;
}

Outcome chain_1_2() {
    Outcome o;
    for (const auto& k : {kQ, kF2, kF101}) {
        for (const auto& [name, b] : test::fixtures_up_to(k, 4)) {
            auto prod = multiply(differential_matrix(b, 2), differential_matrix(b, 1));
            o.require(prod.is_zero(), name + " over " + k.name() + ": D2 D1 != 0");
        }
    }
    Rng rng(1001);
    for (const auto& [name, b] : test::fixtures_up_to(kF101, 4)) {
        for (int t = 0; t < 200; ++t) {
            auto f = random_map(rng, kF101, b.dim(), 1, 1);
            o.require(delta2(b, delta1(b, f)).is_zero(), name + ": delta2 delta1 f != 0");
        }
    }
    return o;
}

Outcome chain_2_3() {
    Outcome o;
    Rng rng(1002);
    for (const auto& [name, b] : test::fixtures_up_to(kF101, 3)) {
        auto d2 = differential_matrix(b, 2);
        Delta3 d3(b);
        for (int t = 0; t < 100; ++t) {
            auto c = random_cochain2(rng, kF101, b.dim(), t % 2 ? 1.0 : 0.2);
            auto image = Cochain3::unflatten(multiply(d2, dense(c, b.dim())), kF101, b.dim());
            o.require(d3(image).is_zero(), name + ": delta3 D2 c != 0");
        }
    }
    return o;
}

Outcome deformation_equivalence() {
    Outcome o;
    Rng rng(1003);
    for (const auto& [name, b] : test::fixtures_up_to(kF101, 4)) {
        ComplexSlice s(b);
        std::size_t cocycles = 0, others = 0;
        for (int t = 0; t < 100; ++t) {
            // Alternate between cocycles, perturbed cocycles and plain random cochains.
            Cochain2 c = random_combination(rng, s.cocycle_basis(), kF101, b.dim());
            if (t % 3 == 1) c += random_cochain2(rng, kF101, b.dim(), 0.02);
            if (t % 3 == 2) c = random_cochain2(rng, kF101, b.dim(), 0.3);
            bool in_kernel = s.is_cocycle(c);
            bool deforms = verify_deformation(DeformationSeries::infinitesimal(b, c)).passed;
            o.require(in_kernel == deforms, name + ": verify_deformation disagrees with D2");
            ++(in_kernel ? cocycles : others);
        }
        o.require(cocycles > 0 && others > 0, name + ": only one direction exercised");
    }
    return o;
}

Outcome obstruction_cocycle() {
    Outcome o;
    for (const auto& k : {kF2, kF3, kF101}) {
        for (const auto& [name, b] : test::fixtures_up_to(k, 3)) {
            ComplexSlice s(b);
            for (const auto& c : s.cocycle_basis())
                o.require(obstruction_is_cocycle(b, c), name + " over " + k.name() + ": bundle not a 3-cocycle");
        }
    }
    return o;
}

Outcome quadratic_extension(std::size_t& extended, std::size_t& blocked) {
    Outcome o;
    for (const auto& k : {kF2, kF101}) {
        for (const auto& [name, b] : test::fixtures_up_to(k, 4)) {
            ComplexSlice s(b);
            const auto& z = s.cocycle_basis();
            auto results = extend_to_quadratic(s, z);
            for (std::size_t i = 0; i < z.size(); ++i) {
                auto where = name + " over " + k.name();
                if (results[i].extended) {
                    ++extended;
                    o.require(verify_deformation(results[i].series(b, z[i])).passed, where + ": extension fails");
                } else {
                    ++blocked;
                    o.require(certificate_valid(s.D2(), results[i]), where + ": bad certificate");
                }
            }
        }
    }
    return o;
}

Outcome classification() {
    Outcome o;
    Rng rng(1007);
    for (const auto& [name, b] : test::fixtures_up_to(kF101, 4)) {
        ComplexSlice s(b);
        for (int t = 0; t < 50; ++t) {
            auto f = random_map(rng, kF101, b.dim(), 1, 1, t % 2 ? 1.0 : 0.3);
            o.require(trivializing_isomorphism(b, f).passed(), name + ": coboundary not trivialized");
            auto c = random_combination(rng, s.cocycle_basis(), kF101, b.dim());
            o.require(deformations_connected(b, c, f).passed(), name + ": c and c + delta1 f not connected");
        }
    }
    return o;
}

Outcome iota_monomorphism(std::string& chosen) {
    Outcome o;
    std::optional<ComplexSlice> best;
    for (const auto& name : {"trivial_dual", "heap_z2"}) {
        ComplexSlice s(make_fixture(name, kF2));
        if (!best || s.h2() > best->h2()) {
            best.emplace(std::move(s));
            chosen = name;
        }
    }
    const auto& b = best->algebra();
    ComplexSlice twisted(twisted_algebra(b));
    auto n = Cochain2::size(b.dim());

    std::vector<Vector> b2r;
    for (const auto& c : twisted.coboundary_basis()) b2r.push_back(dense(c, b.dim()));
    for (const auto& c : best->cocycle_basis()) o.require(twisted.is_cocycle(iota_r(b, c)), "image not in Z2(V_R)");
    for (const auto& c : best->coboundary_basis())
        o.require(in_span(kF2, b2r, dense(iota_r(b, c), b.dim())).member, "B2 not mapped into B2(V_R)");

    // rank of the induced map = dim span(iota(Z2) + B2(V_R)) - dim B2(V_R).
    ExactMatrix m(kF2, n, best->cocycle_basis().size() + b2r.size());
    std::size_t col = 0;
    for (const auto& c : best->cocycle_basis()) m.set_column(col++, iota_r(b, c).flatten());
    for (const auto& v : b2r) m.set_column(col++, to_sparse(v));
    auto induced = rank(m) - b2r.size();
    o.require(induced == best->h2(), "induced map on H2 not injective");
    o.require(best->h2() > 0, "H2 is zero");
    return o;
}

TensorMap normalized_random_f(Rng& rng, const HopfAlgebra& h) {
    // f(1) = 0 and epsilon f = 0; for k[G] the counit sums coordinates.
    auto k = h.field();
    auto d = h.dim();
    TensorMap f(k, d, 1, 1);
    for (std::size_t col = 1; col < d; ++col) {
        Scalar sum = Scalar::zero(k);
        for (std::size_t row = 0; row + 1 < d; ++row) {
            auto v = random_scalar(rng, k);
            f.set(row, col, v);
            sum += v;
        }
        f.set(d - 1, col, -sum);
    }
    return f;
}

Outcome hopf_bridge() {
    Outcome o;
    Rng rng(1009);
    for (std::size_t n : {2, 3}) {
        auto h = group_hopf(FiniteGroup::cyclic(n), kQ);
        auto b = braided_from_hopf(h);
        for (int t = 0; t < 20; ++t) {
            auto f = normalized_random_f(rng, h);
            auto c = hopf_coboundary(h, f);
            auto where = "k[Z/" + std::to_string(n) + "]";
            o.require(check_normalized(h, c), where + ": coboundary not normalized");
            auto psi = psi_map(h, c);
            o.require(psi.phi == yang_baxter_differential(b.R(), 1, -f), where + ": Psi != delta1_YB(-f)");
            o.require(psi.psi == c.xi, where + ": second slot is not xi");
            o.require(antipode_correction(h, c) == compose(f, h.antipode()) - compose(h.antipode(), f),
                      where + ": S' != fS - Sf");
        }
    }
    auto h = dual_numbers_hopf(kF2);
    ComplexSlice s(braided_from_hopf(h));
    auto basis = normalized_cocycle_basis(h);
    o.require(!basis.empty(), "no normalized cocycles on F2[t]/(t^2)");
    for (const auto& c : basis) o.require(s.is_cocycle(psi_map(h, c)), "(Psi, xi) not in Z2");
    return o;
}

Outcome nontriviality(std::size_t& h2) {
    Outcome o;
    auto b = make_fixture("trivial_dual", kF2);
    ComplexSlice s(b);
    h2 = s.h2();
    auto d1 = differential_matrix(b, 1);
    auto d2 = differential_matrix(b, 2);
    auto c2 = Cochain2::size(b.dim());
    auto brute = c2 - test::dense_rank_mod_p(d2) - test::dense_rank_mod_p(d1);
    o.require(brute == h2, "eliminations disagree: " + std::to_string(brute) + " vs " + std::to_string(h2));
    o.require(h2 == 6, "golden H2 = 6, got " + std::to_string(h2));
    return o;
}

}  // namespace

int main() {
    int failures = 0;
    auto run = [&](int id, const std::string& title, double budget, const std::function<Outcome()>& body) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > budget) o.require(false, "over the time budget");
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f s / %.0f s", secs, budget);
        std::cout << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << buf << ")";
        if (!o.note.empty()) std::cout << ": " << o.note;
        std::cout << std::endl;
        if (!o.ok) ++failures;
    };

    std::size_t extended = 0, blocked = 0, golden = 0;
    std::string chosen;
    run(1, "axiom suite", 10, axiom_suite);
    run(2, "chain property 1->2", 30, chain_1_2);
    run(3, "chain property 2->3", 60, chain_2_3);
    run(4, "deformation equivalence", 30, deformation_equivalence);
    run(5, "obstruction cocycle", 60, obstruction_cocycle);
    run(6, "quadratic extension", 60, [&] {
        auto o = quadratic_extension(extended, blocked);
        o.note += (o.note.empty() ? "" : "; ") + std::to_string(extended) + " extended, " +
                  std::to_string(blocked) + " certified obstructed";
        return o;
    });
    run(7, "classification", 30, classification);
    run(8, "iota_R monomorphism", 30, [&] {
        auto o = iota_monomorphism(chosen);
        if (o.ok) o.note = "on " + chosen + " over F_2";
        return o;
    });
    run(9, "Hopf bridge", 30, hopf_bridge);
    run(10, "nontrivial H2", 30, [&] {
        auto o = nontriviality(golden);
        if (o.ok) o.note = "dim H2(trivial_dual, F_2) = " + std::to_string(golden);
        return o;
    });
    return failures == 0 ? 0 : 1;
}
