#include "doctest.h"
#include "oracle.hpp"
#include "ybh/braided.hpp"
#include "ybh/constructions.hpp"
#include "ybh/errors.hpp"
#include "ybh/random.hpp"

using namespace ybh;

namespace {

const FieldSpec f2 = FieldSpec::prime(2);

TensorMap from_bits(unsigned bits, std::size_t rows, std::size_t cols, int in, int out) {
    TensorMap f(f2, 2, in, out);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bits >> (r * cols + c) & 1u) f.set(r, c, Scalar::one(f2));
    return f;
}

bool invertible4(unsigned bits) {
    unsigned row[4];
    for (int r = 0; r < 4; ++r) row[r] = bits >> (4 * r) & 0xFu;
    for (int c = 0, top = 0; c < 4; ++c) {
        int p = -1;
        for (int r = top; r < 4; ++r)
            if (row[r] >> c & 1u) p = r;
        if (p < 0) return false;
        std::swap(row[p], row[top]);
        for (int r = 0; r < 4; ++r)
            if (r != top && (row[r] >> c & 1u)) row[r] ^= row[top];
        ++top;
    }
    return true;
}

struct Census {
    std::vector<TensorMap> r;
    std::vector<TensorMap> mu;
};

const Census& census() {
    static const Census c = [] {
        Census out;
        for (unsigned bits = 0; bits < (1u << 16); ++bits) {
            if (!invertible4(bits)) continue;
            auto r = from_bits(bits, 4, 4, 2, 2);
            if (check_yb(r).passed) out.r.push_back(std::move(r));
        }
        for (unsigned bits = 0; bits < (1u << 8); ++bits) {
            auto mu = from_bits(bits, 2, 4, 2, 1);
            if (check_associative(AssociativeAlgebra(mu)).passed) out.mu.push_back(std::move(mu));
        }
        return out;
    }();
    return c;
}

}  // namespace

TEST_CASE("census of d = 2 structures over F_2") {
    CHECK(census().r.size() == 49);
    CHECK(census().mu.size() == 28);
}

TEST_CASE("mirror exchanges the mixed axioms") {
    const auto& c = census();
    std::vector<BraidedAlgebra> one_sided;
    for (const auto& r : c.r) {
        for (const auto& mu : c.mu) {
            BraidedAlgebra b{AssociativeAlgebra(mu), YangBaxterOperator(r)};
            auto m = mirror(b);
            CHECK(m.yi_holds() == b.iy_holds());
            CHECK(m.iy_holds() == b.yi_holds());
            CHECK(m.associative());
            CHECK(m.yb_holds());
            if (b.yi_holds() != b.iy_holds()) one_sided.push_back(b);
        }
    }
    CHECK(one_sided.size() == 48);
    Rng rng(9);
    for (int t = 0; t < 100; ++t) {
        const auto& b = one_sided[rng() % one_sided.size()];
        auto m = mirror(b);
        CHECK(m.yi_holds() != m.iy_holds());
        CHECK(m.yi_holds() == b.iy_holds());
        CHECK(mirror(m).mu() == b.mu());
        CHECK(mirror(m).R() == b.R());
    }
}

TEST_CASE("defects are zero exactly when checks pass") {
    const auto& c = census();
    for (std::size_t i = 0; i < c.r.size(); i += 7) {
        for (const auto& mu : c.mu) {
            CHECK(check_yi(mu, c.r[i]).passed == yi_defect(mu, c.r[i]).is_zero());
            CHECK(check_iy(mu, c.r[i]).passed == iy_defect(mu, c.r[i]).is_zero());
        }
    }
}

TEST_CASE("braided multiplications stay associative") {
    for (const auto& k : {FieldSpec::rational(), FieldSpec::prime(101)}) {
        for (const auto& [name, b] : test::fixtures_up_to(k, 6)) {
            CAPTURE(name);
            for (int n = 0; n <= 3; ++n)
                CHECK(check_associative(AssociativeAlgebra(braided_multiplication(b, n))).passed);
        }
    }
}

TEST_CASE("identity and zero are braided homomorphisms") {
    for (const auto& [name, b] : test::fixtures_up_to(FieldSpec::prime(101), 6)) {
        CAPTURE(name);
        auto k = b.field();
        CHECK(check_braided_homomorphism(b, b, TensorMap::identity(k, b.dim(), 1)).passed);
        CHECK(check_braided_homomorphism(b, b, TensorMap(k, b.dim(), 1, 1)).passed);
    }
}

TEST_CASE("random perturbations break the axioms with a witness") {
    Rng rng(10);
    auto k = FieldSpec::prime(101);
    auto b = from_mcq(MCQ::conjugation(FiniteGroup::symmetric(3)), k);
    for (int t = 0; t < 20; ++t) {
        auto r = b.R();
        r.add(rng() % r.rows(), rng() % r.cols(), Scalar::one(k));
        auto res = check_yb(r);
        if (!res.passed) CHECK(res.witness.size() == 3);
    }
}
