#include "doctest.h"
#include "oracle.hpp"
#include "ybh/constructions.hpp"
#include "ybh/errors.hpp"
#include "ybh/hopf.hpp"

using namespace ybh;

namespace {
const FieldSpec q = FieldSpec::rational();
}

TEST_CASE("finite groups") {
    auto s3 = FiniteGroup::symmetric(3);
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    CHECK(FiniteGroup::cyclic(4).is_abelian());
    CHECK(FiniteGroup::trivial().order() == 1);
    auto k4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    CHECK(k4.order() == 4);
    for (std::size_t a = 0; a < 4; ++a) CHECK(k4.mul(a, a) == k4.identity());
    // Not associative: row 1 is a permutation but 1*(1*1) != (1*1)*1.
    CHECK_THROWS_AS(FiniteGroup({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), ValidationError);
}

TEST_CASE("MCQ validation") {
    auto c = MCQ::conjugation(FiniteGroup::symmetric(3));
    CHECK(check_mcq(c).passed);
    auto u = MCQ::trivial_union({FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)});
    CHECK(u.size() == 4);
    CHECK(check_mcq(u).passed);

    auto table = MCQ::conjugation(FiniteGroup::cyclic(2)).star_table();
    table[0][1] = 1;
    CHECK_FALSE(check_mcq_table({FiniteGroup::cyclic(2)}, table).passed);
    CHECK_THROWS_AS(MCQ({FiniteGroup::cyclic(2)}, table), ValidationError);
}

TEST_CASE("from_mcq gives braided algebras") {
    for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
        auto b = from_mcq(MCQ::conjugation(g), q);
        CHECK(b.is_braided());
        CHECK(b.dim() == g.order());
    }
    CHECK(from_mcq(MCQ::trivial_union({FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)}), q).is_braided());
}

TEST_CASE("from_mcq of conjugation matches the adjoint braiding of k[G]") {
    for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)}) {
        auto a = from_mcq(MCQ::conjugation(g), q);
        auto b = braided_from_hopf(group_hopf(g, q));
        CHECK(a.mu() == b.mu());
        CHECK(a.R() == b.R());
    }
}

TEST_CASE("heap") {
    for (std::size_t n : {1, 2, 3}) {
        auto h = from_heap(FiniteGroup::cyclic(n), q);
        CHECK(h.dim() == n * n);
        CHECK(h.is_braided());
    }
    // (x,y)*(u,v) = (x u^-1 v, y u^-1 v) on Z/2: R((0,1)(x)(1,1)) = (1,1)(x)(0,1) * ... checked through mu.
    auto h = from_heap(FiniteGroup::cyclic(2), q);
    // mu((x,y) (x) (z,w)) = delta_{y,z} (x,w)
    CHECK(h.mu().at(0 * 2 + 1, (0 * 2 + 1) * 4 + (1 * 2 + 1)).is_one());
    CHECK(h.mu().at(0 * 2 + 1, (0 * 2 + 1) * 4 + (0 * 2 + 1)).is_zero());
}

TEST_CASE("trivial braiding") {
    auto b = trivial_braiding(matrix_algebra(2, q));
    CHECK(b.is_braided());
    CHECK(b.R() == TensorMap::swap(q, 4));
    CHECK(trivial_braiding(dual_numbers(q)).is_braided());
    CHECK(trivial_braiding(group_algebra(FiniteGroup::trivial(), q)).is_braided());
}

TEST_CASE("matrix algebra") {
    auto m = matrix_algebra(2, q);
    CHECK(check_associative(m).passed);
    CHECK(check_unit(m).passed);
    // E_01 E_10 = E_00
    CHECK(m.mu().at(0, 1 * 4 + 2).is_one());
}
