#include "doctest.h"
#include "oracle.hpp"
#include "ybh/constructions.hpp"
#include "ybh/errors.hpp"
#include "ybh/tensor_map.hpp"

using namespace ybh;
using ybh::test::map_of;

namespace {
const FieldSpec q = FieldSpec::rational();

TensorMap z2_mu() { return group_algebra(FiniteGroup::cyclic(2), q).mu(); }
}  // namespace

TEST_CASE("multi-index encoding is lexicographic, first factor most significant") {
    std::vector<std::size_t> idx{1, 0, 2};
    CHECK(encode(idx, 3) == 1 * 9 + 0 * 3 + 2);
    CHECK(decode(11, 3, 3) == idx);
    for (std::size_t i = 0; i < 27; ++i) CHECK(encode(decode(i, 3, 3), 3) == i);
}

TEST_CASE("identity_map") {
    CHECK(identity_map(q, 2, 1).to_dense() ==
          std::vector<std::vector<Scalar>>{{Scalar::one(q), Scalar::zero(q)}, {Scalar::zero(q), Scalar::one(q)}});
    auto id2 = identity_map(q, 2, 2);
    CHECK(id2.rows() == 4);
    CHECK(id2.cols() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(id2.at(i, i).is_one());
    CHECK(id2.nnz() == 4);
    auto id0 = identity_map(q, 3, 0);
    CHECK(id0.rows() == 1);
    CHECK(id0.cols() == 1);
    CHECK(id0.at(0, 0).is_one());
}

TEST_CASE("tensor_product") {
    CHECK(tensor_product(identity_map(q, 3, 1), identity_map(q, 3, 1)) == identity_map(q, 3, 2));

    auto flip = map_of(q, 2, 1, 1, {{1, 0, 1}, {0, 1, 1}});
    auto f = tensor_product(flip, identity_map(q, 2, 1));
    // e0 (x) e0 -> e1 (x) e0
    CHECK(f.at(encode(std::vector<std::size_t>{1, 0}, 2), 0).is_one());
    CHECK(f.column(0).size() == 1);

    auto mm = tensor_product(z2_mu(), z2_mu());
    CHECK(mm.in_arity() == 4);
    CHECK(mm.out_arity() == 2);
    CHECK(mm.at(0, encode(std::vector<std::size_t>{1, 1, 1, 1}, 2)).is_one());

    CHECK_THROWS_AS(tensor_product(identity_map(q, 2, 1), identity_map(q, 3, 1)), InputError);
}

TEST_CASE("compose") {
    auto b = from_mcq(MCQ::conjugation(FiniteGroup::symmetric(3)), q);
    CHECK(compose(identity_map(q, 6, 2), b.R()) == b.R());
    CHECK(compose(b.R(), identity_map(q, 6, 2)) == b.R());

    auto mu = z2_mu();
    auto assoc = compose(mu, tensor_product(mu, identity_map(q, 2, 1)));
    CHECK(assoc.at(1, 7).is_one());  // (a a) a = a
    CHECK(assoc.column(7).size() == 1);

    try {
        compose(mu, identity_map(q, 2, 1));
        FAIL("expected an arity error");
    } catch (const ArityError& e) {
        std::string what = e.what();
        CHECK(what.find('1') != std::string::npos);
        CHECK(what.find('2') != std::string::npos);
    }
}

TEST_CASE("linear_combination") {
    auto r = TensorMap::swap(q, 2);
    CHECK(linear_combination({{Scalar::one(q), r}, {-Scalar::one(q), r}}).is_zero());
    auto two = linear_combination({{Scalar::from_int(q, 2), identity_map(q, 2, 1)}});
    CHECK(two.at(0, 0) == Scalar::from_int(q, 2));
    CHECK(two.at(1, 0).is_zero());

    auto mu = z2_mu();
    auto f = identity_map(q, 2, 1), i1 = identity_map(q, 2, 1);
    auto d1 = linear_combination({{Scalar::one(q), compose(mu, tensor(f, i1))},
                                  {Scalar::one(q), compose(mu, tensor(i1, f))},
                                  {-Scalar::one(q), compose(f, mu)}});
    CHECK(d1 == mu);

    CHECK_THROWS_AS(linear_combination({}), InputError);
    CHECK_THROWS_AS(linear_combination({{Scalar::one(q), r}, {Scalar::one(q), mu}}), InputError);
}

TEST_CASE("flatten and unflatten") {
    auto z = flatten(TensorMap(q, 2, 1, 1));
    CHECK(z.size() == 4);
    for (const auto& x : z) CHECK(x.is_zero());

    auto r = from_mcq(MCQ::conjugation(FiniteGroup::symmetric(3)), q).R();
    CHECK(unflatten(flatten(r), q, 6, 2, 2) == r);

    auto id = flatten(identity_map(q, 3, 1));
    REQUIRE(id.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) CHECK(id[i].is_one() == (i == 0 || i == 4 || i == 8));

    std::vector<Scalar> bad(5, Scalar::zero(q));
    CHECK_THROWS_AS(unflatten(bad, q, 2, 1, 1), InputError);
}

TEST_CASE("permutation and reversal") {
    auto p = TensorMap::permutation(q, 2, {1, 2, 0});
    // e_{i0 i1 i2} -> e_{i1 i2 i0}
    CHECK(p.at(encode(std::vector<std::size_t>{0, 1, 1}, 2), encode(std::vector<std::size_t>{1, 0, 1}, 2)).is_one());
    CHECK(reverse_factors(TensorMap::swap(q, 3)) == TensorMap::swap(q, 3));
    auto mu = z2_mu();
    CHECK(reverse_factors(reverse_factors(mu)) == mu);
    CHECK_THROWS_AS(TensorMap::permutation(q, 2, {0, 0}), InputError);
}

TEST_CASE("first_difference reports column then row") {
    auto a = identity_map(q, 2, 1);
    auto b = a;
    b.set(0, 1, Scalar::from_int(q, 5));
    auto diff = first_difference(a, b);
    REQUIRE(diff.has_value());
    CHECK(diff->first == 1);
    CHECK(diff->second == 0);
    CHECK_FALSE(first_difference(a, a).has_value());
}
