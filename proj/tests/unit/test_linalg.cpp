#include "doctest.h"
#include "oracle.hpp"
#include "ybh/errors.hpp"
#include "ybh/linalg.hpp"

using namespace ybh;
using ybh::test::Q;
using ybh::test::S;

namespace {
const FieldSpec q = FieldSpec::rational();
const FieldSpec f2 = FieldSpec::prime(2);

ExactMatrix mat(const FieldSpec& k, std::initializer_list<std::initializer_list<long>> rows, std::size_t cols) {
    std::vector<std::vector<Scalar>> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (long v : row) r.back().push_back(Scalar::from_int(k, v));
    }
    return ExactMatrix::from_rows(k, r, cols);
}
}  // namespace

TEST_CASE("rref examples") {
    auto id = mat(q, {{1, 0}, {0, 1}}, 2);
    auto r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.rank == 2);

    auto m = rref(mat(q, {{1, 2}, {2, 4}}, 2));
    CHECK(m.reduced == mat(q, {{1, 2}, {0, 0}}, 2));
    CHECK(m.rank == 1);

    auto m2 = rref(mat(f2, {{1, 1}, {1, 1}}, 2));
    CHECK(m2.reduced == mat(f2, {{1, 1}, {0, 0}}, 2));
    CHECK(m2.rank == 1);
}

TEST_CASE("rref is unavailable over truncated rings") {
    TruncatedMatrix t(2, 2, TruncatedScalar(q, 2));
    CHECK_THROWS_AS(rref(t), UnsupportedRingError);
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(mat(q, {{1, 0}, {0, 1}}, 2)).empty());
    auto zero = kernel_basis(ExactMatrix(q, 3, 3));
    REQUIRE(zero.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(zero[i][j].is_one() == (i == j));
    auto k = kernel_basis(mat(q, {{1, 1}}, 2));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vector{Q(-1), Q(1)});
}

TEST_CASE("solve_linear examples") {
    auto id = mat(q, {{1, 0}, {0, 1}}, 2);
    auto s = solve_linear(id, {Q(3), Q(4)});
    CHECK(s.solvable);
    CHECK(s.solution == Vector{Q(3), Q(4)});

    auto none = solve_linear(ExactMatrix(q, 2, 2), {Q(1), Q(0)});
    CHECK_FALSE(none.solvable);
    REQUIRE(none.certificate.size() == 2);
    CHECK((none.certificate[0] * Q(1) + none.certificate[1] * Q(0)).is_one());

    auto free = solve_linear(mat(q, {{1, 1}}, 2), {Q(2)});
    CHECK(free.solvable);
    CHECK(free.solution == Vector{Q(2), Q(0)});

    CHECK_THROWS_AS(solve_linear(id, {Q(1)}), InputError);
}

TEST_CASE("certificate is a left witness") {
    auto m = mat(q, {{1, 2}, {2, 4}, {0, 1}}, 2);
    Vector b{Q(1), Q(3), Q(0)};
    auto s = solve_linear(m, b);
    REQUIRE_FALSE(s.solvable);
    for (const auto& x : multiply(m.transpose(), s.certificate)) CHECK(x.is_zero());
    Scalar dot = Scalar::zero(q);
    for (std::size_t i = 0; i < b.size(); ++i) dot += s.certificate[i] * b[i];
    CHECK(dot.is_one());
}

TEST_CASE("solve_linear_many shares one elimination") {
    auto m = mat(S(f2, 1).field(), {{1, 1}, {0, 0}}, 2);
    auto rs = solve_linear_many(m, {{S(f2, 1), S(f2, 0)}, {S(f2, 0), S(f2, 1)}});
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].solvable);
    CHECK_FALSE(rs[1].solvable);
}

TEST_CASE("in_span examples") {
    auto e = in_span(q, {}, {Q(0), Q(0)});
    CHECK(e.member);
    CHECK(e.coordinates.empty());
    CHECK_FALSE(in_span(q, {{Q(1), Q(0)}}, {Q(0), Q(1)}).member);
    auto t = in_span(q, {{Q(1), Q(1)}}, {Q(2), Q(2)});
    CHECK(t.member);
    CHECK(t.coordinates == Vector{Q(2)});
    CHECK_THROWS_AS(in_span(q, {{Q(1)}}, {Q(1), Q(2)}), InputError);
}

TEST_CASE("rational elimination keeps exact fractions") {
    auto m = mat(q, {{2, 3, 5}, {7, 11, 13}, {17, 19, 23}}, 3);
    CHECK(rank(m) == 3);
    auto s = solve_linear(m, {Q(1), Q(0), Q(0)});
    REQUIRE(s.solvable);
    CHECK(multiply(m, s.solution) == Vector{Q(1), Q(0), Q(0)});
}
