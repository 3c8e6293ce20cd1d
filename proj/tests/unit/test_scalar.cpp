#include "doctest.h"
#include "oracle.hpp"
#include "ybh/errors.hpp"
#include "ybh/scalar.hpp"

using namespace ybh;
using ybh::test::Q;

TEST_CASE("rational_normalize reduces and fixes the sign") {
    CHECK(rational_normalize(2, -4).to_string() == "-1/2");
    CHECK(rational_normalize(0, 7).to_string() == "0");
    CHECK(rational_normalize(0, 7) == Scalar::zero(FieldSpec::rational()));
    CHECK(rational_normalize(6, 3).to_string() == "2");
    CHECK(rational_normalize(6, 3) == Q(2));
    CHECK_THROWS_AS(rational_normalize(1, 0), InputError);
}

TEST_CASE("prime fields validate the modulus") {
    CHECK(FieldSpec::prime(101).characteristic() == 101u);
    CHECK_THROWS_AS(FieldSpec::prime(1), InputError);
    CHECK_THROWS_AS(FieldSpec::prime(91), InputError);
    CHECK_THROWS_AS(FieldSpec::prime(2147483659ULL), InputError);
    CHECK(FieldSpec::rational() != FieldSpec::prime(2));
}

TEST_CASE("residues are canonical in [0, p)") {
    auto k = FieldSpec::prime(7);
    CHECK(Scalar::from_int(k, -1).residue_value() == 6u);
    CHECK(Scalar::from_int(k, 15) == Scalar::from_int(k, 1));
    CHECK((Scalar::from_int(k, 3) * Scalar::from_int(k, 5)).residue_value() == 1u);
    CHECK(Scalar::from_int(k, 3).inverse() == Scalar::from_int(k, 5));
    CHECK_THROWS_AS(Scalar::zero(k).inverse(), InputError);
}

TEST_CASE("scalar text syntax") {
    auto q = FieldSpec::rational();
    auto f5 = FieldSpec::prime(5);
    CHECK(Scalar::parse("-6/4", q).to_string() == "-3/2");
    CHECK(Scalar::parse("7", q) == Q(7));
    CHECK(Scalar::parse("7", f5).residue_value() == 2u);
    CHECK(Scalar::parse("1/2", f5).residue_value() == 3u);
    CHECK_THROWS_AS(Scalar::parse("x", q), InputError);
    CHECK_THROWS_AS(Scalar::parse("1/0", q), InputError);
}

TEST_CASE("mixing fields is an input error") {
    CHECK_THROWS_AS(Q(1) + Scalar::one(FieldSpec::prime(3)), InputError);
}

TEST_CASE("truncated_mul") {
    auto q = FieldSpec::rational();
    auto one = Scalar::one(q);
    TruncatedScalar a({one, one}, q), b({one, -one}, q);
    CHECK(truncated_mul(a, b) == TruncatedScalar::constant(one, 2));

    TruncatedScalar c({one, one, Scalar::zero(q)}, q);
    auto sq = truncated_mul(c, c);
    CHECK(sq.to_strings() == std::vector<std::string>{"1", "2", "1"});

    auto h = TruncatedScalar::hbar(q, 2);
    CHECK(truncated_mul(h, h).is_zero());

    CHECK_THROWS_AS(truncated_mul(a, c), InputError);
    CHECK_THROWS_AS(truncated_mul(a, TruncatedScalar::hbar(FieldSpec::prime(3), 2)), InputError);
}

TEST_CASE("hbar_coefficient") {
    auto q = FieldSpec::rational();
    auto a = TruncatedScalar::parse({"3", "5"}, q);
    CHECK(hbar_coefficient(a, 1) == Q(5));
    CHECK(hbar_coefficient(a, 0) == Q(3));
    CHECK(hbar_coefficient(TruncatedScalar(q, 2), 1).is_zero());
    CHECK_THROWS_AS(hbar_coefficient(a, 2), InputError);
}

TEST_CASE("truncated inverse of a unit") {
    auto k = FieldSpec::prime(101);
    auto a = TruncatedScalar::parse({"3", "5", "7"}, k);
    CHECK(a.is_unit());
    CHECK(a * a.inverse() == TruncatedScalar::constant(Scalar::one(k), 3));
    CHECK_THROWS_AS(TruncatedScalar::hbar(k, 3).inverse(), InputError);
}
