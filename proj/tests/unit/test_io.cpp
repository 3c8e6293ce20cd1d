#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "ybh/constructions.hpp"
#include "ybh/errors.hpp"
#include "ybh/fixtures.hpp"
#include "ybh/hopf.hpp"
#include "ybh/io.hpp"
#include "ybh/random.hpp"

using namespace ybh;

namespace {
const FieldSpec q = FieldSpec::rational();
const FieldSpec f101 = FieldSpec::prime(101);

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("every braided fixture round-trips") {
    for (const auto& k : {q, f101, FieldSpec::prime(2)}) {
        for (const auto& info : braided_fixtures()) {
            if (!fixture_defined(info, k) || info.dim > 9) continue;
            CAPTURE(info.name);
            auto b = make_fixture(info.name, k);
            auto text = dump_document(to_document(b));
            auto doc = parse_document(text);
            auto back = braided_from_document(doc);
            CHECK(back.mu() == b.mu());
            CHECK(back.R() == b.R());
            CHECK(dump_document(doc) == text);
        }
    }
}

TEST_CASE("Hopf fixtures round-trip") {
    for (const auto& info : hopf_fixtures()) {
        auto k = info.only_characteristic ? FieldSpec::prime(*info.only_characteristic) : q;
        auto h = make_hopf_fixture(info.name, k);
        auto back = hopf_from_document(parse_document(dump_document(to_document(h))));
        CHECK(back.delta() == h.delta());
        CHECK(back.antipode() == h.antipode());
    }
}

TEST_CASE("rational scalars survive the trip") {
    TensorMap f(q, 2, 2, 1);
    f.set(1, 3, Scalar::rational(-3, 4));
    auto g = parse_map(dump_map(f), q);
    CHECK(g == f);
}

TEST_CASE("non-associative mu is rejected with a witness") {
    auto b = make_fixture("z2_adjoint", q);
    auto doc = to_document(b);
    doc.mu->set(0, 0, Scalar::zero(q));
    doc.mu->set(1, 0, Scalar::one(q));
    try {
        braided_from_document(doc);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.axiom() == "associativity");
        CHECK(e.witness().size() == 3);
    }
}

TEST_CASE("malformed documents") {
    auto text = dump_document(to_document(make_fixture("z2_adjoint", q)));
    CHECK_THROWS_AS(parse_document(text.substr(0, text.size() / 2)), ParseError);
    CHECK_THROWS_AS(parse_document("{}"), InputError);
    CHECK_THROWS_AS(parse_document("[1,2]"), InputError);
    auto bad = text;
    bad.replace(bad.find("\"ybh/1\""), 7, "\"ybh/9\"");
    CHECK_THROWS_AS(parse_document(bad), InputError);
}

TEST_CASE("field override re-reads scalars") {
    auto doc = to_document(make_fixture("z2_adjoint", q));
    auto text = dump_document(doc);
    auto d = parse_document(text, f101);
    CHECK(d.field == f101);
    CHECK(braided_from_document(d).is_braided());
}

TEST_CASE("series round-trip") {
    auto b = make_fixture("z2_adjoint", q);
    Rng rng(1);
    auto c = random_cochain2(rng, q, 2, 0.5);
    auto s = DeformationSeries::infinitesimal(b, c);
    auto back = parse_series(dump_series(s));
    CHECK(back.phi(1) == c.phi);
    CHECK(back.psi(1) == c.psi);
}

TEST_CASE("parse_field") {
    CHECK(parse_field("q") == q);
    CHECK(parse_field("rational") == q);
    CHECK(parse_field("101") == f101);
    CHECK(parse_field("p", 101) == f101);
    CHECK_THROWS_AS(parse_field("p"), InputError);
    CHECK_THROWS_AS(parse_field("100"), InputError);
    CHECK_THROWS_AS(parse_field("reals"), InputError);
}

TEST_CASE("fnv1a64 reference values") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("stored fixture file loads") {
    auto loaded = load_algebra(test::fixture_path("z2_adjoint.json"));
    REQUIRE(std::holds_alternative<BraidedAlgebra>(loaded));
    CHECK(std::get<BraidedAlgebra>(loaded).is_braided());
    CHECK_FALSE(read_file(test::fixture_path("z2_adjoint.json")).empty());
}
