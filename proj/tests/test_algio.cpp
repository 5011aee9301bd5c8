#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "halg/algio.hpp"
#include "halg/hochschild.hpp"

using namespace halg;

TEST_CASE("parse a truncated polynomial file") {
    AlgebraFile f = parse_algebra_string(
        "# one nilpotent generator\n"
        "field Q\n"
        "flavor commutative\n"
        "generator e 0\n"
        "max_weight 1\n"
        "max_degree 0\n");
    CHECK(f.spec.field.is_rational());
    CHECK(f.spec.flavor == Flavor::Commutative);
    REQUIRE(f.spec.gens.size() == 1);
    CHECK(f.spec.gens[0].name == "e");
    CHECK(f.spec.gens[0].degree == 0);
    CHECK(f.bounds.max_weight == 1);
    CHECK(f.spec.dgen.empty());

    // and it really is the dual numbers
    FiniteAlgebra A = from_free(build_algebra(f.spec, f.bounds));
    CHECK(A.dim() == 2);
    ClassicalComplex c = classical_complex(A, 4, 0, 4);
    CHECK(homology_dim_at(c.complex, 0) == 2);
    CHECK(homology_dim_at(c.complex, 1) == 1);
}

TEST_CASE("parse a file with a differential") {
    AlgebraFile f = parse_algebra_string(
        "field Q\n"
        "generator x 2\n"
        "generator y 3\n"
        "d y = x^2\n"
        "max_weight 4\n"
        "max_degree 8\n");
    REQUIRE(f.spec.dgen.count(1) == 1);
    REQUIRE(f.spec.dgen.at(1).size() == 1);
    CHECK(f.spec.dgen.at(1)[0].first == Monomial{0, 0});
    CHECK(f.spec.dgen.at(1)[0].second == 1);
    CHECK_NOTHROW(build_algebra(f.spec, f.bounds));
}

TEST_CASE("polynomial expressions") {
    AlgebraSpec s;
    s.gens = {{"x", 2}, {"y", 2}};
    auto p = parse_poly(s, "3*x^2 - 1/2*x*y + y*x", 1);
    // y*x reorders to x*y (even degrees, no sign) and combines with -1/2*x*y
    REQUIRE(p.size() == 2);
    CHECK(p[0].first == Monomial{0, 0});
    CHECK(p[0].second == 3);
    CHECK(p[1].first == Monomial{0, 1});
    CHECK(p[1].second == Scalar(1, 2));

    // odd generators: y*x = -x*y cancels x*y entirely
    AlgebraSpec odd;
    odd.gens = {{"x", 3}, {"y", 5}};
    CHECK(parse_poly(odd, "x*y + y*x", 1).empty());
    // and an odd square vanishes
    CHECK(parse_poly(odd, "x^2", 1).empty());
}

TEST_CASE("prime field coefficients reduce") {
    AlgebraSpec s;
    s.field = Field::prime(5);
    s.gens = {{"x", 2}};
    auto p = parse_poly(s, "7*x", 1);
    REQUIRE(p.size() == 1);
    CHECK(p[0].second == 2);
    CHECK(parse_poly(s, "5*x", 1).empty());
}

TEST_CASE("parse errors carry the line") {
    CHECK_THROWS_AS(parse_algebra_string("field R\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_string("generator x 0\ngenerator x 1\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_string("generator x 0\nd z = x\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_string("generator x 0\nfrobnicate 3\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_string("generator x 2\nd x = x +\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_string("# only comments\n"), ParseError);
    try {
        parse_algebra_string("field Q\ngenerator x two\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("field names") {
    CHECK(parse_field("Q").is_rational());
    CHECK(parse_field("F7").p() == 7);
    CHECK_THROWS_AS(parse_field("F6"), Error);
    CHECK_THROWS_AS(parse_field("GF2"), ParseError);
}
