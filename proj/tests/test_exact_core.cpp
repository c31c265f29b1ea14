#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwa/multipoly.hpp"
#include "gwa/poly_io.hpp"
#include "random_gen.hpp"

using namespace gwa;

namespace {
const RingDesc P2{RingKind::polynomial, 2};
const RingDesc L2{RingKind::laurent, 2};

MultiPoly parse2(const std::string& s) { return parse_poly(s, P2); }
MultiPoly parseL(const std::string& s) { return parse_poly(s, L2); }
} // namespace

TEST_CASE("scalar helpers") {
    CHECK(make_scalar(6, 4) == make_scalar(3, 2));
    CHECK(format_scalar(make_scalar(-6, 4)) == "-3/2");
    CHECK(scalar_pow(make_scalar(2), -3) == make_scalar(1, 8));
    CHECK(scalar_pow(make_scalar(0), 5) == 0);
    CHECK_THROWS_AS(scalar_pow(make_scalar(0), -1), validation_error);
    CHECK(parse_scalar("3/2") == make_scalar(3, 2));
    CHECK(parse_scalar("-7") == make_scalar(-7));
    CHECK_THROWS_AS(parse_scalar("3/-2"), parse_error);
}

TEST_CASE("polynomial arithmetic") {
    CHECK(parse2("z1 + z2") * parse2("z1 - z2") == parse2("z1^2 - z2^2"));
    CHECK((parse2("z1^2 + 3*z2") * MultiPoly::zero(RingKind::polynomial, 2)).is_zero());
    CHECK(parseL("z1^-1") * parseL("z1") == MultiPoly::one(RingKind::laurent, 2));

    MultiPoly p = parse2("z1 + 2*z2");
    CHECK(p - p == MultiPoly::zero(RingKind::polynomial, 2));
    CHECK(-p + p == MultiPoly::zero(RingKind::polynomial, 2));
}

TEST_CASE("arity and ring mismatches are rejected") {
    MultiPoly p(RingKind::polynomial, 2), q(RingKind::polynomial, 3);
    CHECK_THROWS_AS(p + q, ring_error);
    MultiPoly l(RingKind::laurent, 2);
    CHECK_THROWS_AS(p * l, ring_error);
    Monomial neg({-1, 0});
    MultiPoly bad(RingKind::polynomial, 2);
    CHECK_THROWS_AS(bad.add_term(neg, Scalar(1)), ring_error);
}

TEST_CASE("total degree") {
    CHECK(*parse2("z1*z2^2 + z1^3").total_degree() == 3);
    CHECK_FALSE(MultiPoly::zero(RingKind::polynomial, 2).total_degree().has_value());
    CHECK(*parse2("5").total_degree() == 0);
    CHECK_THROWS_AS(parseL("z1^2").total_degree(), ring_error);
    // deg(pq) = deg(p) + deg(q) for nonzero inputs
    testing::Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        MultiPoly a = rng.nonzero_poly(P2), b = rng.nonzero_poly(P2);
        MultiPoly ab = a * b;
        REQUIRE_FALSE(ab.is_zero()); // domain
        CHECK(*ab.total_degree() == *a.total_degree() + *b.total_degree());
    }
}

TEST_CASE("substitution") {
    MultiPoly p = parse2("z1 + z2");
    CHECK(substitute(p, {parse2("z2"), parse2("z1")}) == parse2("z1 + z2"));
    CHECK(substitute(parse2("z1^2"), {parse2("z1 + 1"), parse2("z2")}) ==
          parse2("z1^2 + 2*z1 + 1"));
    CHECK(substitute(parseL("z1^-1"), {parseL("2*z2"), parseL("z1")}) == parseL("1/2*z2^-1"));
    CHECK_THROWS_AS(substitute(parseL("z1^-1"), {parseL("z1 + z2"), parseL("z2")}), ring_error);
}

TEST_CASE("parse and format") {
    MultiPoly p = parse2("z1^2 - 3/2*z2");
    CHECK(p.term_count() == 2);
    CHECK(p.coeff(Monomial({0, 1})) == make_scalar(-3, 2));

    CHECK(parseL("z1^-1").coeff(Monomial({-1, 0})) == 1);
    CHECK_THROWS_AS(parse2("z1^-1"), parse_error);
    CHECK_THROWS_AS(parse2("z1 +"), parse_error);
    CHECK_THROWS_AS(parse2("w1"), parse_error);
    CHECK_THROWS_AS(parse2("z3"), parse_error);

    CHECK(format_poly(parse2("0")) == "0");
    CHECK(format_poly(parse2("z1^2 - 3/2*z2")) == "z1^2 - 3/2*z2");
    CHECK(format_poly(parse2("2*z1*z2 + 1")) == "2*z1*z2 + 1");

    // whitespace insignificant
    CHECK(parse2(" z1 ^ 2+ 3 * z2 ") == parse2("z1^2+3*z2"));
    // repeated variables multiply out
    CHECK(parse2("z1*z1") == parse2("z1^2"));
}

TEST_CASE("format/parse round trip on random polynomials") {
    testing::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        RingDesc ring = rng.coin() ? P2 : L2;
        MultiPoly p = rng.poly(ring, 5, 4);
        CHECK(parse_poly(format_poly(p), ring) == p);
    }
    // arity 1 and 3 as well
    for (int i = 0; i < 50; ++i) {
        MultiPoly p = rng.poly({RingKind::polynomial, 1}, 4, 5);
        CHECK(parse_poly(format_poly(p), {RingKind::polynomial, 1}) == p);
        MultiPoly q = rng.poly({RingKind::laurent, 3}, 4, 2);
        CHECK(parse_poly(format_poly(q), {RingKind::laurent, 3}) == q);
    }
}

TEST_CASE("ring axioms on random triples") {
    testing::Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        RingDesc ring = rng.coin() ? P2 : L2;
        MultiPoly a = rng.poly(ring), b = rng.poly(ring), c = rng.poly(ring);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + (b + c) == (a + b) + c);
    }
}

TEST_CASE("zero denominator is rejected before canonicalization") {
    CHECK_THROWS_AS(parse_scalar("3/0"), validation_error);
    CHECK_THROWS_AS(make_scalar(1, 0), validation_error);
}
