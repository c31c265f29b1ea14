#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwa/plane_endo.hpp"
#include "gwa/poly_io.hpp"
#include "random_gen.hpp"

using namespace gwa;

namespace {
const RingDesc P2{RingKind::polynomial, 2};
MultiPoly p2(const std::string& s) { return parse_poly(s, P2); }
PlaneEndo endo(const std::string& a, const std::string& b) { return PlaneEndo(p2(a), p2(b)); }
} // namespace

TEST_CASE("plane_apply") {
    CHECK(plane_apply(PlaneEndo::swap(), p2("z1^2 + z2")) == p2("z2^2 + z1"));
    CHECK(plane_apply(endo("z1 + z2^3", "z2"), p2("z1")) == p2("z1 + z2^3"));

    // two successive substitutions
    PlaneEndo s = endo("z2", "z1 + z2^2");
    MultiPoly once = plane_apply(s, p2("z2"));
    MultiPoly twice = plane_apply(s, once);
    CHECK(twice == p2("z2") + (p2("z1") + p2("z2^2")).pow(2));
}

TEST_CASE("compose matches substitution order") {
    PlaneEndo e = endo("z1 + z2^2", "z2");
    PlaneEndo pi = PlaneEndo::swap();
    CHECK(plane_compose(e, pi) == endo("z2", "z1 + z2^2"));
    testing::Rng rng(53);
    for (int i = 0; i < 30; ++i) {
        PlaneEndo a = rng.tame_word(3).compose_all();
        PlaneEndo b = rng.tame_word(3).compose_all();
        MultiPoly p = rng.poly(P2, 3, 2);
        CHECK(plane_apply(plane_compose(a, b), p) == plane_apply(a, plane_apply(b, p)));
    }
}

TEST_CASE("tame decomposition on the edge cases") {
    TameWord translation = tame_decompose(endo("z1 + 1", "z2"));
    CHECK(translation.factors.size() == 1);
    CHECK(std::holds_alternative<AffineFactor>(translation.factors.front()));

    TameWord w = tame_decompose(endo("z2", "z1 + z2^2"));
    CHECK(w.compose_all() == endo("z2", "z1 + z2^2"));

    CHECK_THROWS_AS(tame_decompose(endo("z1^2", "z2")), not_an_automorphism);
    CHECK_THROWS_AS(tame_decompose(endo("z1", "z1")), not_an_automorphism);
    CHECK_THROWS_AS(tame_decompose(endo("z1*z2", "z2 + 1")), not_an_automorphism);
    CHECK_THROWS_AS(tame_decompose(endo("1", "z2^2 + z1")), not_an_automorphism);
}

TEST_CASE("recomposition on random tame words") {
    testing::Rng rng(59);
    for (int i = 0; i < 80; ++i) {
        PlaneEndo sigma = rng.tame_word(5, 3).compose_all();
        TameWord w = tame_decompose(sigma);
        CHECK(w.compose_all() == sigma);
    }
}

TEST_CASE("inverse") {
    CHECK(plane_inverse(PlaneEndo::swap()) == PlaneEndo::swap());
    CHECK(plane_inverse(endo("z1 + z2^3", "z2")) == endo("z1 - z2^3", "z2"));
    CHECK(plane_inverse(endo("z2", "z1 + z2^2")) == endo("z2 - z1^2", "z1"));

    testing::Rng rng(61);
    for (int i = 0; i < 60; ++i) {
        PlaneEndo sigma = rng.tame_word(4, 3).compose_all();
        CHECK(plane_compose(plane_inverse(sigma), sigma).is_identity());
        CHECK(plane_compose(sigma, plane_inverse(sigma)).is_identity());
    }
}

TEST_CASE("triangular recognition") {
    CHECK(endo("2*z1 + z2^3", "z2 + 1").is_triangular());
    CHECK_FALSE(endo("z2", "z1").is_triangular());
    CHECK_FALSE(endo("z1 + z1*z2", "z2").is_triangular());
    auto t = TriangularAuto::from_endo(endo("2*z1 + z2^3 - 1", "1/2*z2 + 1"));
    REQUIRE(t.has_value());
    CHECK(t->lambda1 == 2);
    CHECK(t->lambda2 == make_scalar(1, 2));
    CHECK(t->beta_degree() == 3);
    CHECK(t->to_endo() == endo("2*z1 + z2^3 - 1", "1/2*z2 + 1"));
}

TEST_CASE("degree growth certificate") {
    DegreeGrowth g = degree_growth_certificate(endo("z2", "z1 + z2^2"), Scalar(2), 4);
    CHECK(g.exponential_witness);
    CHECK(g.witness_variable == 2);
    CHECK(g.degrees[1] == std::vector<std::int64_t>{1, 2, 4, 8, 16});

    DegreeGrowth tri = degree_growth_certificate(endo("2*z1 + z2^3", "z2 + 1"), Scalar(2), 4);
    CHECK_FALSE(tri.exponential_witness);

    DegreeGrowth idg = degree_growth_certificate(PlaneEndo::identity(), Scalar(2), 4);
    CHECK_FALSE(idg.exponential_witness);
    CHECK(idg.degrees[0] == std::vector<std::int64_t>{1, 1, 1, 1, 1});

    CHECK_THROWS_AS(degree_growth_certificate(PlaneEndo::identity(), Scalar(2), 1),
                    validation_error);
}
