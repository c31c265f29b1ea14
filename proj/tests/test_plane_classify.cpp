#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwa/plane_classify.hpp"
#include "gwa/poly_io.hpp"
#include "random_gen.hpp"

using namespace gwa;

namespace {
const RingDesc P2{RingKind::polynomial, 2};
MultiPoly p2(const std::string& s) { return parse_poly(s, P2); }
PlaneEndo endo(const std::string& a, const std::string& b) { return PlaneEndo(p2(a), p2(b)); }

PlaneEndo conjugate(const PlaneEndo& delta, const PlaneEndo& sigma) {
    return plane_compose(plane_compose(plane_inverse(delta), sigma), delta);
}

void check_three_cert(const PlaneEndo& sigma, const CyclicReduction& red) {
    REQUIRE(red.triangularizable);
    const auto& cert = *red.cert;
    PlaneEndo lhs = conjugate(cert.conjugator_endo, sigma);
    CHECK(lhs == cert.reduced_endo);
    CHECK(cert.conjugator.compose_all() == cert.conjugator_endo);
    if (cert.triangular) CHECK(cert.triangular->to_endo() == cert.reduced_endo);
}

void check_lane_cert(const PlaneEndo& sigma, const LaneForm& lane) {
    PlaneEndo lhs = conjugate(lane.conjugator_endo, sigma);
    CHECK(lhs == lane.compose_normal_form());
    CHECK(lane.conjugator.compose_all() == lane.conjugator_endo);
    for (auto d : lane.degrees) CHECK(d >= 2);
}
} // namespace

TEST_CASE("already triangular words reduce with a trivial conjugator") {
    CyclicReduction red = is_triangularizable(endo("z1 + z2^3", "z2"));
    REQUIRE(red.triangularizable);
    CHECK(red.cert->conjugator.factors.empty());
    CHECK(red.cert->triangular.has_value());
}

TEST_CASE("swap is handled through the affine branch") {
    CyclicReduction red = is_triangularizable(PlaneEndo::swap());
    REQUIRE(red.triangularizable);
    CHECK(red.cert->affine_form.has_value());
    // independent oracle: the explicit base change (z1+z2, z1-z2)
    // diagonalizes the swap
    PlaneEndo delta = endo("z1 + z2", "z1 - z2");
    PlaneEndo diag = conjugate(delta, PlaneEndo::swap());
    CHECK(diag == endo("z1", "-z2"));
    CHECK(diag.is_triangular());
}

TEST_CASE("shift-conjugated triangular maps") {
    testing::Rng rng(67);
    for (int i = 0; i < 40; ++i) {
        PlaneEndo tau = rng.triangular().to_endo();
        PlaneEndo delta = rng.tame_word(3, 2).compose_all();
        PlaneEndo sigma = conjugate(delta, tau); // delta^{-1} tau delta is triangularizable too
        CyclicReduction red = is_triangularizable(sigma);
        check_three_cert(sigma, red);
    }
}

TEST_CASE("lane form for the quadratic flip") {
    PlaneEndo sigma = endo("z2", "z1 + z2^2");
    CyclicReduction red = is_triangularizable(sigma);
    REQUIRE_FALSE(red.triangularizable);
    REQUIRE(red.lane.has_value());
    CHECK(red.lane->degrees == std::vector<std::int64_t>{2});
    check_lane_cert(sigma, *red.lane);

    // oracle: degree growth doubles
    DegreeGrowth g = degree_growth_certificate(sigma, Scalar(2), 4);
    CHECK(g.exponential_witness);
}

TEST_CASE("lane degrees multiply along iterates of the normal form") {
    PlaneEndo sigma = endo("z2", "z1 + z2^2");
    CyclicReduction red = is_triangularizable(sigma);
    REQUIRE(red.lane.has_value());
    PlaneEndo nf = red.lane->compose_normal_form();
    std::int64_t d = red.lane->degree_product();
    MultiPoly p = p2("z2");
    std::int64_t expect = 1;
    for (int m = 1; m <= 4; ++m) {
        p = plane_apply(nf, p);
        expect *= d;
        CHECK(*p.total_degree() == expect);
    }
}

TEST_CASE("random lane-shaped compositions classify as infinity") {
    testing::Rng rng(71);
    for (int i = 0; i < 20; ++i) {
        // tau_1 pi tau_2 pi ... tau_s pi with every beta degree >= 2
        int s = rng.uniform(1, 2);
        PlaneEndo sigma = PlaneEndo::identity();
        for (int k = 0; k < s; ++k) {
            sigma = plane_compose(sigma, rng.triangular(2, 3).to_endo());
            sigma = plane_compose(sigma, PlaneEndo::swap());
        }
        // optional extra conjugation
        PlaneEndo delta = rng.tame_word(2, 2).compose_all();
        sigma = conjugate(delta, sigma);

        GKVerdictPlane v = classify_gk_plane(sigma);
        REQUIRE(v.kind == GKVerdictPlane::Kind::infinity);
        check_lane_cert(sigma, *v.lane);
    }
}

TEST_CASE("verdict is conjugation invariant") {
    testing::Rng rng(73);
    for (int i = 0; i < 25; ++i) {
        PlaneEndo base = rng.coin() ? rng.triangular().to_endo()
                                    : plane_compose(rng.triangular(2, 2).to_endo(),
                                                    PlaneEndo::swap());
        GKVerdictPlane v0 = classify_gk_plane(base);
        PlaneEndo delta = rng.tame_word(3, 2).compose_all();
        GKVerdictPlane v1 = classify_gk_plane(conjugate(delta, base));
        CHECK(v0.kind == v1.kind);
    }
}

TEST_CASE("triangularizable implies bounded degree sequence") {
    testing::Rng rng(79);
    for (int i = 0; i < 15; ++i) {
        PlaneEndo tau = rng.triangular().to_endo();
        PlaneEndo delta = rng.tame_word(2, 2).compose_all();
        PlaneEndo sigma = conjugate(delta, tau);
        REQUIRE(classify_gk_plane(sigma).kind == GKVerdictPlane::Kind::three);
        DegreeGrowth g = degree_growth_certificate(sigma, Scalar(2), 6);
        CHECK_FALSE(g.exponential_witness);
        // degrees stabilize: the tail of each sequence is eventually periodic
        // in value (bounded by the locally algebraic property); check boundedness
        for (const auto& seq : g.degrees) {
            std::int64_t mx = 0;
            for (auto dd : seq) mx = std::max(mx, dd);
            CHECK(seq.back() <= mx);
            CHECK(mx <= 1024);
        }
    }
}

TEST_CASE("classifier rejects non-automorphisms") {
    CHECK_THROWS_AS(classify_gk_plane(endo("z1^2", "z2")), not_an_automorphism);
}

TEST_CASE("gk verdicts on the two sides") {
    GKVerdictPlane tri = classify_gk_plane(endo("2*z1 + z2^3", "z2 + 1"));
    CHECK(tri.kind == GKVerdictPlane::Kind::three);
    GKVerdictPlane lane = classify_gk_plane(endo("z2", "z1 + z2^2"));
    CHECK(lane.kind == GKVerdictPlane::Kind::infinity);
}
