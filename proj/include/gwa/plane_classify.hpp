#pragma once

#include <optional>
#include <vector>

#include "gwa/plane_endo.hpp"

namespace gwa {

/// Alternating normal form tau_1.pi.tau_2.pi...tau_s.pi reached when cyclic
/// reduction in the amalgamated product of the affine and triangular
/// subgroups cannot shorten the word; every interleaved polynomial has
/// degree >= 2, which forces the coordinate degrees of the iterates to
/// multiply, hence exponential growth.
struct LaneForm {
    TameWord conjugator;          // delta with delta^{-1}.sigma.delta = the normal form
    PlaneEndo conjugator_endo;
    std::vector<TriangularAuto> taus;
    std::vector<std::int64_t> degrees; // deg(beta_i), each >= 2

    PlaneEndo compose_normal_form() const;
    std::int64_t degree_product() const;
};

/// Certificate that sigma is conjugate to a triangular automorphism (or is
/// affine, which the classifier treats as the bounded-growth side directly;
/// over the rationals an affine map need not triangularize by a rational
/// conjugation, and the dichotomy only needs the degree bound).
struct TriangularizableCert {
    TameWord conjugator;
    PlaneEndo conjugator_endo;
    std::optional<TriangularAuto> triangular; // set unless the reduced word is affine
    std::optional<PlaneEndo> affine_form;     // set for the affine case
    PlaneEndo reduced_endo;
};

struct CyclicReduction {
    bool triangularizable = false;
    std::optional<TriangularizableCert> cert;
    std::optional<LaneForm> lane;
};

/// Rewrites the word in the amalgamated product, conjugating boundary
/// factors away until the word has length <= 1 (triangularizable) or reaches
/// the alternating Lane shape.
CyclicReduction cyclic_reduce(const TameWord& word);

/// Decides conjugacy to a triangular automorphism, with certificate either
/// way. Throws not_an_automorphism when sigma fails tame decomposition.
CyclicReduction is_triangularizable(const PlaneEndo& sigma);

struct GKVerdictPlane {
    enum class Kind { three, infinity } kind = Kind::three;
    std::optional<TriangularizableCert> three_cert;
    std::optional<LaneForm> lane;
};

/// GK-dimension of k[z1,z2](sigma, a): 3 when sigma is conjugate to a
/// triangular automorphism, infinity otherwise. Independent of the defining
/// element.
GKVerdictPlane classify_gk_plane(const PlaneEndo& sigma);

} // namespace gwa
