#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "gwa/multipoly.hpp"

namespace gwa {

/// Polynomial endomorphism of k[z1,z2] given by the coordinate images
/// (f1, f2). As a ring map it acts by substitution: sigma(p) = p(f1, f2).
/// Products are written left to right, i.e. (tau.sigma)(p) = tau(sigma(p)).
struct PlaneEndo {
    MultiPoly f1, f2;

    PlaneEndo();
    PlaneEndo(MultiPoly a, MultiPoly b);

    static PlaneEndo identity();
    static PlaneEndo swap(); // (z2, z1)

    bool operator==(const PlaneEndo& o) const = default;
    bool is_identity() const;
    /// both coordinates of total degree <= 1 with invertible linear part not required here
    bool is_affine() const;
    /// f1 = l1*z1 + g(z2), f2 = l2*z2 + c with l1, l2 nonzero
    bool is_triangular() const;
    std::int64_t max_degree() const;
};

MultiPoly plane_apply(const PlaneEndo& sigma, const MultiPoly& p);
PlaneEndo plane_compose(const PlaneEndo& tau, const PlaneEndo& sigma);

/// (l1*z1 + g1(z2), l2*z2 + g2) with l1, l2 nonzero and g1 univariate in z2.
struct TriangularAuto {
    Scalar lambda1, lambda2;
    MultiPoly g1; // lives in k[z1,z2] but involves only z2
    Scalar g2;

    PlaneEndo to_endo() const;
    std::int64_t beta_degree() const; // deg of g1 (0 when constant/zero)
    static std::optional<TriangularAuto> from_endo(const PlaneEndo& e);
};

struct AffineFactor {
    // (a*z1 + b*z2 + t1, c*z1 + d*z2 + t2), ad - bc != 0
    Scalar a, b, c, d, t1, t2;
    PlaneEndo to_endo() const;
    AffineFactor inverse() const;
    static std::optional<AffineFactor> from_endo(const PlaneEndo& e);
};

struct ElementaryFactor {
    MultiPoly h; // univariate in z2; factor is (z1 + h(z2), z2)
    PlaneEndo to_endo() const;
    ElementaryFactor inverse() const { return {-h}; }
};

struct SwapFactor {
    PlaneEndo to_endo() const { return PlaneEndo::swap(); }
};

using TameFactor = std::variant<AffineFactor, ElementaryFactor, SwapFactor>;

PlaneEndo factor_to_endo(const TameFactor& f);

/// Ordered word of tame factors; composing the factors in order reproduces
/// the automorphism it was built from.
struct TameWord {
    std::vector<TameFactor> factors;

    PlaneEndo compose_all() const;
    TameWord inverse() const;
    TameWord concat(const TameWord& o) const;
};

/// Jung-van der Kulk degree reduction. Either returns a tame word whose
/// composition equals sigma exactly, or throws not_an_automorphism with the
/// obstruction (degree divisibility, leading-form proportionality, constant
/// coordinate, or singular linear part). `max_steps` caps the peeling loop.
TameWord tame_decompose(const PlaneEndo& sigma, int max_steps = 64);

/// Inverse computed by inverting each tame factor; requires sigma to
/// decompose.
PlaneEndo plane_inverse(const PlaneEndo& sigma);

struct DegreeGrowth {
    bool exponential_witness = false;
    int witness_variable = 0; // 1-based when a witness exists
    std::vector<std::vector<std::int64_t>> degrees; // per variable, m = 0..m_max
};

/// Tracks deg(sigma^m(z_i)) for m <= m_max and reports a witness variable if
/// the growth ratio stays >= r at every step. A finite scan cannot prove the
/// unbounded hypothesis, so this is advisory; the classifier never uses it.
DegreeGrowth degree_growth_certificate(const PlaneEndo& sigma, const Scalar& r, int m_max);

} // namespace gwa
