#include "gwa/plane_classify.hpp"

namespace gwa {

namespace {

bool is_aff(const PlaneEndo& e) { return e.is_affine(); }
bool is_tri(const PlaneEndo& e) { return e.is_triangular(); }

// letters of the amalgamated word; every letter is an automorphism lying in
// the affine subgroup, the triangular subgroup, or their intersection B
struct Letter {
    PlaneEndo endo;
};

PlaneEndo letter_inverse(const PlaneEndo& e) { return plane_inverse(e); }

// merge pass: drop identities, combine neighbours that share a subgroup
void normalize(std::vector<Letter>& w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < w.size();) {
            if (w[i].endo.is_identity()) {
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                continue;
            }
            ++i;
        }
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            const PlaneEndo& x = w[i].endo;
            const PlaneEndo& y = w[i + 1].endo;
            bool both_aff = is_aff(x) && is_aff(y);
            bool both_tri = is_tri(x) && is_tri(y);
            if (both_aff || both_tri) {
                w[i].endo = plane_compose(x, y);
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
                break;
            }
        }
    }
}

// Bruhat split of an affine letter outside B: a = b1 . pi . b2 with b1, b2
// in B (triangular affine maps).
struct BruhatSplit {
    PlaneEndo b1, b2;
};

BruhatSplit bruhat_split(const PlaneEndo& a) {
    auto f = AffineFactor::from_endo(a);
    if (!f) throw error("internal: bruhat split of a non-affine letter");
    if (f->c == 0) throw error("internal: bruhat split of a letter already in B");
    // linear parts compose in reverse word order, so solving
    // M(a) = M(b2) pi M(b1) for upper-triangular blocks pins b2 first
    Scalar det = f->a * f->d - f->b * f->c;
    AffineFactor b2{-det / f->c, f->a, Scalar(0), f->c, Scalar(0), Scalar(0)};
    PlaneEndo b2e = b2.to_endo();
    PlaneEndo b1 = plane_compose(plane_compose(a, b2.inverse().to_endo()), PlaneEndo::swap());
    if (!is_tri(b1) || !is_aff(b1)) throw error("internal: bruhat remainder not in B");
    if (!(plane_compose(plane_compose(b1, PlaneEndo::swap()), b2e) == a))
        throw error("internal: bruhat split does not recompose");
    return {b1, b2e};
}

// triangular automorphism as [affine part, pure shear] tame factors
TameWord triangular_to_word(const PlaneEndo& t) {
    auto tri = TriangularAuto::from_endo(t);
    if (!tri) throw error("internal: letter is not triangular");
    MultiPoly z1 = MultiPoly::variable(RingKind::polynomial, 2, 1);
    MultiPoly z2 = MultiPoly::variable(RingKind::polynomial, 2, 2);
    Monomial m2(2);
    m2.e[1] = 1;
    Scalar lin = tri->g1.coeff(m2);
    MultiPoly g_low = z2 * lin + MultiPoly::constant(RingKind::polynomial, 2, tri->g1.constant_term());
    MultiPoly g_high = tri->g1 - g_low;
    AffineFactor aff{tri->lambda1, lin, Scalar(0), tri->lambda2, tri->g1.constant_term(), tri->g2};
    TameWord out;
    out.factors.push_back(aff);
    if (!g_high.is_zero()) {
        // h with g_high(z2) = h(lambda2 z2 + g2)
        MultiPoly shift =
            (z2 - MultiPoly::constant(RingKind::polynomial, 2, tri->g2)) * (Scalar(1) / tri->lambda2);
        MultiPoly h = substitute(g_high, {z1, shift});
        out.factors.push_back(ElementaryFactor{h});
    }
    if (!(out.compose_all() == t)) throw error("internal: triangular letter split failed");
    return out;
}

TameWord letter_to_word(const PlaneEndo& e) {
    if (is_aff(e)) {
        auto f = AffineFactor::from_endo(e);
        if (!f) throw error("internal: affine letter without invertible linear part");
        TameWord w;
        w.factors.push_back(*f);
        return w;
    }
    return triangular_to_word(e);
}

} // namespace

PlaneEndo LaneForm::compose_normal_form() const {
    PlaneEndo acc = PlaneEndo::identity();
    for (const auto& t : taus) {
        acc = plane_compose(acc, t.to_endo());
        acc = plane_compose(acc, PlaneEndo::swap());
    }
    return acc;
}

std::int64_t LaneForm::degree_product() const {
    std::int64_t p = 1;
    for (auto d : degrees) p *= d;
    return p;
}

CyclicReduction cyclic_reduce(const TameWord& word) {
    std::vector<Letter> w;
    for (const auto& f : word.factors) w.push_back({factor_to_endo(f)});
    std::vector<PlaneEndo> conj; // delta as a product of letters, in order
    normalize(w);

    // conjugate boundary letters away while the ends lie in the same subgroup
    while (w.size() >= 2) {
        const PlaneEndo& first = w.front().endo;
        const PlaneEndo& last = w.back().endo;
        bool same = (is_aff(first) && is_aff(last)) || (is_tri(first) && is_tri(last));
        if (!same) break;
        conj.push_back(first);
        Letter moved = w.front();
        w.erase(w.begin());
        w.push_back(moved);
        normalize(w);
    }

    auto conj_to_word = [&]() {
        TameWord out;
        for (const auto& e : conj) out = out.concat(letter_to_word(e));
        return out;
    };
    auto conj_to_endo = [&]() {
        PlaneEndo acc = PlaneEndo::identity();
        for (const auto& e : conj) acc = plane_compose(acc, e);
        return acc;
    };

    CyclicReduction out;
    if (w.size() <= 1) {
        PlaneEndo reduced = w.empty() ? PlaneEndo::identity() : w.front().endo;
        TriangularizableCert cert;
        cert.conjugator = conj_to_word();
        cert.conjugator_endo = conj_to_endo();
        cert.reduced_endo = reduced;
        if (is_tri(reduced)) {
            cert.triangular = TriangularAuto::from_endo(reduced);
        } else {
            cert.affine_form = reduced;
        }
        out.triangularizable = true;
        out.cert = std::move(cert);
        return out;
    }

    // Hyperbolic case: even alternating word. Rotate so it starts with a
    // triangular letter, split each affine letter through pi, absorb the B
    // pieces into the neighbouring triangular letters.
    if (w.size() % 2 != 0) throw error("internal: reduced word has odd length");
    if (is_aff(w.front().endo)) {
        conj.push_back(w.front().endo);
        Letter moved = w.front();
        w.erase(w.begin());
        w.push_back(moved);
    }

    const std::size_t s = w.size() / 2;
    std::vector<PlaneEndo> tris(s), b_left(s), b_right(s);
    for (std::size_t i = 0; i < s; ++i) {
        tris[i] = w[2 * i].endo;
        auto split = bruhat_split(w[2 * i + 1].endo);
        b_left[i] = split.b1;
        b_right[i] = split.b2;
    }
    // trailing b_right wraps to the front: conjugate by its inverse
    if (!b_right[s - 1].is_identity()) conj.push_back(letter_inverse(b_right[s - 1]));

    LaneForm lane;
    for (std::size_t i = 0; i < s; ++i) {
        const PlaneEndo& carried = i == 0 ? b_right[s - 1] : b_right[i - 1];
        PlaneEndo tau = plane_compose(plane_compose(carried, tris[i]), b_left[i]);
        auto t = TriangularAuto::from_endo(tau);
        if (!t) throw error("internal: lane factor is not triangular");
        if (t->beta_degree() < 2) throw error("internal: lane factor with degree < 2");
        lane.degrees.push_back(t->beta_degree());
        lane.taus.push_back(std::move(*t));
    }
    lane.conjugator = conj_to_word();
    lane.conjugator_endo = conj_to_endo();
    out.triangularizable = false;
    out.lane = std::move(lane);
    return out;
}

CyclicReduction is_triangularizable(const PlaneEndo& sigma) {
    CyclicReduction red = cyclic_reduce(tame_decompose(sigma));

    // certificates must recompose: delta^{-1} sigma delta = reduced form
    const PlaneEndo& delta =
        red.triangularizable ? red.cert->conjugator_endo : red.lane->conjugator_endo;
    PlaneEndo conjugated = plane_compose(plane_compose(plane_inverse(delta), sigma), delta);
    PlaneEndo expected =
        red.triangularizable ? red.cert->reduced_endo : red.lane->compose_normal_form();
    if (!(conjugated == expected)) throw error("internal: certificate does not recompose");
    return red;
}

GKVerdictPlane classify_gk_plane(const PlaneEndo& sigma) {
    CyclicReduction red = is_triangularizable(sigma);
    GKVerdictPlane v;
    if (red.triangularizable) {
        v.kind = GKVerdictPlane::Kind::three;
        v.three_cert = std::move(red.cert);
    } else {
        v.kind = GKVerdictPlane::Kind::infinity;
        v.lane = std::move(red.lane);
    }
    return v;
}

} // namespace gwa
