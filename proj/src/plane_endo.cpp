#include "gwa/plane_endo.hpp"

#include "gwa/poly_io.hpp"

namespace gwa {

namespace {
const RingDesc kP2{RingKind::polynomial, 2};

MultiPoly z1() { return MultiPoly::variable(RingKind::polynomial, 2, 1); }
MultiPoly z2() { return MultiPoly::variable(RingKind::polynomial, 2, 2); }
MultiPoly cpoly(const Scalar& c) { return MultiPoly::constant(RingKind::polynomial, 2, c); }

std::int64_t deg_or_minus_inf(const MultiPoly& p) {
    auto d = p.total_degree();
    return d ? *d : -1;
}
} // namespace

PlaneEndo::PlaneEndo() : f1(z1()), f2(z2()) {}

PlaneEndo::PlaneEndo(MultiPoly a, MultiPoly b) : f1(std::move(a)), f2(std::move(b)) {
    if (f1.ring() != kP2 || f2.ring() != kP2)
        throw ring_error("plane endomorphism coordinates must live in k[z1,z2]");
}

PlaneEndo PlaneEndo::identity() { return PlaneEndo(); }
PlaneEndo PlaneEndo::swap() { return PlaneEndo(z2(), z1()); }

bool PlaneEndo::is_identity() const { return f1 == z1() && f2 == z2(); }

bool PlaneEndo::is_affine() const {
    return deg_or_minus_inf(f1) <= 1 && deg_or_minus_inf(f2) <= 1;
}

bool PlaneEndo::is_triangular() const {
    Monomial m1(2), m2(2);
    m1.e[0] = 1;
    m2.e[1] = 1;
    if (f1.coeff(m1) == 0 || f2.coeff(m2) == 0) return false;
    MultiPoly g1 = f1 - z1() * f1.coeff(m1);
    if (g1.depends_on(0)) return false;
    MultiPoly g2 = f2 - z2() * f2.coeff(m2);
    return g2.is_constant();
}

std::int64_t PlaneEndo::max_degree() const {
    return std::max(deg_or_minus_inf(f1), deg_or_minus_inf(f2));
}

MultiPoly plane_apply(const PlaneEndo& sigma, const MultiPoly& p) {
    if (p.ring() != kP2) throw ring_error("plane_apply expects an arity-2 polynomial");
    return substitute(p, {sigma.f1, sigma.f2});
}

PlaneEndo plane_compose(const PlaneEndo& tau, const PlaneEndo& sigma) {
    return PlaneEndo(plane_apply(tau, sigma.f1), plane_apply(tau, sigma.f2));
}

PlaneEndo TriangularAuto::to_endo() const {
    return PlaneEndo(z1() * lambda1 + g1, z2() * lambda2 + cpoly(g2));
}

std::int64_t TriangularAuto::beta_degree() const {
    auto d = g1.total_degree();
    return d ? *d : 0;
}

std::optional<TriangularAuto> TriangularAuto::from_endo(const PlaneEndo& e) {
    if (!e.is_triangular()) return std::nullopt;
    Monomial m1(2), m2(2);
    m1.e[0] = 1;
    m2.e[1] = 1;
    TriangularAuto t{e.f1.coeff(m1), e.f2.coeff(m2), e.f1 - z1() * e.f1.coeff(m1),
                     e.f2.constant_term()};
    return t;
}

PlaneEndo AffineFactor::to_endo() const {
    return PlaneEndo(z1() * a + z2() * b + cpoly(t1), z1() * c + z2() * d + cpoly(t2));
}

AffineFactor AffineFactor::inverse() const {
    Scalar det = a * d - b * c;
    if (det == 0) throw not_an_automorphism("singular linear part");
    // inverse map w -> A^{-1}(w - t)
    Scalar ia = d / det, ib = -b / det, ic = -c / det, id = a / det;
    return {ia, ib, ic, id, -(ia * t1 + ib * t2), -(ic * t1 + id * t2)};
}

std::optional<AffineFactor> AffineFactor::from_endo(const PlaneEndo& e) {
    if (!e.is_affine()) return std::nullopt;
    Monomial m1(2), m2(2);
    m1.e[0] = 1;
    m2.e[1] = 1;
    AffineFactor f{e.f1.coeff(m1), e.f1.coeff(m2), e.f2.coeff(m1), e.f2.coeff(m2),
                   e.f1.constant_term(), e.f2.constant_term()};
    if (f.a * f.d - f.b * f.c == 0) return std::nullopt;
    return f;
}

PlaneEndo ElementaryFactor::to_endo() const { return PlaneEndo(z1() + h, z2()); }

PlaneEndo factor_to_endo(const TameFactor& f) {
    return std::visit([](const auto& x) { return x.to_endo(); }, f);
}

PlaneEndo TameWord::compose_all() const {
    PlaneEndo acc = PlaneEndo::identity();
    for (const auto& f : factors) acc = plane_compose(acc, factor_to_endo(f));
    return acc;
}

TameWord TameWord::inverse() const {
    TameWord out;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        if (const auto* a = std::get_if<AffineFactor>(&*it))
            out.factors.emplace_back(a->inverse());
        else if (const auto* e = std::get_if<ElementaryFactor>(&*it))
            out.factors.emplace_back(e->inverse());
        else
            out.factors.emplace_back(SwapFactor{});
    }
    return out;
}

TameWord TameWord::concat(const TameWord& o) const {
    TameWord out(*this);
    out.factors.insert(out.factors.end(), o.factors.begin(), o.factors.end());
    return out;
}

namespace {

// Is lead_a a scalar multiple of lead_b^q? Both are homogeneous with
// deg(lead_a) = q * deg(lead_b). Exact check via division of leading forms.
std::optional<Scalar> proportionality(const MultiPoly& lead_a, const MultiPoly& lead_b,
                                      std::uint64_t q) {
    MultiPoly bq = lead_b.pow(q);
    // both homogeneous of the same degree: compare after scaling by the
    // ratio of leading coefficients
    const auto& [ma, ca] = *lead_a.terms().rbegin();
    const auto& [mb, cb] = *bq.terms().rbegin();
    if (!(ma == mb)) return std::nullopt;
    Scalar ratio = ca / cb;
    if (bq * ratio == lead_a) return ratio;
    return std::nullopt;
}

} // namespace

TameWord tame_decompose(const PlaneEndo& sigma, int max_steps) {
    MultiPoly f1 = sigma.f1, f2 = sigma.f2;
    std::vector<TameFactor> tail; // inverses of the peeled elementary maps, in order

    for (int step = 0;; ++step) {
        std::int64_t d1 = deg_or_minus_inf(f1), d2 = deg_or_minus_inf(f2);
        if (std::max(d1, d2) <= 1) break;
        if (step >= max_steps)
            throw not_an_automorphism("degree reduction exceeded " + std::to_string(max_steps) +
                                      " steps");
        if (d1 <= 0 || d2 <= 0)
            throw not_an_automorphism("constant coordinate next to a nonlinear one");

        // Reduce the higher-degree coordinate by a power of the other; on a
        // tie try f1 by f2 first, then f2 by f1 (this tie round is the affine
        // pre-mix: q = 1 and the peeled factor is linear).
        bool reduced = false;
        for (int attempt = 0; attempt < 2 && !reduced; ++attempt) {
            bool reduce_first = (d1 > d2) || (d1 == d2 && attempt == 0);
            if (d1 == d2 && attempt == 1) reduce_first = false;
            if (d1 != d2 && attempt == 1) break;
            MultiPoly& fa = reduce_first ? f1 : f2;
            MultiPoly& fb = reduce_first ? f2 : f1;
            std::int64_t da = reduce_first ? d1 : d2, db = reduce_first ? d2 : d1;
            if (da < db) continue;
            if (da % db != 0) {
                if (d1 != d2)
                    throw not_an_automorphism(
                        "degree " + std::to_string(db) + " does not divide degree " +
                        std::to_string(da));
                continue;
            }
            std::uint64_t q = static_cast<std::uint64_t>(da / db);
            auto c = proportionality(fa.leading_form(), fb.leading_form(), q);
            if (!c) continue;
            // peel: fa <- fa - c*fb^q; the undone factor (za + c*zb^q, zb)
            // goes to the front of the tail
            fa = fa - fb.pow(q) * (*c);
            MultiPoly h = MultiPoly::variable(RingKind::polynomial, 2, 2, static_cast<std::int64_t>(q)) * (*c);
            std::vector<TameFactor> piece;
            if (reduce_first) {
                piece = {ElementaryFactor{h}};
            } else {
                piece = {SwapFactor{}, ElementaryFactor{h}, SwapFactor{}};
            }
            tail.insert(tail.begin(), piece.begin(), piece.end());
            reduced = true;
        }
        if (!reduced)
            throw not_an_automorphism("leading form is not proportional to the required power");
    }

    auto affine = AffineFactor::from_endo(PlaneEndo(f1, f2));
    if (!affine) throw not_an_automorphism("terminal degree-1 map has singular linear part");

    TameWord word;
    word.factors.push_back(*affine);
    word.factors.insert(word.factors.end(), tail.begin(), tail.end());
    return word;
}

PlaneEndo plane_inverse(const PlaneEndo& sigma) {
    return tame_decompose(sigma).inverse().compose_all();
}

DegreeGrowth degree_growth_certificate(const PlaneEndo& sigma, const Scalar& r, int m_max) {
    if (m_max < 2) throw validation_error("degree_growth_certificate needs m_max >= 2");
    DegreeGrowth out;
    out.degrees.resize(2);
    for (int var = 1; var <= 2; ++var) {
        MultiPoly p = MultiPoly::variable(RingKind::polynomial, 2, var);
        auto& degs = out.degrees[static_cast<std::size_t>(var - 1)];
        degs.push_back(1);
        for (int m = 1; m <= m_max; ++m) {
            p = plane_apply(sigma, p);
            degs.push_back(deg_or_minus_inf(p));
        }
        bool witness = true;
        for (int m = 0; m < m_max; ++m) {
            // exact comparison deg(m+1) >= r * deg(m)
            if (degs[static_cast<std::size_t>(m)] < 0 ||
                Scalar(degs[static_cast<std::size_t>(m + 1)]) <
                    r * Scalar(degs[static_cast<std::size_t>(m)])) {
                witness = false;
                break;
            }
        }
        if (witness && !out.exponential_witness) {
            out.exponential_witness = true;
            out.witness_variable = var;
        }
    }
    return out;
}

} // namespace gwa
