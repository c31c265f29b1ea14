#pragma once

// seeded random fixtures shared by the test suites

#include <random>

#include "gwa/gwa_algebra.hpp"
#include "gwa/intmatrix.hpp"
#include "gwa/laurent_auto.hpp"
#include "gwa/multipoly.hpp"
#include "gwa/plane_endo.hpp"

namespace gwa::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed = 0x5eed) : eng_(seed) {}

    int uniform(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }
    bool coin() { return uniform(0, 1) == 1; }

    Scalar scalar(int height = 3) {
        int num = uniform(-height, height);
        int den = uniform(1, height);
        return make_scalar(num, den);
    }
    Scalar nonzero_scalar(int height = 3) {
        Scalar s = scalar(height);
        while (s == 0) s = scalar(height);
        return s;
    }

    Monomial monomial(int n, int max_deg, bool laurent) {
        Monomial m(static_cast<std::size_t>(n));
        for (auto& e : m.e) e = laurent ? uniform(-max_deg, max_deg) : uniform(0, max_deg);
        return m;
    }

    MultiPoly poly(RingDesc ring, int max_terms = 4, int max_deg = 3, int height = 3) {
        MultiPoly p(ring.kind, ring.n);
        int terms = uniform(0, max_terms);
        for (int t = 0; t < terms; ++t)
            p.add_term(monomial(ring.n, max_deg, ring.kind == RingKind::laurent), scalar(height));
        return p;
    }
    MultiPoly nonzero_poly(RingDesc ring, int max_terms = 4, int max_deg = 3, int height = 3) {
        MultiPoly p = poly(ring, max_terms, max_deg, height);
        while (p.is_zero()) p = poly(ring, max_terms, max_deg, height);
        return p;
    }

    /// product of random elementary row operations; det = +-1 by construction
    IntMatrix unimodular(int n, int steps = 6, int height = 2) {
        IntMatrix m = IntMatrix::identity(n);
        for (int s = 0; s < steps; ++s) {
            int op = uniform(0, 2);
            if (op == 0 && n >= 2) { // row_j += e * row_i
                int i = uniform(0, n - 1), j = uniform(0, n - 1);
                if (i == j) continue;
                int e = uniform(-height, height);
                for (int k = 0; k < n; ++k) m.at(j, k) += Integer(e) * m.at(i, k);
            } else if (op == 1 && n >= 2) { // swap two rows
                int i = uniform(0, n - 1), j = uniform(0, n - 1);
                for (int k = 0; k < n; ++k) std::swap(m.at(i, k), m.at(j, k));
            } else { // negate a row
                int i = uniform(0, n - 1);
                for (int k = 0; k < n; ++k) m.at(i, k) = -m.at(i, k);
            }
        }
        return m;
    }

    LaurentAuto laurent_auto(int n, int steps = 5) {
        std::vector<Scalar> alpha;
        for (int i = 0; i < n; ++i) alpha.push_back(nonzero_scalar(2));
        return LaurentAuto(unimodular(n, steps, 1), std::move(alpha));
    }

    /// univariate polynomial in z2 (inside k[z1,z2])
    MultiPoly univariate_z2(int min_deg, int max_deg, int height = 2) {
        MultiPoly h(RingKind::polynomial, 2);
        int d = uniform(min_deg, max_deg);
        for (int e = 0; e < d; ++e)
            h.add_term(Monomial({0, e}), scalar(height));
        Scalar lead = nonzero_scalar(height);
        h.add_term(Monomial({0, d}), lead - h.coeff(Monomial({0, d})));
        return h;
    }

    TriangularAuto triangular(int min_beta_deg = 2, int max_beta_deg = 3) {
        return TriangularAuto{nonzero_scalar(2), nonzero_scalar(2),
                              univariate_z2(min_beta_deg, max_beta_deg), scalar(2)};
    }

    AffineFactor affine() {
        while (true) {
            AffineFactor f{scalar(2), scalar(2), scalar(2), scalar(2), scalar(2), scalar(2)};
            if (f.a * f.d - f.b * f.c != 0) return f;
        }
    }

    TameWord tame_word(int max_factors = 3, int max_h_deg = 3) {
        TameWord w;
        int count = uniform(1, max_factors);
        for (int i = 0; i < count; ++i) {
            switch (uniform(0, 2)) {
                case 0: w.factors.emplace_back(affine()); break;
                case 1: w.factors.emplace_back(ElementaryFactor{univariate_z2(1, max_h_deg)}); break;
                default: w.factors.emplace_back(SwapFactor{}); break;
            }
        }
        return w;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace gwa::testing
