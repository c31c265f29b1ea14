#pragma once

// Test-only oracle: a slow single-step rewriter for GWA words. Applies the
// defining relations leftmost-first until the word is in normal form; each
// step either merges base coefficients, moves a coefficient left across x/y,
// or removes an adjacent xy / yx inversion, so it terminates. Kept fully
// independent of the closed-form reduction in gwa_mul.

#include <variant>
#include <vector>

#include "gwa/gwa_algebra.hpp"

namespace gwa::testing {

struct OracleSym {
    int kind = 0; // 0 = base coefficient, +1 = x, -1 = y
    MultiPoly d;
};

inline GWAElement oracle_reduce(const GWASpec& spec, std::vector<OracleSym> word) {
    const RingDesc ring = spec.base();
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            OracleSym& a = word[i];
            OracleSym& b = word[i + 1];
            if (a.kind == 0 && b.kind == 0) {
                a.d = a.d * b.d;
                word.erase(word.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            } else if (a.kind == 1 && b.kind == 0) {
                OracleSym moved{0, spec.apply_sigma(b.d, 1)};
                b = a;
                a = moved;
            } else if (a.kind == -1 && b.kind == 0) {
                OracleSym moved{0, spec.apply_sigma(b.d, -1)};
                b = a;
                a = moved;
            } else if (a.kind == 1 && b.kind == -1) {
                a = OracleSym{0, spec.apply_sigma(spec.a(), 1)};
                word.erase(word.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            } else if (a.kind == -1 && b.kind == 1) {
                a = OracleSym{0, spec.a()};
                word.erase(word.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            } else {
                continue;
            }
            changed = true;
            break;
        }
    }
    MultiPoly coeff = MultiPoly::one(ring.kind, ring.n);
    std::int64_t degree = 0;
    for (const auto& sym : word) {
        if (sym.kind == 0)
            coeff *= sym.d;
        else
            degree += sym.kind;
    }
    return GWAElement::term(spec, degree, coeff);
}

inline std::vector<OracleSym> oracle_word(const GWASpec& spec, std::int64_t degree,
                                          const MultiPoly& d) {
    std::vector<OracleSym> w{OracleSym{0, d}};
    for (std::int64_t k = 0; k < std::abs(degree); ++k)
        w.push_back(OracleSym{degree > 0 ? 1 : -1, MultiPoly::one(spec.base().kind, spec.base().n)});
    return w;
}

/// oracle product of two normal-form elements: concatenate the words
/// term-by-term and rewrite
inline GWAElement oracle_mul(const GWASpec& spec, const GWAElement& u, const GWAElement& v) {
    GWAElement acc = GWAElement::zero(spec);
    for (const auto& [i, d] : u.components()) {
        for (const auto& [j, e] : v.components()) {
            std::vector<OracleSym> w = oracle_word(spec, i, d);
            std::vector<OracleSym> w2 = oracle_word(spec, j, e);
            w.insert(w.end(), w2.begin(), w2.end());
            acc = gwa_add(acc, oracle_reduce(spec, std::move(w)));
        }
    }
    return acc;
}

} // namespace gwa::testing
