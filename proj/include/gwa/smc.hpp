#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwa/subspace.hpp"

namespace gwa {

/// c_n = 1 / (2^n 5^{n(n+1)/2} n!), exact (the square root disappears since
/// n(n+1) is even). Satisfies c_{n+1} = c_n / (2(n+1) 5^{n+1}).
Scalar smc_constant(int n);

/// Subspace of P_n together with the z-degree filtration variable it is
/// filtered by.
struct FilteredSubspace {
    Subspace w;
    int filtration_var = 0; // 0-based
};

/// Leading-term spans for the z_var filtration: each basis vector contributes
/// its top z_var-degree slice after echelonizing with a filtration-compatible
/// order. Dimension is always preserved.
std::vector<MultiPoly> gr_span(const std::vector<MultiPoly>& basis, int var);
Subspace gr_subspace(const FilteredSubspace& w);

struct SMCReport {
    int n = 0;
    int m_max = 0;
    std::uint64_t dim_w = 0;
    Scalar constant; // the c used in the threshold

    struct Entry {
        int m = 0;
        std::uint64_t dim = 0;
        Scalar threshold;
        bool pass = false;
    };
    std::vector<Entry> entries;
    bool all_pass = true;
    std::optional<int> first_failure;
    std::string note;
};

/// W = V_n a + span(extra); checks dim(W^m) >= c_n dim(W) m^n exactly for
/// m <= m_max. The inequality is a proven statement for this ring, so a
/// failure signals a defect in the linear algebra or constants, never a
/// counterexample; reports carry that note.
SMCReport verify_smc_instance(int n, const MultiPoly& a, const std::vector<MultiPoly>& extra,
                              int m_max);

struct Case1Part {
    std::vector<MultiPoly> w_basis; // subspace of P_{n-1}
    std::int64_t p = 0;             // z_n exponent
};

/// W = W_1 z^{p_1} + ... + W_l z^{p_l} with l >= 2 and strictly increasing
/// p_i; checks dim(W^m) >= c' dim(W) m^n with c' = c_{n-1} / (2n).
SMCReport case1_direct_sum_check(int n, const std::vector<Case1Part>& parts, int m_max);

} // namespace gwa
