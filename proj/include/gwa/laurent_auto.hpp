#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gwa/intmatrix.hpp"
#include "gwa/multipoly.hpp"

namespace gwa {

/// Automorphism of L_n determined by z_i -> alpha_i * z^{M[-,i]}.
/// M must be unimodular and every alpha entry nonzero; both are checked at
/// construction since nothing else defines an automorphism.
struct LaurentAuto {
    int n = 0;
    IntMatrix matrix;
    std::vector<Scalar> alpha;

    LaurentAuto(IntMatrix m, std::vector<Scalar> a);
    static LaurentAuto identity(int n);

    bool operator==(const LaurentAuto& o) const = default;
    bool is_identity() const;
};

/// alpha^b = prod alpha_i^{b_i} for an integer column b.
Scalar power_vec(const std::vector<Scalar>& alpha, const std::vector<Integer>& b);

/// alpha^M = (alpha^{M[-,1]}, ..., alpha^{M[-,n]}).
std::vector<Scalar> power_mat(const std::vector<Scalar>& alpha, const IntMatrix& m);

/// Image of a Laurent polynomial: each term c z^e maps to c * alpha^e * z^{M e}.
MultiPoly apply(const LaurentAuto& sigma, const MultiPoly& p);

/// tau.sigma = (N M, beta^M alpha)
LaurentAuto compose(const LaurentAuto& tau, const LaurentAuto& sigma);

/// sigma^{-1} = (M^{-1}, alpha^{-M^{-1}})
LaurentAuto inverse(const LaurentAuto& sigma);

/// sigma^m by the closed form (M^m, alpha^{I + M + ... + M^{m-1}}).
LaurentAuto iterate(const LaurentAuto& sigma, std::uint64_t m);

/// Maximum order of a finite-order matrix in GL(n,Z) for n <= 20
/// (G(2p+1) = G(2p)); empty beyond the table.
std::optional<std::uint64_t> levitt_max_order(int n);

struct OrderVerdict {
    bool finite = false;
    /// minimal o with M^o = I when finite
    std::uint64_t order = 0;

    /// Infinite-order witnesses: either a non-cyclotomic factor of the
    /// characteristic polynomial, or an exponent/entry where the norm of M^m
    /// exceeds the bound any finite-order candidate could reach.
    std::optional<IntPoly> noncyclotomic_factor;
    struct NormWitness {
        std::uint64_t exponent = 0;
        int row = 0, col = 0;
        Integer value;
        Integer bound; // max norm over the first `cap` powers
        std::uint64_t cap = 0;
    };
    std::optional<NormWitness> norm_witness;
};

/// Decides finite order by cyclotomic factorization of the characteristic
/// polynomial: all irreducible factors must be cyclotomic, the candidate
/// order is the lcm of their indices, and M^candidate is checked exactly.
OrderVerdict order_verdict(const IntMatrix& m);

bool is_locally_algebraic(const LaurentAuto& sigma);

struct GKVerdictLaurent {
    bool exactly_n_plus_one = false;
    int n = 0;
    OrderVerdict basis_verdict;
};

/// GK-dimension of L_n(sigma, a): exactly n+1 iff M_sigma has finite order,
/// otherwise at least n+2 (the defining element plays no role).
GKVerdictLaurent classify_gk_laurent(const LaurentAuto& sigma);

} // namespace gwa
