#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwa/subspace.hpp"

namespace gwa {

/// Growth data d_V(m) = dim(sum of V^i, i <= m) for a subframe V. Since
/// 1 in V is enforced, the partial sums collapse to dim(V^m).
struct GrowthReport {
    std::vector<std::uint64_t> dims; // m = 0..M

    enum class FitKind { none, polynomial, exponential } fit_kind = FitKind::none;
    Scalar fitted_exponent;                 // polynomial fit, rounded to 1/100
    std::optional<std::uint64_t> witness;   // exponential fit: rank of the 2^{p+1} word family
    std::optional<Scalar> increment_exponent; // fit of the increment sequence

    struct Check {
        std::string name;
        bool pass = false;
    };
    std::vector<Check> checks;
};

/// Exact dims for m <= max_degree. The fit (present once max_degree >= 6)
/// uses the top half of the range: exponential verdict when every ratio
/// dim(m+1)/dim(m) there is >= 13/10, otherwise the least-squares slope of
/// log dim against log m.
GrowthReport growth_sequence(const GWASpec& spec, const std::vector<GWAElement>& gens,
                             int max_degree);

struct SandwichReport {
    struct Entry {
        int m = 0;
        std::uint64_t dim_v_m = 0, dim_w_m = 0, dim_w_2m = 0;
        bool lower_pass = false; // (m+1) dim(V^m) < dim(W^{2m})
        bool upper_pass = false; // dim(W^m) <= (2m+1) dim(V^m)
    };
    std::vector<Entry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.lower_pass || !e.upper_pass) return false;
        return true;
    }
};

/// Checks the growth sandwich for W = V + kx + ky over a sigma-stable
/// subframe V containing a and sigma(a), exactly, for 1 <= m <= M.
SandwichReport sandwich_check(const GWASpec& spec, const Subspace& v, int m_max);

/// Smallest sigma-stable subspace containing the seeds (and 1, a, sigma(a));
/// terminates whenever sigma is locally algebraic on the seeds.
Subspace sigma_stable_closure(const GWASpec& spec, const std::vector<MultiPoly>& seeds,
                              int max_rounds = 256);

struct WitnessReport {
    std::uint64_t rank = 0;
    std::uint64_t word_count = 0; // 2^{p+1}
    bool degree_hypothesis_ok = false;
};

/// Rank of the words z^{e0} x z^{e1} x ... z^{e_{p-1}} x z^{e_p} over all
/// 0/1 exponent strings; equals 2^{p+1} whenever the degree-doubling
/// hypothesis holds for z. The hypothesis check is advisory only.
WitnessReport exponential_witness(const GWASpec& spec, const MultiPoly& z, int p);

} // namespace gwa
