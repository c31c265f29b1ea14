#include "gwa/smc.hpp"

namespace gwa {

namespace {
const char* kNote =
    "a failed inequality indicates a defect in the linear algebra or constants, "
    "not a counterexample";

Scalar power_m(int m, int e) {
    Scalar r(1);
    for (int i = 0; i < e; ++i) r *= m;
    return r;
}

SMCReport run_power_check(RingDesc base, const std::vector<MultiPoly>& w_basis, int n, int m_max,
                          const Scalar& c, int exponent) {
    Subspace w = subspace_from_polys(base, w_basis);
    SMCReport rep;
    rep.n = n;
    rep.m_max = m_max;
    rep.dim_w = w.dim();
    rep.constant = c;
    rep.note = kNote;

    Subspace pw(base);
    pw.insert_poly(MultiPoly::one(base.kind, base.n));
    for (int m = 0; m <= m_max; ++m) {
        if (m > 0) pw = poly_subspace_product(pw, w);
        SMCReport::Entry e;
        e.m = m;
        e.dim = pw.dim();
        e.threshold = c * Scalar(static_cast<unsigned long>(rep.dim_w)) * power_m(m, exponent);
        e.pass = Scalar(static_cast<unsigned long>(e.dim)) >= e.threshold;
        if (!e.pass && !rep.first_failure) {
            rep.first_failure = m;
            rep.all_pass = false;
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

} // namespace

Scalar smc_constant(int n) {
    if (n < 0) throw validation_error("smc_constant needs n >= 0");
    Integer den(1);
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(n));
    Integer five(1);
    mpz_ui_pow_ui(five.get_mpz_t(), 5,
                  static_cast<unsigned long>(n) * static_cast<unsigned long>(n + 1) / 2);
    Integer fact(1);
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    return make_scalar(Integer(1), den * five * fact);
}

std::vector<MultiPoly> gr_span(const std::vector<MultiPoly>& basis, int var) {
    if (basis.empty()) return {};
    RingDesc base = basis.front().ring();
    if (var < 0 || var >= base.n) throw validation_error("filtration variable out of range");

    // Echelonize under a filtration-compatible order by borrowing the
    // subspace machinery: store the z_var exponent in the degree slot of the
    // key, so pivoting is primarily by filtration level.
    Subspace s(base);
    for (const auto& p : basis) {
        if (!(p.ring() == base)) throw ring_error("gr_span basis in mixed rings");
        Subspace::Row r;
        for (const auto& [mon, c] : p.terms())
            r.emplace(NfKey{mon.e[static_cast<std::size_t>(var)], mon}, c);
        s.insert(std::move(r));
    }

    std::vector<MultiPoly> out;
    for (const auto& row : s.rows()) {
        const std::int64_t top = row.begin()->first.deg;
        MultiPoly slice(base.kind, base.n);
        for (const auto& [key, c] : row)
            if (key.deg == top) slice.add_term(key.mon, c);
        out.push_back(std::move(slice));
    }
    return out;
}

Subspace gr_subspace(const FilteredSubspace& w) {
    auto polys = w.w.row_polys();
    Subspace out(w.w.base());
    for (const auto& p : gr_span(polys, w.filtration_var)) out.insert_poly(p);
    if (out.dim() != w.w.dim()) throw error("internal: gr did not preserve dimension");
    return out;
}

SMCReport verify_smc_instance(int n, const MultiPoly& a, const std::vector<MultiPoly>& extra,
                              int m_max) {
    if (a.is_zero()) throw validation_error("defining element a must be nonzero");
    if (m_max < 2) throw validation_error("m_max must be at least 2");
    RingDesc base{RingKind::polynomial, n};
    if (!(a.ring() == base)) throw ring_error("a must live in P_n");

    std::vector<MultiPoly> w_basis;
    w_basis.push_back(a);
    for (int i = 1; i <= n; ++i)
        w_basis.push_back(MultiPoly::variable(base.kind, n, i) * a);
    for (const auto& p : extra) {
        if (!(p.ring() == base)) throw ring_error("extra polynomials must live in P_n");
        w_basis.push_back(p);
    }
    return run_power_check(base, w_basis, n, m_max, smc_constant(n), n);
}

SMCReport case1_direct_sum_check(int n, const std::vector<Case1Part>& parts, int m_max) {
    if (n < 1) throw validation_error("case1 check needs n >= 1");
    if (parts.size() < 2) throw validation_error("case1 needs at least two parts (l >= 2)");
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1].p >= parts[i].p)
            throw validation_error("exponents p_i must be strictly increasing");

    RingDesc base{RingKind::polynomial, n};
    std::vector<MultiPoly> w_basis;
    for (const auto& part : parts) {
        for (const auto& q : part.w_basis) {
            if (q.arity() != n - 1 || q.kind() != RingKind::polynomial)
                throw validation_error("part bases must live in P_{n-1}");
            // embed into P_n and multiply by z_n^{p}
            MultiPoly lifted(base.kind, n);
            for (const auto& [mon, c] : q.terms()) {
                Monomial m(static_cast<std::size_t>(n));
                for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(n); ++j) m.e[j] = mon.e[j];
                m.e[static_cast<std::size_t>(n - 1)] = part.p;
                lifted.add_term(std::move(m), c);
            }
            w_basis.push_back(std::move(lifted));
        }
    }
    Scalar cprime = smc_constant(n - 1) / (Scalar(2) * Scalar(n));
    return run_power_check(base, w_basis, n, m_max, cprime, n);
}

} // namespace gwa
