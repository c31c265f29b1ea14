#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gwa/gwa_algebra.hpp"

namespace gwa {

/// Index of a normal-form monomial: base monomial times x^deg (deg < 0 means
/// y^{-deg}).
struct NfKey {
    std::int64_t deg = 0;
    Monomial mon;

    bool operator==(const NfKey& o) const = default;
};

/// descending order: leading key first in a row map
struct NfKeyGreater {
    bool operator()(const NfKey& a, const NfKey& b) const {
        if (a.deg != b.deg) return a.deg > b.deg;
        return grlex_compare(a.mon, b.mon) > 0;
    }
};

/// Finite dimensional subspace of a GWA (or of its base ring, when every
/// degree is zero), kept as a reduced row-echelon basis over the dynamically
/// growing monomial index. Pivoting follows the canonical term order.
class Subspace {
public:
    using Row = std::map<NfKey, Scalar, NfKeyGreater>;

    Subspace() = default;
    explicit Subspace(RingDesc base) : base_(base) {}

    RingDesc base() const { return base_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }

    /// Insert a vector and re-reduce; false when it was already in the span.
    bool insert(Row r);
    bool insert(const GWAElement& e);
    bool insert_poly(const MultiPoly& p);

    bool contains(const GWAElement& e) const;
    bool contains_poly(const MultiPoly& p) const;

    /// Same span (bases are canonical, so this is row-set equality).
    bool equals(const Subspace& o) const;

    Subspace sum(const Subspace& o) const;

    std::vector<GWAElement> row_elements() const;
    std::vector<MultiPoly> row_polys() const;

    static Row row_from_element(const GWAElement& e);
    static GWAElement element_from_row(RingDesc base, const Row& r);

private:
    Row reduce(Row r) const;

    RingDesc base_;
    std::vector<Row> rows_;
    std::map<NfKey, std::size_t, NfKeyGreater> pivots_;
};

Subspace subspace_from_elements(RingDesc base, const std::vector<GWAElement>& gens);
Subspace subspace_from_polys(RingDesc base, const std::vector<MultiPoly>& gens);

/// Span of all products uv, u in V, w in W, echelonized.
Subspace subspace_product(const GWASpec& spec, const Subspace& v, const Subspace& w);

/// Product inside the base ring (degree-0 subspaces).
Subspace poly_subspace_product(const Subspace& v, const Subspace& w);

} // namespace gwa
