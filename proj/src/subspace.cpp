#include "gwa/subspace.hpp"

namespace gwa {

Subspace::Row Subspace::row_from_element(const GWAElement& e) {
    Row r;
    for (const auto& [deg, d] : e.components())
        for (const auto& [mon, c] : d.terms()) r.emplace(NfKey{deg, mon}, c);
    return r;
}

GWAElement Subspace::element_from_row(RingDesc base, const Row& r) {
    GWAElement e(base);
    std::map<std::int64_t, MultiPoly> comps;
    for (const auto& [key, c] : r) {
        auto it = comps.find(key.deg);
        if (it == comps.end())
            it = comps.emplace(key.deg, MultiPoly::zero(base.kind, base.n)).first;
        it->second.add_term(key.mon, c);
    }
    for (auto& [deg, d] : comps) e.add_component(deg, d);
    return e;
}

Subspace::Row Subspace::reduce(Row r) const {
    // single downward sweep: eliminating a pivot key only introduces keys
    // smaller than it (pivot rows are monic with their pivot leading)
    auto it = r.begin();
    while (it != r.end()) {
        auto pit = pivots_.find(it->first);
        if (pit == pivots_.end()) {
            ++it;
            continue;
        }
        const NfKey key = it->first;
        const Scalar factor = it->second;
        const Row& pivot_row = rows_[pit->second];
        for (const auto& [k, c] : pivot_row) {
            auto jt = r.find(k);
            if (jt == r.end()) {
                r.emplace(k, -factor * c);
            } else {
                jt->second -= factor * c;
                if (jt->second == 0) r.erase(jt);
            }
        }
        it = r.upper_bound(key);
    }
    return r;
}

bool Subspace::insert(Row r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    // normalize to a monic pivot
    Scalar lead = r.begin()->second;
    for (auto& [k, c] : r) c /= lead;
    const NfKey pivot = r.begin()->first;
    // full reduction: clear the new pivot column from existing rows
    for (auto& row : rows_) {
        auto it = row.find(pivot);
        if (it == row.end()) continue;
        Scalar factor = it->second;
        for (const auto& [k, c] : r) {
            auto jt = row.find(k);
            if (jt == row.end()) {
                row.emplace(k, -factor * c);
            } else {
                jt->second -= factor * c;
                if (jt->second == 0) row.erase(jt);
            }
        }
    }
    pivots_.emplace(pivot, rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

bool Subspace::insert(const GWAElement& e) {
    if (!(e.ring() == base_)) throw ring_error("element base mismatch");
    return insert(row_from_element(e));
}

bool Subspace::insert_poly(const MultiPoly& p) {
    if (!(p.ring() == base_)) throw ring_error("polynomial base mismatch");
    Row r;
    for (const auto& [mon, c] : p.terms()) r.emplace(NfKey{0, mon}, c);
    return insert(std::move(r));
}

bool Subspace::contains(const GWAElement& e) const {
    return reduce(row_from_element(e)).empty();
}

bool Subspace::contains_poly(const MultiPoly& p) const {
    Row r;
    for (const auto& [mon, c] : p.terms()) r.emplace(NfKey{0, mon}, c);
    return reduce(std::move(r)).empty();
}

bool Subspace::equals(const Subspace& o) const {
    if (!(base_ == o.base_) || rows_.size() != o.rows_.size()) return false;
    // reduced echelon bases are canonical up to row order; match by pivot
    for (const auto& [pivot, idx] : pivots_) {
        auto it = o.pivots_.find(pivot);
        if (it == o.pivots_.end()) return false;
        if (!(rows_[idx] == o.rows_[it->second])) return false;
    }
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    Subspace out(*this);
    for (const auto& r : o.rows_) out.insert(r);
    return out;
}

std::vector<GWAElement> Subspace::row_elements() const {
    std::vector<GWAElement> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(element_from_row(base_, r));
    return out;
}

std::vector<MultiPoly> Subspace::row_polys() const {
    std::vector<MultiPoly> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
        MultiPoly p(base_.kind, base_.n);
        for (const auto& [key, c] : r) {
            if (key.deg != 0) throw ring_error("row is not a base-ring element");
            p.add_term(key.mon, c);
        }
        out.push_back(std::move(p));
    }
    return out;
}

Subspace subspace_from_elements(RingDesc base, const std::vector<GWAElement>& gens) {
    Subspace s(base);
    for (const auto& g : gens) s.insert(g);
    return s;
}

Subspace subspace_from_polys(RingDesc base, const std::vector<MultiPoly>& gens) {
    Subspace s(base);
    for (const auto& g : gens) s.insert_poly(g);
    return s;
}

Subspace subspace_product(const GWASpec& spec, const Subspace& v, const Subspace& w) {
    if (!(v.base() == spec.base()) || !(w.base() == spec.base()))
        throw ring_error("subspace base mismatch");
    Subspace out(spec.base());
    auto velems = v.row_elements();
    auto welems = w.row_elements();
    for (const auto& a : velems)
        for (const auto& b : welems) out.insert(gwa_mul(spec, a, b));
    return out;
}

Subspace poly_subspace_product(const Subspace& v, const Subspace& w) {
    if (!(v.base() == w.base())) throw ring_error("subspace base mismatch");
    Subspace out(v.base());
    auto vp = v.row_polys();
    auto wp = w.row_polys();
    for (const auto& a : vp)
        for (const auto& b : wp) out.insert_poly(a * b);
    return out;
}

} // namespace gwa
