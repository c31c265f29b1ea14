#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "gwa/laurent_auto.hpp"
#include "gwa/multipoly.hpp"
#include "gwa/plane_endo.hpp"

namespace gwa {

/// sigma(z) = b*z + c on k[z], b nonzero. Every automorphism of k[z] has
/// this shape.
struct UniAffine {
    Scalar b, c;
    UniAffine inverse() const { return {Scalar(1) / b, -c / b}; }
    bool operator==(const UniAffine&) const = default;
};

/// The defining automorphism of a GWA base, with its inverse precomputed and
/// coordinate images of every power memoized. Logically immutable; the image
/// cache is guarded so concurrent readers are safe.
class BaseAuto {
public:
    enum class Kind { laurent, plane, uni_affine };

    static BaseAuto from_laurent(LaurentAuto sigma);
    /// inverse computed through tame decomposition; failure surfaces here
    static BaseAuto from_plane(PlaneEndo sigma);
    static BaseAuto from_uni_affine(UniAffine sigma);

    // copies and moves drop the memo cache (it is only a cache)
    BaseAuto(const BaseAuto& o)
        : kind_(o.kind_), ring_(o.ring_), laurent_(o.laurent_), laurent_inv_(o.laurent_inv_),
          plane_(o.plane_), plane_inv_(o.plane_inv_), uni_(o.uni_) {}
    BaseAuto(BaseAuto&& o) noexcept
        : kind_(o.kind_), ring_(o.ring_), laurent_(std::move(o.laurent_)),
          laurent_inv_(std::move(o.laurent_inv_)), plane_(std::move(o.plane_)),
          plane_inv_(std::move(o.plane_inv_)), uni_(o.uni_) {}
    BaseAuto& operator=(const BaseAuto&) = delete;
    BaseAuto& operator=(BaseAuto&&) = delete;

    Kind kind() const { return kind_; }
    RingDesc ring() const { return ring_; }
    const LaurentAuto& laurent() const { return *laurent_; }
    const PlaneEndo& plane() const { return *plane_; }
    const UniAffine& uni_affine() const { return *uni_; }

    /// sigma^i(p) for any integer i.
    MultiPoly apply_power(const MultiPoly& p, std::int64_t i) const;

    bool same_as(const BaseAuto& o) const;

private:
    BaseAuto() = default;
    const std::vector<MultiPoly>& images(std::int64_t i) const;

    Kind kind_ = Kind::uni_affine;
    RingDesc ring_;
    std::optional<LaurentAuto> laurent_, laurent_inv_;
    std::optional<PlaneEndo> plane_, plane_inv_;
    std::optional<UniAffine> uni_;

    mutable std::mutex mu_;
    mutable std::map<std::int64_t, std::vector<MultiPoly>> image_cache_;
};

/// Generalized Weyl algebra D(sigma, a): D a polynomial or Laurent
/// polynomial ring, x d = sigma(d) x, y d = sigma^{-1}(d) y, y x = a,
/// x y = sigma(a).
class GWASpec {
public:
    GWASpec(BaseAuto sigma, MultiPoly a);

    RingDesc base() const { return sigma_->ring(); }
    const BaseAuto& sigma() const { return *sigma_; }
    const MultiPoly& a() const { return a_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    MultiPoly apply_sigma(const MultiPoly& p, std::int64_t power) const;
    /// sigma^j(a), memoized.
    const MultiPoly& twisted_a(std::int64_t j) const;

    bool same_as(const GWASpec& o) const;

private:
    std::shared_ptr<const BaseAuto> sigma_;
    MultiPoly a_;
    std::vector<std::string> warnings_;

    mutable std::mutex mu_;
    mutable std::map<std::int64_t, MultiPoly> a_cache_;
};

/// Element in normal form: finitely supported map degree -> base coefficient,
/// degree i > 0 meaning d*x^i, i < 0 meaning d*y^{-i}, i = 0 plain d.
class GWAElement {
public:
    GWAElement() = default;
    explicit GWAElement(RingDesc ring) : ring_(ring) {}

    static GWAElement zero(const GWASpec& spec) { return GWAElement(spec.base()); }
    static GWAElement embed(const GWASpec& spec, const MultiPoly& d);
    static GWAElement one(const GWASpec& spec);
    static GWAElement x(const GWASpec& spec, std::int64_t power = 1);
    static GWAElement y(const GWASpec& spec, std::int64_t power = 1);
    static GWAElement term(const GWASpec& spec, std::int64_t degree, const MultiPoly& d);

    RingDesc ring() const { return ring_; }
    const std::map<std::int64_t, MultiPoly>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }
    MultiPoly component(std::int64_t degree) const;

    void add_component(std::int64_t degree, const MultiPoly& d);
    bool operator==(const GWAElement& o) const { return ring_ == o.ring_ && comps_ == o.comps_; }

    std::string to_string() const;

private:
    RingDesc ring_;
    std::map<std::int64_t, MultiPoly> comps_;
};

GWAElement gwa_add(const GWAElement& u, const GWAElement& v);
GWAElement gwa_sub(const GWAElement& u, const GWAElement& v);
GWAElement gwa_scale(const GWAElement& u, const Scalar& c);
GWAElement gwa_mul(const GWASpec& spec, const GWAElement& u, const GWAElement& v);
GWAElement gwa_pow(const GWASpec& spec, const GWAElement& u, std::uint64_t k);

/// b = sigma^{-(m-1)}(a) ... sigma^{-1}(a) a, the defining element of the
/// subalgebra generated by the base together with x^m and y^m.
MultiPoly power_subalgebra_defelt(const GWASpec& spec, std::uint64_t m);

/// Self-consistency of the rewrite engine: y^m x^m and x^m y^m computed by
/// gwa_mul must match the closed forms b and sigma^m(b).
bool verify_power_lemma(const GWASpec& spec, std::uint64_t m);

/// First Weyl algebra: D = k[h], sigma(h) = h - 1, a = h.
GWASpec make_weyl();

/// H_m over k[z1^{±1}, z2^{±1}]: sigma(z1) = a1 z1, sigma(z2) = a2 z1^m z2.
GWASpec make_heisenberg(std::int64_t m, const Scalar& a1, const Scalar& a2);
GWASpec make_heisenberg(std::int64_t m, const Scalar& a1, const Scalar& a2, const MultiPoly& a);

} // namespace gwa
