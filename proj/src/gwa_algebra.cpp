#include "gwa/gwa_algebra.hpp"

#include <sstream>

#include "gwa/poly_io.hpp"

namespace gwa {

BaseAuto BaseAuto::from_laurent(LaurentAuto sigma) {
    BaseAuto b;
    b.kind_ = Kind::laurent;
    b.ring_ = {RingKind::laurent, sigma.n};
    b.laurent_inv_ = inverse(sigma);
    b.laurent_ = std::move(sigma);
    return b;
}

BaseAuto BaseAuto::from_plane(PlaneEndo sigma) {
    BaseAuto b;
    b.kind_ = Kind::plane;
    b.ring_ = {RingKind::polynomial, 2};
    b.plane_inv_ = plane_inverse(sigma); // throws not_an_automorphism if it is not one
    b.plane_ = std::move(sigma);
    return b;
}

BaseAuto BaseAuto::from_uni_affine(UniAffine sigma) {
    if (sigma.b == 0) throw validation_error("affine automorphism of k[z] needs b != 0");
    BaseAuto b;
    b.kind_ = Kind::uni_affine;
    b.ring_ = {RingKind::polynomial, 1};
    b.uni_ = sigma;
    return b;
}

const std::vector<MultiPoly>& BaseAuto::images(std::int64_t i) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (image_cache_.find(0) == image_cache_.end()) {
        std::vector<MultiPoly> id;
        for (int v = 1; v <= ring_.n; ++v)
            id.push_back(MultiPoly::variable(ring_.kind, ring_.n, v));
        image_cache_.emplace(0, std::move(id));
    }
    if (auto it = image_cache_.find(i); it != image_cache_.end()) return it->second;

    std::vector<MultiPoly> one_step;
    switch (kind_) {
        case Kind::laurent: {
            const LaurentAuto& s = i > 0 ? *laurent_ : *laurent_inv_;
            for (int v = 1; v <= ring_.n; ++v)
                one_step.push_back(apply(s, MultiPoly::variable(ring_.kind, ring_.n, v)));
            break;
        }
        case Kind::plane: {
            const PlaneEndo& s = i > 0 ? *plane_ : *plane_inv_;
            one_step = {s.f1, s.f2};
            break;
        }
        case Kind::uni_affine: {
            UniAffine s = i > 0 ? *uni_ : uni_->inverse();
            one_step = {MultiPoly::variable(ring_.kind, 1, 1) * s.b +
                        MultiPoly::constant(ring_.kind, 1, s.c)};
            break;
        }
    }

    // fill the gap from the nearest cached power towards i
    const std::int64_t step = i > 0 ? 1 : -1;
    std::int64_t j = i;
    while (image_cache_.find(j) == image_cache_.end()) j -= step;
    for (; j != i; j += step) {
        const auto& prev = image_cache_.at(j);
        std::vector<MultiPoly> next;
        next.reserve(prev.size());
        for (const auto& p : prev) next.push_back(substitute(p, one_step));
        image_cache_.emplace(j + step, std::move(next));
    }
    return image_cache_.at(i);
}

MultiPoly BaseAuto::apply_power(const MultiPoly& p, std::int64_t i) const {
    if (p.ring() != ring_) throw ring_error("element does not live in the base ring");
    if (i == 0) return p;
    return substitute(p, images(i));
}

bool BaseAuto::same_as(const BaseAuto& o) const {
    if (kind_ != o.kind_ || !(ring_ == o.ring_)) return false;
    switch (kind_) {
        case Kind::laurent: return *laurent_ == *o.laurent_;
        case Kind::plane: return *plane_ == *o.plane_;
        case Kind::uni_affine: return *uni_ == *o.uni_;
    }
    return false;
}

GWASpec::GWASpec(BaseAuto sigma, MultiPoly a)
    : sigma_(std::make_shared<BaseAuto>(std::move(sigma))), a_(std::move(a)) {
    if (a_.ring() != sigma_->ring())
        throw validation_error("defining element must live in the base ring");
    if (a_.is_zero())
        warnings_.push_back(
            "defining element a = 0: the algebra is still defined, but transfer of the "
            "domain/Noetherian properties from the base needs a != 0");
}

MultiPoly GWASpec::apply_sigma(const MultiPoly& p, std::int64_t power) const {
    return sigma_->apply_power(p, power);
}

const MultiPoly& GWASpec::twisted_a(std::int64_t j) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = a_cache_.find(j);
    if (it != a_cache_.end()) return it->second;
    MultiPoly value = sigma_->apply_power(a_, j);
    return a_cache_.emplace(j, std::move(value)).first->second;
}

bool GWASpec::same_as(const GWASpec& o) const {
    return sigma_->same_as(*o.sigma_) && a_ == o.a_;
}

GWAElement GWAElement::embed(const GWASpec& spec, const MultiPoly& d) {
    if (d.ring() != spec.base()) throw ring_error("coefficient does not live in the base ring");
    GWAElement e(spec.base());
    e.add_component(0, d);
    return e;
}

GWAElement GWAElement::one(const GWASpec& spec) {
    return embed(spec, MultiPoly::one(spec.base().kind, spec.base().n));
}

GWAElement GWAElement::x(const GWASpec& spec, std::int64_t power) {
    return term(spec, power, MultiPoly::one(spec.base().kind, spec.base().n));
}

GWAElement GWAElement::y(const GWASpec& spec, std::int64_t power) {
    return term(spec, -power, MultiPoly::one(spec.base().kind, spec.base().n));
}

GWAElement GWAElement::term(const GWASpec& spec, std::int64_t degree, const MultiPoly& d) {
    if (d.ring() != spec.base()) throw ring_error("coefficient does not live in the base ring");
    GWAElement e(spec.base());
    e.add_component(degree, d);
    return e;
}

MultiPoly GWAElement::component(std::int64_t degree) const {
    auto it = comps_.find(degree);
    if (it != comps_.end()) return it->second;
    return MultiPoly::zero(ring_.kind, ring_.n);
}

void GWAElement::add_component(std::int64_t degree, const MultiPoly& d) {
    if (d.is_zero()) return;
    auto it = comps_.find(degree);
    if (it == comps_.end()) {
        comps_.emplace(degree, d);
    } else {
        it->second += d;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

std::string GWAElement::to_string() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = comps_.rbegin(); it != comps_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << '(' << format_poly(it->second) << ')';
        if (it->first > 0) {
            os << "*x";
            if (it->first > 1) os << '^' << it->first;
        } else if (it->first < 0) {
            os << "*y";
            if (it->first < -1) os << '^' << -it->first;
        }
    }
    return os.str();
}

namespace {

void check_same(const GWAElement& u, const GWAElement& v) {
    if (!(u.ring() == v.ring())) throw ring_error("elements live over different bases");
}

} // namespace

GWAElement gwa_add(const GWAElement& u, const GWAElement& v) {
    check_same(u, v);
    GWAElement r(u);
    for (const auto& [deg, d] : v.components()) r.add_component(deg, d);
    return r;
}

GWAElement gwa_sub(const GWAElement& u, const GWAElement& v) {
    check_same(u, v);
    GWAElement r(u);
    for (const auto& [deg, d] : v.components()) r.add_component(deg, -d);
    return r;
}

GWAElement gwa_scale(const GWAElement& u, const Scalar& c) {
    GWAElement r(u.ring());
    if (c == 0) return r;
    for (const auto& [deg, d] : u.components()) r.add_component(deg, d * c);
    return r;
}

GWAElement gwa_mul(const GWASpec& spec, const GWAElement& u, const GWAElement& v) {
    check_same(u, v);
    if (!(u.ring() == spec.base())) throw ring_error("elements do not match the spec base");
    GWAElement r(spec.base());
    for (const auto& [i, d] : u.components()) {
        for (const auto& [j, e] : v.components()) {
            // (d x^i)(e x^j): move e across x^i (or y^{-i}), then cancel
            // opposite powers through x y = sigma(a), y x = a.
            MultiPoly coeff = d * spec.apply_sigma(e, i);
            if ((i > 0 && j < 0) || (i < 0 && j > 0)) {
                std::int64_t cancel = std::min(std::abs(i), std::abs(j));
                if (i > 0) {
                    // x^i y^J: factors sigma^i(a) sigma^{i-1}(a) ...
                    for (std::int64_t t = 0; t < cancel; ++t) coeff *= spec.twisted_a(i - t);
                } else {
                    // y^I x^j: factors sigma^{-(I-1)}(a) ... sigma^{-(I-cancel)}(a)
                    std::int64_t big_i = -i;
                    for (std::int64_t t = 0; t < cancel; ++t)
                        coeff *= spec.twisted_a(-(big_i - 1 - t));
                }
            }
            r.add_component(i + j, coeff);
        }
    }
    return r;
}

GWAElement gwa_pow(const GWASpec& spec, const GWAElement& u, std::uint64_t k) {
    GWAElement acc = GWAElement::one(spec);
    for (std::uint64_t i = 0; i < k; ++i) acc = gwa_mul(spec, acc, u);
    return acc;
}

MultiPoly power_subalgebra_defelt(const GWASpec& spec, std::uint64_t m) {
    if (m == 0) throw validation_error("power_subalgebra_defelt needs m >= 1");
    MultiPoly b = spec.a();
    for (std::uint64_t j = 1; j < m; ++j) b *= spec.twisted_a(-static_cast<std::int64_t>(j));
    return b;
}

bool verify_power_lemma(const GWASpec& spec, std::uint64_t m) {
    MultiPoly b = power_subalgebra_defelt(spec, m);
    GWAElement xm = gwa_pow(spec, GWAElement::x(spec), m);
    GWAElement ym = gwa_pow(spec, GWAElement::y(spec), m);
    GWAElement yx = gwa_mul(spec, ym, xm);
    GWAElement xy = gwa_mul(spec, xm, ym);
    return yx == GWAElement::embed(spec, b) &&
           xy == GWAElement::embed(spec, spec.apply_sigma(b, static_cast<std::int64_t>(m)));
}

GWASpec make_weyl() {
    BaseAuto sigma = BaseAuto::from_uni_affine(UniAffine{Scalar(1), Scalar(-1)});
    MultiPoly h = MultiPoly::variable(RingKind::polynomial, 1, 1);
    return GWASpec(std::move(sigma), h);
}

GWASpec make_heisenberg(std::int64_t m, const Scalar& a1, const Scalar& a2) {
    return make_heisenberg(m, a1, a2, MultiPoly::one(RingKind::laurent, 2));
}

GWASpec make_heisenberg(std::int64_t m, const Scalar& a1, const Scalar& a2, const MultiPoly& a) {
    if (a1 == 0 || a2 == 0) throw validation_error("Heisenberg scalars must be nonzero");
    IntMatrix mat = IntMatrix::identity(2);
    mat.at(0, 1) = m;
    LaurentAuto sigma(std::move(mat), {a1, a2});
    return GWASpec(BaseAuto::from_laurent(std::move(sigma)), a);
}

} // namespace gwa
