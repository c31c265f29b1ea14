#include "gwa/multipoly.hpp"

#include <map>

namespace gwa {

namespace {

// Powers of one image, memoized per exponent. Negative exponents go through
// the unit inverse, which must exist for the substitution to be defined.
class ImagePowers {
public:
    explicit ImagePowers(const MultiPoly& base) : base_(base) {}

    const MultiPoly& get(std::int64_t e) {
        auto it = cache_.find(e);
        if (it != cache_.end()) return it->second;
        MultiPoly value = compute(e);
        return cache_.emplace(e, std::move(value)).first->second;
    }

private:
    MultiPoly compute(std::int64_t e) {
        if (e == 0) return MultiPoly::one(base_.kind(), base_.arity());
        if (e > 0) return base_.pow(static_cast<std::uint64_t>(e));
        auto inv = base_.unit_inverse();
        if (!inv)
            throw ring_error("substitution image is not invertible but a negative power is required");
        return inv->pow(static_cast<std::uint64_t>(-e));
    }

    const MultiPoly& base_;
    std::map<std::int64_t, MultiPoly> cache_;
};

} // namespace

MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images) {
    if (static_cast<int>(images.size()) != p.arity())
        throw ring_error("substitution needs one image per variable");
    if (images.empty()) return p;
    const RingKind kind = images.front().kind();
    const int n = images.front().arity();
    for (const auto& im : images)
        if (im.kind() != kind || im.arity() != n)
            throw ring_error("substitution images live in different rings");

    std::vector<ImagePowers> powers;
    powers.reserve(images.size());
    for (const auto& im : images) powers.emplace_back(im);

    MultiPoly result(kind, n);
    for (const auto& [m, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(kind, n, c);
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] != 0) term *= powers[i].get(m.e[i]);
        result += term;
    }
    return result;
}

} // namespace gwa
