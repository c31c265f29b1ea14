#include "gwa/json_io.hpp"

#include "gwa/poly_io.hpp"

namespace gwa {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw validation_error("schema: " + msg); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

Scalar scalar_field(const json& j) {
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    bad("scalar must be an integer or a fraction string");
}

} // namespace

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) {
            const Integer& v = m.at(i, j);
            if (v.fits_slong_p())
                row.push_back(v.get_si());
            else
                row.push_back(v.get_str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix intmatrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
    int n = static_cast<int>(j.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const json& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n) bad("matrix must be square");
        for (int k = 0; k < n; ++k) {
            const json& v = row.at(static_cast<std::size_t>(k));
            if (v.is_number_integer())
                m.at(i, k) = Integer(static_cast<long>(v.get<std::int64_t>()));
            else if (v.is_string())
                m.at(i, k) = Integer(v.get<std::string>());
            else
                bad("matrix entries must be integers");
        }
    }
    return m;
}

json to_json(const LaurentAuto& a) {
    json alpha = json::array();
    for (const auto& s : a.alpha) alpha.push_back(format_scalar(s));
    return json{{"n", a.n}, {"matrix", to_json(a.matrix)}, {"alpha", std::move(alpha)}};
}

LaurentAuto laurent_auto_from_json(const json& j) {
    IntMatrix m = intmatrix_from_json(field(j, "matrix"));
    const json& al = field(j, "alpha");
    if (!al.is_array() || static_cast<int>(al.size()) != m.size())
        bad("alpha must list one nonzero scalar per variable");
    std::vector<Scalar> alpha;
    for (const auto& v : al) alpha.push_back(scalar_field(v));
    if (j.contains("n") && j.at("n").get<int>() != m.size())
        bad("field 'n' disagrees with the matrix size");
    return LaurentAuto(std::move(m), std::move(alpha));
}

json to_json(const PlaneEndo& e) {
    return json{{"f", json::array({format_poly(e.f1), format_poly(e.f2)})}};
}

PlaneEndo plane_endo_from_json(const json& j) {
    const json& f = field(j, "f");
    if (!f.is_array() || f.size() != 2) bad("'f' must list the two coordinate images");
    RingDesc p2{RingKind::polynomial, 2};
    return PlaneEndo(parse_poly(f.at(0).get<std::string>(), p2),
                     parse_poly(f.at(1).get<std::string>(), p2));
}

json to_json(const TameWord& w) {
    json out = json::array();
    for (const auto& f : w.factors) {
        if (const auto* a = std::get_if<AffineFactor>(&f)) {
            out.push_back(json{{"kind", "affine"},
                               {"matrix",
                                json::array({json::array({format_scalar(a->a), format_scalar(a->b)}),
                                             json::array({format_scalar(a->c), format_scalar(a->d)})})},
                               {"translation",
                                json::array({format_scalar(a->t1), format_scalar(a->t2)})}});
        } else if (const auto* e = std::get_if<ElementaryFactor>(&f)) {
            out.push_back(json{{"kind", "elementary"}, {"h", format_poly(e->h)}});
        } else {
            out.push_back(json{{"kind", "swap"}});
        }
    }
    return out;
}

json to_json(const TriangularAuto& t) {
    return json{{"lambda", json::array({format_scalar(t.lambda1), format_scalar(t.lambda2)})},
                {"beta", format_poly(t.g1)},
                {"c", format_scalar(t.g2)}};
}

json to_json(const LaneForm& lane) {
    json taus = json::array();
    for (const auto& t : lane.taus) taus.push_back(to_json(t));
    return json{{"conjugator", to_json(lane.conjugator)},
                {"taus", std::move(taus)},
                {"degrees", lane.degrees}};
}

json to_json(const OrderVerdict& v) {
    if (v.finite) return json{{"finite", true}, {"order", v.order}};
    json out{{"finite", false}};
    if (v.noncyclotomic_factor)
        out["noncyclotomic_factor"] = v.noncyclotomic_factor->to_string();
    if (v.norm_witness) {
        out["norm_witness"] = json{{"exponent", v.norm_witness->exponent},
                                   {"entry", json::array({v.norm_witness->row, v.norm_witness->col})},
                                   {"value", v.norm_witness->value.get_str()},
                                   {"bound", v.norm_witness->bound.get_str()},
                                   {"cap", v.norm_witness->cap}};
    }
    return out;
}

namespace {

// growth exponents are rounded to hundredths; print them as plain decimals
std::string format_hundredths(const Scalar& s) {
    Integer cents = Integer(s.get_num() * 100) / s.get_den();
    bool neg = cents < 0;
    if (neg) cents = -cents;
    Integer whole = cents / 100, frac = cents % 100;
    std::string out = (neg ? "-" : "") + whole.get_str() + ".";
    std::string f = frac.get_str();
    return out + (f.size() == 1 ? "0" + f : f);
}

} // namespace

json to_json(const GrowthReport& r) {
    json fit;
    switch (r.fit_kind) {
        case GrowthReport::FitKind::none: fit = json{{"kind", "none"}}; break;
        case GrowthReport::FitKind::polynomial:
            fit = json{{"kind", "polynomial"},
                       {"exponent", format_hundredths(r.fitted_exponent)}};
            break;
        case GrowthReport::FitKind::exponential:
            fit = json{{"kind", "exponential"}};
            if (r.witness) fit["witness"] = *r.witness;
            break;
    }
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(json{{"name", c.name}, {"pass", c.pass}});
    json out{{"dims", r.dims}, {"fit", std::move(fit)}, {"checks", std::move(checks)}};
    if (r.increment_exponent) out["increment_exponent"] = format_hundredths(*r.increment_exponent);
    return out;
}

json to_json(const SandwichReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back(json{{"m", e.m},
                               {"dim_v_m", e.dim_v_m},
                               {"dim_w_m", e.dim_w_m},
                               {"dim_w_2m", e.dim_w_2m},
                               {"lower_pass", e.lower_pass},
                               {"upper_pass", e.upper_pass}});
    return json{{"entries", std::move(entries)}, {"all_pass", r.all_pass()}};
}

json to_json(const SMCReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back(json{{"m", e.m},
                               {"dim", e.dim},
                               {"threshold", format_scalar(e.threshold)},
                               {"pass", e.pass}});
    json out{{"n", r.n},
             {"m_max", r.m_max},
             {"dim_w", r.dim_w},
             {"constant", format_scalar(r.constant)},
             {"entries", std::move(entries)},
             {"all_pass", r.all_pass},
             {"note", r.note}};
    if (r.first_failure) out["first_failure"] = *r.first_failure;
    return out;
}

json to_json(const GWASpec& spec) {
    json base{{"kind", spec.base().kind == RingKind::laurent ? "laurent" : "polynomial"},
              {"n", spec.base().n}};
    json sigma;
    switch (spec.sigma().kind()) {
        case BaseAuto::Kind::laurent: sigma = to_json(spec.sigma().laurent()); break;
        case BaseAuto::Kind::plane: sigma = to_json(spec.sigma().plane()); break;
        case BaseAuto::Kind::uni_affine: {
            const UniAffine& u = spec.sigma().uni_affine();
            MultiPoly img = MultiPoly::variable(RingKind::polynomial, 1, 1) * u.b +
                            MultiPoly::constant(RingKind::polynomial, 1, u.c);
            sigma = json{{"f", json::array({format_poly(img)})}};
            break;
        }
    }
    return json{{"base", std::move(base)}, {"sigma", std::move(sigma)},
                {"a", format_poly(spec.a())}};
}

GWASpec gwa_spec_from_json(const json& j) {
    const json& base = field(j, "base");
    std::string kind = field(base, "kind").get<std::string>();
    int n = field(base, "n").get<int>();
    const json& sigma = field(j, "sigma");

    if (kind == "laurent") {
        LaurentAuto a = laurent_auto_from_json(sigma);
        if (a.n != n) bad("sigma arity disagrees with the base");
        MultiPoly defelt = parse_poly(field(j, "a").get<std::string>(), {RingKind::laurent, n});
        return GWASpec(BaseAuto::from_laurent(std::move(a)), std::move(defelt));
    }
    if (kind != "polynomial") bad("base kind must be 'polynomial' or 'laurent'");

    RingDesc ring{RingKind::polynomial, n};
    MultiPoly defelt = parse_poly(field(j, "a").get<std::string>(), ring);
    const json& f = field(sigma, "f");
    if (!f.is_array() || static_cast<int>(f.size()) != n)
        bad("sigma must list one coordinate image per variable");
    if (n == 1) {
        MultiPoly img = parse_poly(f.at(0).get<std::string>(), ring);
        auto deg = img.total_degree();
        if (!deg || *deg > 1) bad("an automorphism of k[z] must be affine b*z1 + c");
        Monomial z(1);
        z.e[0] = 1;
        UniAffine u{img.coeff(z), img.constant_term()};
        return GWASpec(BaseAuto::from_uni_affine(u), std::move(defelt));
    }
    if (n == 2) {
        PlaneEndo e = plane_endo_from_json(sigma);
        return GWASpec(BaseAuto::from_plane(std::move(e)), std::move(defelt));
    }
    bad("polynomial bases are supported for n = 1 and n = 2");
}

} // namespace gwa
