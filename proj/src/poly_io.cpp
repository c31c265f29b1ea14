#include "gwa/poly_io.hpp"

#include <cctype>
#include <sstream>

namespace gwa {

namespace {

class Parser {
public:
    Parser(const std::string& text, const RingDesc& ring) : s_(text), ring_(ring) {}

    MultiPoly run() {
        MultiPoly p(ring_.kind, ring_.n);
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (take() == '-');
        p += signed_term(negate);
        skip_ws();
        while (pos_ < s_.size()) {
            char op = take();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            p += signed_term(op == '-');
            skip_ws();
        }
        return p;
    }

private:
    MultiPoly signed_term(bool negate) {
        MultiPoly t = term();
        return negate ? -t : t;
    }

    MultiPoly term() {
        skip_ws();
        Scalar c(1);
        Monomial m(static_cast<std::size_t>(ring_.n));
        bool saw_anything = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = coeff();
            saw_anything = true;
        } else if (peek() == 'z') {
            factor_into(m);
            saw_anything = true;
        } else {
            fail("expected coefficient or variable");
        }
        skip_ws();
        while (peek() == '*') {
            take();
            skip_ws();
            if (peek() != 'z') fail("expected variable after '*'");
            factor_into(m);
            skip_ws();
        }
        (void)saw_anything;
        if (ring_.kind == RingKind::polynomial)
            for (auto e : m.e)
                if (e < 0) fail("negative exponent in polynomial ring");
        MultiPoly t(ring_.kind, ring_.n);
        t.add_term(std::move(m), std::move(c));
        return t;
    }

    void factor_into(Monomial& m) {
        expect('z');
        std::size_t var = positive_int();
        if (var < 1 || var > static_cast<std::size_t>(ring_.n))
            fail("variable index out of range for arity " + std::to_string(ring_.n));
        std::int64_t e = 1;
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            e = integer();
        }
        m.e[var - 1] += e;
    }

    Scalar coeff() {
        std::string num = digits();
        skip_ws();
        if (peek() == '/') {
            take();
            skip_ws();
            std::string den = digits();
            return make_scalar(Integer(num), Integer(den));
        }
        return Scalar(Integer(num));
    }

    std::int64_t integer() {
        bool neg = false;
        if (peek() == '-') {
            take();
            neg = true;
        }
        std::string d = digits();
        std::int64_t v = 0;
        for (char ch : d) {
            v = v * 10 + (ch - '0');
            if (v > (std::int64_t{1} << 40)) fail("exponent too large");
        }
        return neg ? -v : v;
    }

    std::size_t positive_int() {
        std::string d = digits();
        std::size_t v = 0;
        for (char ch : d) {
            v = v * 10 + static_cast<std::size_t>(ch - '0');
            if (v > 1'000'000) fail("index too large");
        }
        if (v == 0) fail("expected positive integer");
        return v;
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        take();
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char take() { return s_[pos_++]; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    const std::string& s_;
    RingDesc ring_;
    std::size_t pos_ = 0;
};

std::string format_monomial(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << 'z' << (i + 1);
        if (m.e[i] != 1) os << '^' << m.e[i];
    }
    return os.str();
}

} // namespace

MultiPoly parse_poly(const std::string& text, const RingDesc& ring) {
    return Parser(text, ring).run();
}

std::string format_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending canonical order: leading term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Scalar a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono = format_monomial(m);
        if (mono.empty()) {
            os << format_scalar(a);
        } else if (a == 1) {
            os << mono;
        } else {
            os << format_scalar(a) << '*' << mono;
        }
    }
    return os.str();
}

} // namespace gwa
