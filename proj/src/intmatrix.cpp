#include "gwa/intmatrix.hpp"

#include <sstream>

namespace gwa {

IntPoly IntMatrix::char_poly() const {
    // Faddeev-LeVerrier: c_n = 1, B_0 = I,
    //   c_{n-k} = -tr(M B_{k-1}) / k,  B_k = M B_{k-1} + c_{n-k} I.
    const int n = n_;
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
    c[static_cast<std::size_t>(n)] = 1;
    IntMatrix b = identity(n);
    for (int k = 1; k <= n; ++k) {
        IntMatrix mb = *this * b;
        Integer t = mb.trace();
        Integer ck;
        mpz_divexact(ck.get_mpz_t(), t.get_mpz_t(), Integer(k).get_mpz_t());
        ck = -ck;
        c[static_cast<std::size_t>(n - k)] = ck;
        b = mb;
        for (int i = 0; i < n; ++i) b.at(i, i) += ck;
    }
    return IntPoly(std::move(c));
}

Integer IntMatrix::det() const {
    // det(M) = (-1)^n * chi(0)
    IntPoly chi = char_poly();
    Integer c0 = chi.coeff(0);
    return (n_ % 2 == 0) ? c0 : -c0;
}

IntMatrix IntMatrix::inverse_unimodular() const {
    // Adjugate from the Faddeev-LeVerrier chain: with chi = sum c_k x^k,
    // adj(M) = (-1)^{n-1} (M^{n-1} + c_{n-1} M^{n-2} + ... + c_1 I).
    const int n = n_;
    IntPoly chi = char_poly();
    Integer d = (n % 2 == 0) ? chi.coeff(0) : -chi.coeff(0);
    if (d != 1 && d != -1)
        throw validation_error("inverse_unimodular requires det = +-1, got " + d.get_str());
    IntMatrix acc(n); // horner on the matrix polynomial above
    for (int i = 0; i < n; ++i) acc.at(i, i) = 1;
    for (int k = n - 1; k >= 1; --k) {
        acc = *this * acc;
        for (int i = 0; i < n; ++i)
            acc.at(i, i) += chi.coeff(static_cast<std::size_t>(k));
    }
    if ((n % 2 == 0)) acc = -acc;
    // M^{-1} = adj / det and det is a unit
    if (d == -1) acc = -acc;
    return acc;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < n_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < n_; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

} // namespace gwa
