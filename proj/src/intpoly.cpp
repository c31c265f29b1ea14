#include "gwa/intpoly.hpp"

#include <sstream>

namespace gwa {

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Integer a = c_[i];
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
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

std::uint64_t euler_phi(std::uint64_t d) {
    std::uint64_t result = d;
    for (std::uint64_t p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            result -= result / p;
            while (d % p == 0) d /= p;
        }
    }
    if (d > 1) result -= result / d;
    return result;
}

IntPoly cyclotomic(std::uint64_t d) {
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, all divisions exact.
    std::vector<Integer> xd(static_cast<std::size_t>(d) + 1, Integer(0));
    xd[0] = -1;
    xd[static_cast<std::size_t>(d)] = 1;
    IntPoly num{std::vector<Integer>(xd)};
    for (std::uint64_t e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto q = num.divide_exact(cyclotomic(e));
        if (!q) throw error("internal: cyclotomic division failed");
        num = *q;
    }
    return num;
}

std::vector<std::uint64_t> cyclotomic_indices_up_to_degree(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    // phi(d) >= sqrt(d/2), so phi(d) <= n forces d <= 2n^2 + 2.
    for (std::uint64_t d = 1; d <= 2 * n * n + 2; ++d)
        if (euler_phi(d) <= n) out.push_back(d);
    return out;
}

} // namespace gwa
