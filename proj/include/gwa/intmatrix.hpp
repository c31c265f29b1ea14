#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gwa/intpoly.hpp"
#include "gwa/scalar.hpp"

namespace gwa {

/// Square matrix over Z with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Integer(0)) {}
    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
        int n = static_cast<int>(rows.size());
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
                throw validation_error("matrix must be square");
            for (int j = 0; j < n; ++j)
                m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return m;
    }

    int size() const { return n_; }
    Integer& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Integer& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    bool operator==(const IntMatrix& o) const = default;
    bool is_identity() const { return *this == identity(n_); }

    IntMatrix operator*(const IntMatrix& o) const {
        check_size(o);
        IntMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Integer& aik = at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
            }
        return r;
    }
    IntMatrix operator+(const IntMatrix& o) const {
        check_size(o);
        IntMatrix r(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    IntMatrix operator-() const {
        IntMatrix r(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    IntMatrix pow(std::uint64_t k) const {
        IntMatrix acc = identity(n_);
        IntMatrix base(*this);
        while (k > 0) {
            if (k & 1) acc = acc * base;
            if (k >>= 1) base = base * base;
        }
        return acc;
    }

    /// max |entry|
    Integer norm() const {
        Integer m(0);
        for (const auto& v : a_) {
            Integer av = abs(v);
            if (av > m) m = av;
        }
        return m;
    }

    Integer trace() const {
        Integer t(0);
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    /// Characteristic polynomial det(xI - M), monic, via the
    /// Faddeev-LeVerrier recurrence (all divisions exact over Z).
    IntPoly char_poly() const;

    Integer det() const;

    /// Integer inverse; requires det = +-1.
    IntMatrix inverse_unimodular() const;

    std::string to_string() const;

private:
    void check_size(const IntMatrix& o) const {
        if (n_ != o.n_) throw validation_error("matrix size mismatch");
    }
    int n_ = 0;
    std::vector<Integer> a_;
};

} // namespace gwa
