#pragma once

#include <gmpxx.h>

#include <vector>

#include "specwl/graph.hpp"

namespace specwl {

using BigInt = mpz_class;

/// Dense square matrix of arbitrary-precision integers, row-major.
struct BigMatrix {
    int n = 0;
    std::vector<BigInt> a;

    explicit BigMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0) {}

    BigInt& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

inline BigMatrix big_identity(int n) {
    BigMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

inline BigMatrix adjacency_bigmatrix(const Graph& g) {
    BigMatrix m(g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (g.adjacent(i, j)) m.at(i, j) = 1;
    return m;
}

inline BigMatrix multiply(const BigMatrix& x, const BigMatrix& y) {
    const int n = x.n;
    BigMatrix out(n);
    BigInt tmp;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const BigInt& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < n; ++j) {
                tmp = xik * y.at(k, j);
                out.at(i, j) += tmp;
            }
        }
    }
    return out;
}

inline BigInt trace(const BigMatrix& m) {
    BigInt t = 0;
    for (int i = 0; i < m.n; ++i) t += m.at(i, i);
    return t;
}

} // namespace specwl
