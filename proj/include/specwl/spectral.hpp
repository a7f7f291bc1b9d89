#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "specwl/bigmat.hpp"
#include "specwl/errors.hpp"
#include "specwl/graph.hpp"

namespace specwl {

/// Exact closed-walk counts tr(A^1)..tr(A^L).
struct TraceSequence {
    std::vector<BigInt> traces;
    bool operator==(const TraceSequence&) const = default;
};

/// Integer coefficients c_0..c_n of det(lambda*I - A), c_n = 1. Equality of
/// CharPoly values is the co-spectrality decision; no floating point anywhere.
struct CharPoly {
    std::vector<BigInt> coeffs;
    bool operator==(const CharPoly&) const = default;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Exact number of walks of length l from v to u, i.e. (A^l)_{vu}. Computed by
/// propagating a single column vector, so only O(n) big integers are live.
inline BigInt walk_count(const Graph& g, int v, int u, long l) {
    const int n = g.n();
    if (v < 0 || v >= n || u < 0 || u >= n) throw input_error("walk_count: vertex out of range");
    if (l < 0) throw input_error("walk_count: negative length");
    std::vector<BigInt> cur(n, 0), next(n);
    cur[v] = 1;
    for (long step = 0; step < l; ++step) {
        for (int j = 0; j < n; ++j) {
            next[j] = 0;
            for (int i = 0; i < n; ++i)
                if (g.adjacent(i, j)) next[j] += cur[i];
        }
        cur.swap(next);
    }
    return cur[u];
}

/// tr(A^l) for l = 1..L by iterated integer matrix products.
inline TraceSequence trace_powers(const Graph& g, int L) {
    if (L < 1) throw input_error("trace_powers: L must be >= 1");
    BigMatrix a = adjacency_bigmatrix(g);
    TraceSequence out;
    out.traces.reserve(L);
    BigMatrix power = a;
    out.traces.push_back(trace(power));
    for (int l = 2; l <= L; ++l) {
        power = multiply(power, a);
        out.traces.push_back(trace(power));
    }
    return out;
}

/// Characteristic polynomial from the trace sequence via Newton's identities:
/// e_k = (1/k) * sum_{j=1..k} (-1)^{j-1} e_{k-j} s_j, then c_{n-k} = (-1)^k e_k.
/// Every division is exact for integer matrices; a non-integral e_k means the
/// traces are wrong and raises internal_error.
inline CharPoly charpoly_from_traces(const TraceSequence& t) {
    const int n = static_cast<int>(t.traces.size());
    std::vector<BigInt> e(n + 1);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        BigInt acc = 0;
        for (int j = 1; j <= k; ++j) {
            if (j % 2 == 1)
                acc += e[k - j] * t.traces[j - 1];
            else
                acc -= e[k - j] * t.traces[j - 1];
        }
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(k)))
            throw internal_error("Newton identity produced non-integral e_" + std::to_string(k));
        mpz_divexact_ui(e[k].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(k));
    }
    CharPoly p;
    p.coeffs.assign(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
        p.coeffs[n - k] = (k % 2 == 0) ? e[k] : -e[k];
    }
    return p;
}

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence:
///   M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
/// Independent of the trace/Newton route; used as its oracle and vice versa.
inline CharPoly charpoly_direct(const Graph& g) {
    const int n = g.n();
    CharPoly p;
    p.coeffs.assign(n + 1, 0);
    p.coeffs[n] = 1;
    if (n == 0) return p;

    BigMatrix a = adjacency_bigmatrix(g);
    BigMatrix m = big_identity(n);
    for (int k = 1; k <= n; ++k) {
        BigMatrix am = multiply(a, m);
        BigInt tr = trace(am);
        tr = -tr;
        if (!mpz_divisible_ui_p(tr.get_mpz_t(), static_cast<unsigned long>(k)))
            throw internal_error("Faddeev-LeVerrier produced non-integral coefficient at k=" +
                                 std::to_string(k));
        mpz_divexact_ui(p.coeffs[n - k].get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        if (k < n) {
            for (int i = 0; i < n; ++i) am.at(i, i) += p.coeffs[n - k];
            m = std::move(am);
        }
    }
    return p;
}

/// Exact co-spectrality decision. Graphs of different orders have
/// characteristic polynomials of different degrees and are never co-spectral.
inline bool cospectral(const Graph& g, const Graph& h) {
    if (g.n() != h.n()) return false;
    return charpoly_direct(g) == charpoly_direct(h);
}

/// Horner evaluation of a CharPoly at an exact integer point.
inline BigInt evaluate(const CharPoly& p, const BigInt& x) {
    BigInt acc = 0;
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeffs[k];
    return acc;
}

/// Human-readable polynomial, e.g. "x^5 - 4*x^3".
inline std::string to_string(const CharPoly& p) {
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const BigInt& c = p.coeffs[k];
        if (c == 0 && !(k == 0 && out.empty())) continue;
        BigInt abs = c < 0 ? BigInt(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mag = abs.get_str();
        if (k == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

/// Eigenvalues with multiplicity, sorted descending. Display/report only;
/// never used in equality decisions.
struct FloatSpectrum {
    std::vector<double> eigenvalues;
};

/// Cyclic Jacobi rotations on the symmetric adjacency matrix.
inline FloatSpectrum spectrum_float(const Graph& g) {
    const int n = g.n();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) a[i][j] = 1.0;

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off <= 1e-24 * (n + 1)) {
            FloatSpectrum s;
            s.eigenvalues.resize(n);
            for (int i = 0; i < n; ++i) s.eigenvalues[i] = a[i][i];
            std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<double>());
            return s;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-18) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    throw numerical_error("Jacobi eigensolver did not converge");
}

/// Oracle for the regular-graph eigenvalue bounds: the degree d is an exact
/// root of the characteristic polynomial and every float eigenvalue satisfies
/// |theta| <= d + 1e-9. Input must be regular.
inline bool regular_eigen_bounds_check(const Graph& g) {
    auto d = is_regular(g);
    if (!d) throw input_error("regular_eigen_bounds_check: graph is not regular");
    CharPoly p = charpoly_direct(g);
    if (evaluate(p, BigInt(*d)) != 0) return false;
    FloatSpectrum s = spectrum_float(g);
    for (double theta : s.eigenvalues)
        if (std::abs(theta) > *d + 1e-9) return false;
    return true;
}

} // namespace specwl
