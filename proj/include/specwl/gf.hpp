#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specwl/errors.hpp"

namespace specwl {

/// Factors q as p^r with p the smallest prime divisor; nullopt if q is not a
/// prime power (or q < 2).
inline std::optional<std::pair<long, int>> prime_power(long q) {
    if (q < 2) return std::nullopt;
    long p = 0;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return std::make_pair(q, 1);  // q itself is prime
    int r = 0;
    long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, r);
}

/// Arithmetic in GF(p^r). Elements are polynomials over Z_p of degree < r,
/// reduced modulo a fixed monic irreducible polynomial found by exhaustive
/// search in lexicographic coefficient order (so every run picks the same
/// modulus). Elements are addressed by index 0..q-1; index digits in base p
/// are the coefficients, least significant digit = constant term.
class GaloisField {
public:
    using Elem = std::vector<int>;  // size r, entries in [0,p)

    GaloisField(long p, int r) : p_(p), r_(r) {
        if (p < 2 || r < 1) throw input_error("GaloisField requires p >= 2, r >= 1");
        q_ = 1;
        for (int i = 0; i < r; ++i) {
            if (q_ > 1'000'000'000 / p) throw resource_error("field order too large");
            q_ *= p;
        }
        if (r_ > 1) find_irreducible();
    }

    long p() const { return p_; }
    int r() const { return r_; }
    long q() const { return q_; }

    /// Modulus coefficients c_0..c_{r-1} of x^r + sum c_i x^i (empty for r=1).
    const Elem& modulus() const { return irreducible_; }

    Elem element(long index) const {
        if (index < 0 || index >= q_) throw input_error("field element index out of range");
        Elem e(r_, 0);
        for (int i = 0; i < r_; ++i) {
            e[i] = static_cast<int>(index % p_);
            index /= p_;
        }
        return e;
    }

    long index(const Elem& e) const {
        long idx = 0;
        for (int i = r_ - 1; i >= 0; --i) idx = idx * p_ + e[i];
        return idx;
    }

    Elem zero() const { return Elem(r_, 0); }
    Elem one() const {
        Elem e(r_, 0);
        e[0] = 1;
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem out(r_);
        for (int i = 0; i < r_; ++i) out[i] = static_cast<int>((a[i] + b[i]) % p_);
        return out;
    }

    Elem sub(const Elem& a, const Elem& b) const {
        Elem out(r_);
        for (int i = 0; i < r_; ++i) out[i] = static_cast<int>(((a[i] - b[i]) % p_ + p_) % p_);
        return out;
    }

    Elem neg(const Elem& a) const { return sub(zero(), a); }

    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<long> prod(2 * r_ - 1, 0);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + static_cast<long>(a[i]) * b[j]) % p_;
        // Reduce modulo x^r + sum irreducible_[i] x^i, i.e. x^r = -sum c_i x^i.
        for (int d = 2 * r_ - 2; d >= r_; --d) {
            long coeff = prod[d];
            if (coeff == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < r_; ++i)
                prod[d - r_ + i] = ((prod[d - r_ + i] - coeff * irreducible_[i]) % p_ + p_) % p_;
        }
        Elem out(r_);
        for (int i = 0; i < r_; ++i) out[i] = static_cast<int>(prod[i]);
        return out;
    }

    Elem pow(Elem base, long e) const {
        Elem acc = one();
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    Elem inverse(const Elem& a) const {
        if (a == zero()) throw input_error("zero has no inverse");
        return pow(a, q_ - 2);
    }

    bool is_zero(const Elem& a) const {
        for (int c : a)
            if (c != 0) return false;
        return true;
    }

    /// Index arithmetic shortcut: subtraction is coefficient-wise, so it works
    /// directly on base-p digits without building Elem vectors.
    long index_sub(long ia, long ib) const {
        long out = 0, mult = 1;
        for (int i = 0; i < r_; ++i) {
            long da = ia % p_, db = ib % p_;
            out += ((da - db + p_) % p_) * mult;
            mult *= p_;
            ia /= p_;
            ib /= p_;
        }
        return out;
    }

private:
    // Polynomials here are coefficient vectors c_0..c_d (c_d != 0 unless zero).
    using Poly = std::vector<long>;

    static int poly_deg(const Poly& f) {
        for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
            if (f[d] != 0) return d;
        return -1;
    }

    // Remainder of f modulo monic g over Z_p.
    Poly poly_mod(Poly f, const Poly& g) const {
        int dg = poly_deg(g);
        for (int d = poly_deg(f); d >= dg; d = poly_deg(f)) {
            long coeff = f[d];
            for (int i = 0; i <= dg; ++i)
                f[d - dg + i] = ((f[d - dg + i] - coeff * g[i]) % p_ + p_) % p_;
        }
        return f;
    }

    bool divides(const Poly& g, const Poly& f) const { return poly_deg(poly_mod(f, g)) < 0; }

    void find_irreducible() {
        // Monic degree-r candidates in lexicographic order of (c_0..c_{r-1}).
        long count = q_;
        for (long idx = 0; idx < count; ++idx) {
            Poly cand(r_ + 1, 0);
            long t = idx;
            for (int i = 0; i < r_; ++i) {
                cand[i] = t % p_;
                t /= p_;
            }
            cand[r_] = 1;
            if (is_irreducible(cand)) {
                irreducible_.assign(r_, 0);
                for (int i = 0; i < r_; ++i) irreducible_[i] = static_cast<int>(cand[i]);
                return;
            }
        }
        throw internal_error("no irreducible polynomial found for GF(" + std::to_string(p_) + "^" +
                             std::to_string(r_) + ")");
    }

    bool is_irreducible(const Poly& cand) const {
        // Trial division by every monic polynomial of degree 1..r/2.
        for (int d = 1; 2 * d <= r_; ++d) {
            long divisors = 1;
            for (int i = 0; i < d; ++i) divisors *= p_;
            for (long idx = 0; idx < divisors; ++idx) {
                Poly g(d + 1, 0);
                long t = idx;
                for (int i = 0; i < d; ++i) {
                    g[i] = t % p_;
                    t /= p_;
                }
                g[d] = 1;
                if (divides(g, cand)) return false;
            }
        }
        return true;
    }

    long p_;
    int r_;
    long q_;
    Elem irreducible_;  // c_0..c_{r-1}; modulus is x^r + sum c_i x^i
};

} // namespace specwl
