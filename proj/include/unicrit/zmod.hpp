// Dense univariate arithmetic modulo a small prime, plus modular inverses
// for arbitrary-precision moduli. Small-prime images give cheap rigorous
// certificates: a gcd that is constant mod ell (with both leading
// coefficients nonzero mod ell) is constant over Q, and a squarefree image
// certifies squarefreeness.
#pragma once

#include <cstdint>
#include <vector>

#include "unicrit/bigint.hpp"
#include "unicrit/errors.hpp"

namespace unicrit::zmod {

using u64 = std::uint64_t;

// primes used for modular images; all < 2^31 so plain 64-bit products suffice
inline constexpr u64 kPrimes[] = {10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079,
                                  10091, 10093, 10099, 10103, 10111, 10133, 10139, 10141};
inline constexpr int kPrimeCount = static_cast<int>(sizeof(kPrimes) / sizeof(kPrimes[0]));

inline u64 reduce(const BigInt& v, u64 ell) {
    BigInt q, r;
    BigInt::divmod(v, BigInt(static_cast<long long>(ell)), q, r);
    long long rr = r.to_longlong();
    return rr < 0 ? static_cast<u64>(rr + static_cast<long long>(ell)) : static_cast<u64>(rr);
}

inline u64 mulmod(u64 a, u64 b, u64 ell) { return a * b % ell; }
inline u64 addmod(u64 a, u64 b, u64 ell) { return (a + b) % ell; }
inline u64 submod(u64 a, u64 b, u64 ell) { return (a + ell - b) % ell; }

inline u64 powmod(u64 b, u64 e, u64 ell) {
    u64 r = 1 % ell;
    b %= ell;
    while (e) {
        if (e & 1) r = mulmod(r, b, ell);
        b = mulmod(b, b, ell);
        e >>= 1;
    }
    return r;
}

inline u64 invmod(u64 a, u64 ell) { return powmod(a % ell, ell - 2, ell); }

// dense polynomials mod ell, coefficient of x^i at index i, trimmed
using Poly = std::vector<u64>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long long deg(const Poly& p) { return static_cast<long long>(p.size()) - 1; }

// reduces an integer polynomial (dense, ascending); returns false if the
// leading coefficient vanishes mod ell (degree not preserved)
inline bool project(const std::vector<BigInt>& f, u64 ell, Poly& out) {
    out.clear();
    out.reserve(f.size());
    for (const BigInt& c : f) out.push_back(reduce(c, ell));
    if (!f.empty() && out.back() == 0) return false;
    trim(out);
    return true;
}

inline u64 eval(const Poly& p, u64 x, u64 ell) {
    u64 acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = (mulmod(acc, x, ell) + p[i]) % ell;
    return acc;
}

inline Poly derivative(const Poly& p, u64 ell) {
    Poly r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(mulmod(p[i], i % ell, ell));
    trim(r);
    return r;
}

inline void make_monic(Poly& p, u64 ell) {
    if (p.empty()) return;
    u64 inv = invmod(p.back(), ell);
    for (u64& c : p) c = mulmod(c, inv, ell);
}

inline Poly mod(Poly a, const Poly& b, u64 ell) {
    // b nonzero
    u64 lb_inv = invmod(b.back(), ell);
    while (a.size() >= b.size() && !a.empty()) {
        u64 f = mulmod(a.back(), lb_inv, ell);
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] = submod(a[off + i], mulmod(f, b[i], ell), ell);
        trim(a);
    }
    return a;
}

inline Poly gcd(Poly a, Poly b, u64 ell) {
    while (!b.empty()) {
        Poly r = mod(a, b, ell);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a, ell);
    return a;
}

inline bool is_squarefree(const Poly& p, u64 ell) {
    if (p.size() <= 1) return true;
    return deg(gcd(p, derivative(p, ell), ell)) == 0;
}

// all roots in F_ell by exhaustive scan (ell is small)
inline std::vector<u64> roots(const Poly& p, u64 ell) {
    std::vector<u64> out;
    for (u64 r = 0; r < ell; ++r)
        if (eval(p, r, ell) == 0) out.push_back(r);
    return out;
}

// modular inverse for arbitrary-precision moduli (extended Euclid);
// throws ZeroOperand if gcd(a, m) != 1
inline BigInt inv_mod(const BigInt& a, const BigInt& m) {
    BigInt r0 = m, r1 = a % m;
    if (r1.sign() < 0) r1 += m;
    BigInt t0(0), t1(1);
    while (!r1.is_zero()) {
        BigInt q, r2;
        BigInt::divmod(r0, r1, q, r2);
        BigInt t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_one()) throw ZeroOperand("element not invertible modulo m");
    if (t0.sign() < 0) t0 += m;
    return t0;
}

}  // namespace unicrit::zmod
