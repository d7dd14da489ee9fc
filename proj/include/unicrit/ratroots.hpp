// Rational roots of polynomials over Q, exactly and with multiplicity.
//
// Roots are located on the squarefree part. Small instances use
// rational-root-theorem candidate testing (divisors of the trailing and
// leading coefficients, with the classic h(1)/h(-1) filters). Once those
// coefficients are too large to factor by trial division, candidates come
// from roots modulo a small prime, Newton-lifted until rational
// reconstruction is guaranteed to recover any true root; every candidate is
// verified by exact evaluation before being reported.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "unicrit/unipoly.hpp"
#include "unicrit/zmod.hpp"

namespace unicrit {
namespace detail {

inline constexpr long long kTrialFactorBound = 1000000;         // primes tried
inline const BigInt kSmallCaseLimit = BigInt(1000000000000LL);  // 10^12
inline constexpr std::size_t kMaxDivisorCount = 20000;

// complete factorization by trial division; requires |n| < kTrialFactorBound^2
inline std::vector<std::pair<BigInt, int>> trial_factor(BigInt n) {
    std::vector<std::pair<BigInt, int>> out;
    n = n.abs();
    for (long long p = 2; p <= kTrialFactorBound; p = (p == 2 ? 3 : p + 2)) {
        BigInt bp(p);
        if (bp * bp > n) break;
        int e = 0;
        while ((n % bp).is_zero()) {
            n = n / bp;
            ++e;
        }
        if (e) out.emplace_back(bp, e);
    }
    if (!n.is_one()) out.emplace_back(n, 1);
    return out;
}

inline std::optional<std::vector<BigInt>> all_divisors(const BigInt& n) {
    auto fac = trial_factor(n);
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        if (base * static_cast<std::size_t>(e + 1) > kMaxDivisorCount) return std::nullopt;
        BigInt pe(1);
        for (int k = 1; k <= e; ++k) {
            pe *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
        }
    }
    return divs;
}

// exact evaluation of the integer form at p/q, scaled by q^deg
inline BigInt eval_scaled(const std::vector<BigInt>& h, const BigInt& p, const BigInt& q) {
    BigInt acc;
    for (std::size_t i = h.size(); i-- > 0;) acc = acc * p + h[i] * pow(q, h.size() - 1 - i);
    return acc;
}

inline BigInt eval_plain(const std::vector<BigInt>& h, const BigInt& x) {
    BigInt acc;
    for (std::size_t i = h.size(); i-- > 0;) acc = acc * x + h[i];
    return acc;
}

inline BigInt eval_mod(const std::vector<BigInt>& h, const BigInt& x, const BigInt& m) {
    BigInt acc;
    for (std::size_t i = h.size(); i-- > 0;) acc = (acc * x + h[i]) % m;
    if (acc.sign() < 0) acc += m;
    return acc;
}

// distinct rational roots by divisor enumeration (h primitive, squarefree,
// deg >= 1, h[0] != 0)
inline std::optional<std::vector<Rational>> candidate_roots(const std::vector<BigInt>& h) {
    const BigInt &a0 = h.front(), &an = h.back();
    if (a0.abs() >= kSmallCaseLimit || an.abs() >= kSmallCaseLimit) return std::nullopt;
    auto dn = all_divisors(a0);
    auto dd = all_divisors(an);
    if (!dn || !dd) return std::nullopt;
    BigInt h1, hm1;
    for (std::size_t i = h.size(); i-- > 0;) {
        h1 += h[i];
        hm1 = (i % 2 == 0) ? hm1 + h[i] : hm1 - h[i];
    }
    std::vector<Rational> roots;
    for (const BigInt& q : *dd) {
        for (const BigInt& p : *dn) {
            if (!gcd(p, q).is_one()) continue;
            for (int s : {1, -1}) {
                BigInt sp = s > 0 ? p : -p;
                // (p - q) | h(1) and (p + q) | h(-1) for a root p/q
                BigInt d1 = sp - q;
                if (!h1.is_zero() && !d1.is_zero() && !(h1 % d1).is_zero()) continue;
                BigInt d2 = sp + q;
                if (!hm1.is_zero() && !d2.is_zero() && !(hm1 % d2).is_zero()) continue;
                if (eval_scaled(h, sp, q).is_zero()) roots.emplace_back(sp, q);
            }
        }
    }
    return roots;
}

struct RatReconBounds {
    BigInt num_bound, den_bound;
};

// finds p/q with p == q*r (mod m), |p| <= bounds.num_bound, 0 < q <= den_bound
inline std::optional<Rational> rational_reconstruct(const BigInt& r, const BigInt& m,
                                                    const RatReconBounds& bounds) {
    BigInt r0 = m, r1 = r % m;
    if (r1.sign() < 0) r1 += m;
    BigInt t0(0), t1(1);
    while (!r1.is_zero() && r1 > bounds.num_bound) {
        BigInt q, r2;
        BigInt::divmod(r0, r1, q, r2);
        BigInt t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1.is_zero()) return std::nullopt;
    if (t1.abs() > bounds.den_bound) return std::nullopt;
    return Rational(std::move(r1), std::move(t1));
}

// distinct rational roots via a modular image and Newton lifting
// (h primitive, squarefree, deg >= 2, h[0] != 0)
inline std::vector<Rational> modular_roots(const std::vector<BigInt>& h) {
    std::vector<BigInt> dh;
    for (std::size_t i = 1; i < h.size(); ++i) dh.push_back(h[i] * BigInt(static_cast<long long>(i)));
    for (int pi = 0; pi < zmod::kPrimeCount; ++pi) {
        const zmod::u64 ell = zmod::kPrimes[pi];
        zmod::Poly ph;
        if (!zmod::project(h, ell, ph)) continue;
        if (!zmod::is_squarefree(ph, ell)) continue;
        std::vector<zmod::u64> mod_roots = zmod::roots(ph, ell);
        std::vector<Rational> out;
        if (mod_roots.empty()) return out;  // no roots mod ell => none over Q
        RatReconBounds bounds{h.front().abs(), h.back().abs()};
        BigInt target = BigInt(2) * bounds.num_bound * bounds.den_bound + BigInt(1);
        for (zmod::u64 r0 : mod_roots) {
            BigInt m(static_cast<long long>(ell));
            BigInt r(static_cast<long long>(r0));
            while (m < target) {
                BigInt m2 = m * m;
                BigInt e = eval_mod(h, r, m2);
                BigInt de = eval_mod(dh, r, m2);
                BigInt u = zmod::inv_mod(de, m2);
                r = (r - e * u) % m2;
                if (r.sign() < 0) r += m2;
                m = std::move(m2);
            }
            auto cand = rational_reconstruct(r, m, bounds);
            if (!cand) continue;
            if (eval_scaled(h, cand->numerator(), cand->denominator()).is_zero())
                out.push_back(*cand);
        }
        return out;
    }
    throw MathError("no usable prime for modular root finding");
}

}  // namespace detail

// All rational roots with multiplicity, ordered by (denominator, numerator).
inline std::vector<Rational> rational_roots(const UniPoly<Rational>& p) {
    if (p.is_zero()) throw ZeroOperand("rational roots of the zero polynomial");
    if (p.degree() == 0) return {};
    auto form = detail::to_primitive_integer(p);
    std::vector<BigInt> g = std::move(form.coeffs);

    std::vector<Rational> distinct;
    std::size_t zero_mult = 0;
    while (g.front().is_zero()) {
        g.erase(g.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) distinct.emplace_back(0);

    if (detail::ideg(g) >= 1) {
        // roots are located on the squarefree part
        UniPoly<Rational> reduced = detail::from_integer(p.var(), g);
        UniPoly<Rational> sf = squarefree_part(reduced);
        auto sform = detail::to_primitive_integer(sf);
        const std::vector<BigInt>& h = sform.coeffs;
        if (detail::ideg(h) == 1) {
            distinct.push_back(Rational(-h[0], h[1]));
        } else {
            auto small = detail::candidate_roots(h);
            std::vector<Rational> found = small ? *small : detail::modular_roots(h);
            distinct.insert(distinct.end(), found.begin(), found.end());
        }
    }

    // multiplicities via repeated exact division by (var - root)
    std::vector<Rational> out;
    for (const Rational& r : distinct) {
        UniPoly<Rational> lin = UniPoly<Rational>::monomial(p.var(), 1, Rational(1)) -
                                UniPoly<Rational>::constant(p.var(), r);
        UniPoly<Rational> cur = p;
        while (true) {
            auto [q, rem] = divrem(cur, lin);
            if (!rem.is_zero()) break;
            out.push_back(r);
            cur = std::move(q);
            if (cur.degree() < 1) break;
        }
    }
    std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) {
        if (a.denominator() != b.denominator()) return a.denominator() < b.denominator();
        return a.numerator() < b.numerator();
    });
    return out;
}

}  // namespace unicrit
