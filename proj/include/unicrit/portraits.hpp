// Exact orbit portraits and the portrait-realizability decision.
//
// realizes(x, (M,N), d) specializes Phi_{M,N} at X = x to get P(C), builds
// the degenerate locus S(C) (preperiod drop through f^{M-1}(x), period drop
// through Phi_n at the proper divisors n of N), strips every factor P shares
// with S, and decides realizability from the degree of what is left. The
// coprimality gcd(P*, S) = 1 together with deg P* >= 1 is a complete
// existence proof over an algebraically closed field: roots of a nonconstant
// polynomial always exist there, and a root of P* avoids every degeneration.
#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "unicrit/dynatomic.hpp"
#include "unicrit/ratroots.hpp"
#include "unicrit/resultant.hpp"

namespace unicrit {

template <class K>
struct OrbitReport {
    std::vector<K> orbit;  // entries 0 .. m+n-1 once the portrait is known
    std::optional<PortraitLabel> portrait;
    long long bound_used = 0;
};

template <class K>
struct RealizabilityResult {
    bool realizable = false;
    UniPoly<K> P;      // Phi_{M,N}(x, C)
    UniPoly<K> S;      // degenerate locus (may be the zero polynomial)
    UniPoly<K> Pstar;  // P with all S-shared factors removed
    std::vector<std::pair<Rational, OrbitReport<K>>> witnesses;
    bool gcd_Pstar_S_is_one = false;
    long long deg_Pstar = 0;
};

namespace detail {

// Rigorous non-return certificates, so exploratory orbits stop before their
// heights explode. Archimedean: once |z| > 1 + |c| the absolute values grow
// strictly. Non-archimedean: a preperiodic orbit has den(z)^d | den(c) at
// every step (the l-adic valuations are pinned to v(c)/d), so a denominator
// violating that escapes l-adically and can never repeat.
inline bool escaped(const Rational& z, const Rational& c, long long d) {
    if (z.abs() > Rational(1) + c.abs()) return true;
    const BigInt& q = z.denominator();
    if (q.is_one()) return false;
    return !(c.denominator() % pow(q, static_cast<unsigned long long>(d))).is_zero();
}
inline bool escaped(const QuotientElement&, const QuotientElement&, long long) { return false; }

template <class K>
UniPoly<K> promote_poly(const UniPoly<Rational>& h, const K& exemplar) {
    if constexpr (std::is_same_v<K, Rational>) {
        return h;
    } else {
        const QuotientRingPtr& ring = exemplar.ring();
        if (!ring) throw IncompatibleRings("point value carries no ring");
        std::vector<typename UniPoly<K>::Term> ts;
        for (const auto& t : h.terms()) ts.push_back({t.exp, ring->from_rational(t.coeff)});
        return UniPoly<K>::from_terms(h.var(), std::move(ts));
    }
}

template <class K>
UniPoly<K> subst_phi_at(const BiPolyQ& phi, const UniPoly<K>& u, const K& exemplar) {
    if constexpr (std::is_same_v<K, Rational>) {
        return phi.substitute_x(u);
    } else {
        return promote(phi, exemplar.ring()).substitute_x(u);
    }
}

}  // namespace detail

// Iterates f_{d,c} from x with exact equality detection. Returns the minimal
// (m, n) with x_{m+n} = x_m, or no portrait if none appears within `bound`
// applications of f (rational orbits that provably escape stop early).
template <class K>
OrbitReport<K> orbit_portrait(const K& x, const K& c, const MapSpec& spec, long long bound = 64) {
    if (bound < 1) throw MathError("orbit bound must be >= 1");
    OrbitReport<K> report;
    report.bound_used = bound;
    std::vector<K> seq{x};
    for (long long step = 1; step <= bound; ++step) {
        K next = generic_pow(seq.back(), static_cast<unsigned long long>(spec.d)) + c;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] == next) {
                report.portrait = PortraitLabel(static_cast<long long>(i),
                                                static_cast<long long>(seq.size() - i));
                report.orbit = std::move(seq);
                return report;
            }
        }
        if (detail::escaped(next, c, spec.d)) break;
        seq.push_back(std::move(next));
    }
    report.orbit = std::move(seq);
    return report;
}

// (f_{d,c}^N)'(x) by the chain rule: prod over the orbit of d * f^k(x)^(d-1)
template <class K>
K multiplier(const K& x, const K& c, const MapSpec& spec, long long N) {
    if (N < 1) throw MathError("multiplier requires N >= 1");
    K acc = one_like(x);
    K z = x;
    for (long long k = 0; k < N; ++k) {
        acc = acc * generic_pow(z, static_cast<unsigned long long>(spec.d - 1));
        acc = acc.times_int(spec.d);
        z = generic_pow(z, static_cast<unsigned long long>(spec.d)) + c;
    }
    return acc;
}

// P(C) = Phi_{M,N}(x, C)
template <class K>
UniPoly<K> specialize(const PortraitLabel& label, const MapSpec& spec, const K& x,
                      DynCache& cache = default_cache()) {
    return gen_dynatomic_poly(spec, label, cache).substitute_x_value(x);
}

// The factors of the degenerate locus, in the order they appear in S:
// f^{M-1}(x) when M >= 1, then Phi_n(f^M(x), C) for the proper divisors n|N.
template <class K>
std::vector<UniPoly<K>> degenerate_factors(const PortraitLabel& label, const MapSpec& spec,
                                           const K& x, DynCache& cache = default_cache()) {
    std::vector<UniPoly<K>> factors;
    if (label.M >= 1)
        factors.push_back(iterate_poly(spec, label.M - 1, cache).substitute_x_value(x));
    UniPoly<K> u = iterate_poly(spec, label.M, cache).substitute_x_value(x);
    for (long long n : proper_divisors(label.N))
        factors.push_back(detail::subst_phi_at(dynatomic_poly(spec, n, cache), u, x));
    return factors;
}

// S(C); the zero polynomial exactly when (x, M) = (0, 1)
template <class K>
UniPoly<K> degenerate_locus(const PortraitLabel& label, const MapSpec& spec, const K& x,
                            DynCache& cache = default_cache()) {
    UniPoly<K> s = UniPoly<K>::constant("C", one_like(x));
    for (const auto& f : degenerate_factors(label, spec, x, cache)) s = s * f;
    return s;
}

namespace detail {

// distinct rational roots of P* for quotient-ring coefficients: rational
// candidates come from the norm Res_t(m(t), P*) in Q[C] and are verified by
// exact evaluation
inline std::vector<Rational> rational_roots_distinct(const UniPoly<QuotientElement>& p) {
    const QuotientRingPtr& ring = p.terms().front().coeff.ring();
    const UniPoly<Rational>& m = ring->modulus();
    const long long mdeg = m.degree();
    // view p as an element of Q[C][t]
    std::vector<UniPoly<Rational>> pt(static_cast<std::size_t>(mdeg), UniPoly<Rational>::zero("C"));
    for (const auto& term : p.terms())
        for (const auto& rt : term.coeff.rep().terms())
            pt[static_cast<std::size_t>(rt.exp)] =
                pt[static_cast<std::size_t>(rt.exp)] +
                UniPoly<Rational>::monomial("C", term.exp, rt.coeff);
    std::vector<UniPoly<Rational>> mt;
    for (long long e = 0; e <= mdeg; ++e) {
        const Rational* c = m.coeff(e);
        mt.push_back(c ? UniPoly<Rational>::constant("C", *c) : UniPoly<Rational>::zero("C"));
    }
    UniPoly<Rational> norm =
        resultant_dense(mt, pt, UniPoly<Rational>::constant("C", Rational(1)));
    if (norm.is_zero()) throw MathError("vanishing norm: the quotient modulus is not irreducible");
    std::vector<Rational> out;
    for (const Rational& cand : rational_roots(norm)) {
        if (!out.empty() && out.back() == cand) continue;
        if (p.eval(ring->from_rational(cand)).is_zero()) out.push_back(cand);
    }
    return out;
}

inline std::vector<Rational> rational_roots_distinct(const UniPoly<Rational>& p) {
    std::vector<Rational> out;
    for (const Rational& r : rational_roots(p))
        if (out.empty() || !(out.back() == r)) out.push_back(r);
    return out;
}

template <class K>
K embed_rational(const Rational& c, const K& exemplar) {
    if constexpr (std::is_same_v<K, Rational>) {
        return c;
    } else {
        return exemplar.ring()->from_rational(c);
    }
}

}  // namespace detail

// Decides whether x realizes portrait (M, N) in degree d, with certificate.
template <class K>
RealizabilityResult<K> realizes(const K& x, const PortraitLabel& label, const MapSpec& spec,
                                DynCache& cache = default_cache()) {
    RealizabilityResult<K> res;
    res.P = specialize(label, spec, x, cache);
    std::vector<UniPoly<K>> factors = degenerate_factors(label, spec, x, cache);
    res.S = UniPoly<K>::constant("C", one_like(x));
    for (const auto& f : factors) res.S = res.S * f;

    try {
        if (res.S.is_zero()) {
            // every root of P collapses the preperiod; nothing can remain
            res.Pstar = UniPoly<K>::constant("C", one_like(x));
            res.gcd_Pstar_S_is_one = true;
        } else {
            UniPoly<K> p = res.P;
            for (const auto& f : factors) {
                if (f.degree() < 1) continue;
                while (true) {
                    UniPoly<K> g = gcd(p, f);
                    if (g.degree() < 1) break;
                    p = exact_div(p, g);
                }
            }
            res.Pstar = std::move(p);
            res.gcd_Pstar_S_is_one = gcd(res.Pstar, res.S).degree() == 0;
            if (!res.gcd_Pstar_S_is_one)
                throw CertificateFailure("P* shares a factor with the degenerate locus");
            if (!divrem(res.P, res.Pstar).second.is_zero())
                throw CertificateFailure("P* does not divide P");
        }
    } catch (const NotDivisible& e) {
        throw CertificateFailure(std::string("internal division failure: ") + e.what());
    }

    res.deg_Pstar = std::max<long long>(res.Pstar.degree(), 0);
    res.realizable = res.Pstar.degree() >= 1;

    if (res.realizable) {
        for (const Rational& c : detail::rational_roots_distinct(res.Pstar)) {
            K cv = detail::embed_rational(c, x);
            OrbitReport<K> orbit = orbit_portrait(x, cv, spec, label.M + label.N + 1);
            if (!orbit.portrait.has_value() || !(*orbit.portrait == label))
                throw CertificateFailure("witness c = " + c.to_string() +
                                         " does not reproduce the claimed portrait");
            res.witnesses.emplace_back(c, std::move(orbit));
        }
    }
    return res;
}

// Certifies that every root of h realizes the exact portrait (M, N) at x,
// without factoring h: h must divide Phi_{M,N}(x, C) and be coprime to every
// degenerate factor.
template <class K>
bool certificate_check(const K& x, const PortraitLabel& label, const MapSpec& spec,
                       const UniPoly<Rational>& h, DynCache& cache = default_cache()) {
    if (h.degree() < 1 || !h.is_monic())
        throw MathError("certificate polynomial must be monic of degree >= 1");
    if (gcd(h, h.derivative()).degree() != 0)
        throw NotSquarefree("certificate polynomial has a repeated factor");
    UniPoly<K> hk = detail::promote_poly(h, x);
    UniPoly<K> p = specialize(label, spec, x, cache);
    if (!divrem(p, hk).second.is_zero()) return false;
    for (const auto& f : degenerate_factors(label, spec, x, cache)) {
        if (f.is_zero()) return false;
        if (f.degree() < 1) continue;
        if (gcd(hk, f).degree() != 0) return false;
    }
    return true;
}

}  // namespace unicrit
