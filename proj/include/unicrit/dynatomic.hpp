// Iterates of f_{d,C}(z) = z^d + C, dynatomic polynomials Phi_N, generalized
// dynatomic polynomials Phi_{M,N}, their cyclotomic Psi factors, degree
// combinatorics D(N), and metadata for the curves Y_1(M,N).
//
// Phi_N is assembled from the Moebius product: the mu = +1 factors are
// multiplied out and the mu = -1 factors are divided off one at a time; every
// division is exact by construction and any nonzero remainder aborts.
// For M >= 2, Phi_{M,N} is built through the composition recurrence
// Phi_{M,N} = Phi_{M-1,N}(f_{d,C}(X), C); the defining quotient is available
// separately so tests can cross-validate the two routes.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "unicrit/bipoly.hpp"
#include "unicrit/cyclotomic.hpp"
#include "unicrit/numtheory.hpp"
#include "unicrit/quotient.hpp"

namespace unicrit {

struct MapSpec {
    long long d;
    explicit MapSpec(long long degree) : d(degree) {
        if (d < 2) throw MathError("map degree d must be >= 2");
    }
};

struct PortraitLabel {
    long long M;  // preperiod
    long long N;  // eventual period
    PortraitLabel(long long m, long long n) : M(m), N(n) {
        if (M < 0 || N < 1) throw MathError("portrait requires M >= 0 and N >= 1");
    }
    friend bool operator==(const PortraitLabel&, const PortraitLabel&) = default;
};

struct CurveInfo {
    PortraitLabel label;
    long long d;
    long long degX;
    long long degC;
    long long component_count;
    std::string singular_note;
};

// Session-local cache of iterates and dynatomic polynomials; Phi_{M,N}
// reuses f^1..f^{M+N}, so recomputation dominates without it.
class DynCache {
public:
    std::map<std::pair<long long, long long>, BiPolyQ> iterates;
    std::map<std::pair<long long, long long>, BiPolyQ> dynatomic;
    std::map<std::tuple<long long, long long, long long>, BiPolyQ> generalized;
};

inline DynCache& default_cache() {
    thread_local DynCache cache;
    return cache;
}

// f_{d,C}^n(X); n = 0 gives X
inline const BiPolyQ& iterate_poly(const MapSpec& spec, long long n, DynCache& cache = default_cache()) {
    if (n < 0) throw MathError("iterate index must be >= 0");
    auto key = std::make_pair(spec.d, n);
    if (auto it = cache.iterates.find(key); it != cache.iterates.end()) return it->second;
    BiPolyQ value;
    if (n == 0) {
        value = BiPolyQ::monomial(1, 0, Rational(1));
    } else {
        value = iterate_poly(spec, n - 1, cache).substitute_zd_plus_c(static_cast<int>(spec.d));
    }
    return cache.iterates.emplace(key, std::move(value)).first->second;
}

// D(N) = sum over n | N of mu(N/n) d^n, the degree of Phi_N in X
inline long long degree_D(const MapSpec& spec, long long N) {
    if (N < 1) throw MathError("degree_D requires N >= 1");
    BigInt sum;
    for (long long n : divisors(N)) {
        int mu = mobius(N / n);
        if (mu == 0) continue;
        BigInt term = pow(BigInt(spec.d), static_cast<unsigned long long>(n));
        sum = mu > 0 ? sum + term : sum - term;
    }
    if (sum.bit_length() > 62) throw MathError("degree overflows a machine integer");
    return sum.to_longlong();
}

inline const BiPolyQ& dynatomic_poly(const MapSpec& spec, long long N,
                                     DynCache& cache = default_cache()) {
    if (N < 1) throw MathError("dynatomic index must be >= 1");
    auto key = std::make_pair(spec.d, N);
    if (auto it = cache.dynatomic.find(key); it != cache.dynatomic.end()) return it->second;
    const BiPolyQ X = BiPolyQ::monomial(1, 0, Rational(1));
    std::vector<BiPolyQ> minus;
    BiPolyQ acc = BiPolyQ::constant(Rational(1));
    for (long long n : divisors(N)) {
        int mu = mobius(N / n);
        if (mu == 0) continue;
        BiPolyQ factor = iterate_poly(spec, n, cache) - X;
        if (mu > 0)
            acc = acc * factor;
        else
            minus.push_back(std::move(factor));
    }
    // divide by the smaller factors first; each division is exact
    std::sort(minus.begin(), minus.end(),
              [](const BiPolyQ& a, const BiPolyQ& b) { return a.term_count() < b.term_count(); });
    for (const BiPolyQ& m : minus) acc = exact_div(acc, m);
    return cache.dynatomic.emplace(key, std::move(acc)).first->second;
}

// Phi_{M,N}; the Phi_{0,N} convention is Phi_N itself
inline const BiPolyQ& gen_dynatomic_poly(const MapSpec& spec, const PortraitLabel& label,
                                         DynCache& cache = default_cache()) {
    if (label.M == 0) return dynatomic_poly(spec, label.N, cache);
    auto key = std::make_tuple(spec.d, label.M, label.N);
    if (auto it = cache.generalized.find(key); it != cache.generalized.end()) return it->second;
    BiPolyQ value;
    if (label.M == 1) {
        const BiPolyQ& phi = dynatomic_poly(spec, label.N, cache);
        value = exact_div(phi.substitute_zd_plus_c(static_cast<int>(spec.d)), phi);
    } else {
        value = gen_dynatomic_poly(spec, PortraitLabel(label.M - 1, label.N), cache)
                    .substitute_zd_plus_c(static_cast<int>(spec.d));
    }
    return cache.generalized.emplace(key, std::move(value)).first->second;
}

// the defining quotient Phi_N(f^M(X), C) / Phi_N(f^{M-1}(X), C), for
// cross-validation of the composition recurrence
inline BiPolyQ gen_dynatomic_direct(const MapSpec& spec, const PortraitLabel& label,
                                    DynCache& cache = default_cache()) {
    if (label.M == 0) return dynatomic_poly(spec, label.N, cache);
    BiPolyQ num = dynatomic_poly(spec, label.N, cache);
    for (long long i = 0; i < label.M; ++i) num = num.substitute_zd_plus_c(static_cast<int>(spec.d));
    BiPolyQ den = dynatomic_poly(spec, label.N, cache);
    for (long long i = 0; i < label.M - 1; ++i) den = den.substitute_zd_plus_c(static_cast<int>(spec.d));
    return exact_div(num, den);
}

inline BiPoly<QuotientElement> promote(const BiPolyQ& p, const QuotientRingPtr& ring) {
    std::vector<BiPoly<QuotientElement>::Term> ts;
    ts.reserve(p.term_count());
    for (const auto& t : p.terms()) ts.push_back({t.ex, t.ec, ring->from_rational(t.coeff)});
    return BiPoly<QuotientElement>::from_terms(std::move(ts));
}

// inverse of promote when every coefficient is rational
inline std::optional<BiPolyQ> demote(const BiPoly<QuotientElement>& p) {
    std::vector<BiPolyQ::Term> ts;
    ts.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        const auto& rep = t.coeff.rep();
        if (rep.degree() > 0) return std::nullopt;
        ts.push_back({t.ex, t.ec, rep.is_zero() ? Rational() : rep.leading_coeff()});
    }
    return BiPolyQ::from_terms(std::move(ts));
}

// Psi_{M,N}^zeta(X, C) = Phi_N(zeta f^{M-1}(X), C) over the cyclotomic ring
// containing zeta
inline BiPoly<QuotientElement> psi_factor(const MapSpec& spec, const PortraitLabel& label,
                                          const QuotientElement& zeta,
                                          DynCache& cache = default_cache()) {
    if (label.M < 1) throw MathError("psi factor requires M >= 1");
    if (!zeta.ring()) throw IncompatibleRings("zeta must carry a quotient ring");
    if (!(generic_pow(zeta, static_cast<unsigned long long>(spec.d)).is_one()))
        throw NotRootOfUnity("zeta^d != 1 in its ring");
    const QuotientRingPtr& ring = zeta.ring();
    BiPoly<QuotientElement> inner =
        promote(iterate_poly(spec, label.M - 1, cache), ring).scaled(zeta);
    return promote(dynatomic_poly(spec, label.N, cache), ring).substitute_x(inner);
}

inline CurveInfo curve_info(const MapSpec& spec, const PortraitLabel& label) {
    const BigInt D(degree_D(spec, label.N));
    BigInt degX, degC;
    if (label.M == 0) {
        degX = D;
        BigInt q, r;
        BigInt::divmod(D, BigInt(spec.d), q, r);
        if (!r.is_zero()) throw MathError("D(N) is not divisible by d");
        degC = q;
    } else {
        BigInt lead = BigInt(spec.d - 1) *
                      pow(BigInt(spec.d), static_cast<unsigned long long>(label.M - 1)) * D;
        degX = lead;
        BigInt q, r;
        BigInt::divmod(lead, BigInt(spec.d), q, r);
        if (!r.is_zero()) throw MathError("(d-1) d^(M-1) D(N) is not divisible by d");
        degC = q;
    }
    if (degX.bit_length() > 62 || degC.bit_length() > 62)
        throw MathError("degree overflows a machine integer");
    CurveInfo info{label,
                   spec.d,
                   degX.to_longlong(),
                   degC.to_longlong(),
                   label.M == 0 ? 1 : spec.d - 1,
                   label.M == 0 ? "nonsingular" : "points with f_{d,c}^{M-1}(x) = 0"};
    return info;
}

}  // namespace unicrit
