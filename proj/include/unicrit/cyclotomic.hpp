// Cyclotomic polynomials over Q, built recursively: t^n - 1 divided by the
// cyclotomic polynomials of the proper divisors of n. All d-th roots of
// unity (primitive or not) live in Q[t]/(cyclotomic(d)) as powers of t.
#pragma once

#include <map>

#include "unicrit/numtheory.hpp"
#include "unicrit/quotient.hpp"

namespace unicrit {

inline UniPoly<Rational> cyclotomic(long long n) {
    if (n < 1) throw ZeroOperand("cyclotomic index must be >= 1");
    static const std::string var = "t";
    thread_local std::map<long long, UniPoly<Rational>> cache;
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    // t^n - 1
    UniPoly<Rational> num = UniPoly<Rational>::monomial(var, n, Rational(1)) -
                            UniPoly<Rational>::constant(var, Rational(1));
    for (long long d : proper_divisors(n)) num = exact_div(num, cyclotomic(d));
    cache.emplace(n, num);
    return num;
}

// Q[t]/(cyclotomic(d)); irreducibility of cyclotomic polynomials over Q is a
// classical fact, so the assertion flag is set internally.
inline QuotientRingPtr cyclotomic_ring(long long d) {
    return QuotientRing::make(cyclotomic(d), /*irreducibility_asserted=*/true);
}

}  // namespace unicrit
