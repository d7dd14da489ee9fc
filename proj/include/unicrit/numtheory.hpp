// Small number-theoretic helpers over machine integers.
#pragma once

#include <vector>

#include "unicrit/errors.hpp"

namespace unicrit {

// Moebius function; n >= 1.
inline int mobius(long long n) {
    if (n < 1) throw ZeroOperand("mobius requires n >= 1");
    int r = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}

// All positive divisors of n in ascending order; n >= 1.
inline std::vector<long long> divisors(long long n) {
    if (n < 1) throw ZeroOperand("divisors requires n >= 1");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline std::vector<long long> proper_divisors(long long n) {
    auto d = divisors(n);
    d.pop_back();
    return d;
}

inline long long ipow(long long b, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace unicrit
