// Named identity suites over fixed parameter grids. Each suite recomputes a
// structural identity of the dynatomic machinery from scratch and reports
// the first violation, if any. The CLI exposes them individually; the
// acceptance tests run them all.
#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "unicrit/dynatomic.hpp"

namespace unicrit {

struct SuiteOutcome {
    std::string name;
    bool passed = true;
    std::string detail;
};

namespace detail {

inline SuiteOutcome suite_factorization(DynCache& cache) {
    SuiteOutcome out{"factorization", true, ""};
    int checked = 0;
    for (long long d : {2, 3}) {
        MapSpec spec(d);
        for (long long N = 1; N <= 6; ++N) {
            BiPolyQ prod = BiPolyQ::constant(Rational(1));
            for (long long n : divisors(N)) prod = prod * dynatomic_poly(spec, n, cache);
            BiPolyQ target = iterate_poly(spec, N, cache) - BiPolyQ::monomial(1, 0, Rational(1));
            if (!(prod == target)) {
                std::ostringstream os;
                os << "d=" << d << " N=" << N << ": product of Phi_n differs from f^N - X";
                return {"factorization", false, os.str()};
            }
            ++checked;
        }
    }
    out.detail = "f^N - X = prod of Phi_n for " + std::to_string(checked) + " (d, N) pairs";
    return out;
}

inline SuiteOutcome suite_degrees(DynCache& cache) {
    int checked = 0;
    if (degree_D(MapSpec(2), 2) != 2 || degree_D(MapSpec(2), 3) != 6)
        return {"degrees", false, "pinned values D(2)=2, D(3)=6 at d=2 do not hold"};
    for (long long d = 2; d <= 4; ++d) {
        MapSpec spec(d);
        for (long long N = 1; N <= 5; ++N) {
            const BiPolyQ& phi = dynatomic_poly(spec, N, cache);
            long long D = degree_D(spec, N);
            if (phi.degree_x() != D || phi.degree_c() != D / d || !phi.is_monic_x() ||
                !phi.is_monic_c()) {
                std::ostringstream os;
                os << "d=" << d << " N=" << N << ": Phi_N degree/monicity mismatch";
                return {"degrees", false, os.str()};
            }
            ++checked;
        }
    }
    for (long long d = 2; d <= 4; ++d) {
        MapSpec spec(d);
        for (long long M = 1; M <= 3; ++M)
            for (long long N = 1; N <= 4; ++N) {
                const BiPolyQ& phi = gen_dynatomic_poly(spec, PortraitLabel(M, N), cache);
                long long D = degree_D(spec, N);
                long long expect_x = (d - 1) * ipow(d, M - 1) * D;
                if ((d - 1) * ipow(d, M - 1) * D % d != 0)
                    return {"degrees", false, "degree in C is not an integer"};
                long long expect_c = expect_x / d;
                if (phi.degree_x() != expect_x || phi.degree_c() != expect_c ||
                    !phi.is_monic_x() || !phi.is_monic_c()) {
                    std::ostringstream os;
                    os << "d=" << d << " M=" << M << " N=" << N
                       << ": Phi_{M,N} degree/monicity mismatch";
                    return {"degrees", false, os.str()};
                }
                ++checked;
            }
    }
    return {"degrees", true,
            "degree and monicity identities hold for " + std::to_string(checked) + " cases"};
}

inline SuiteOutcome suite_degree_growth(DynCache&) {
    int checked = 0;
    for (long long d = 2; d <= 5; ++d) {
        MapSpec spec(d);
        for (long long N = 1; N <= 12; ++N) {
            long long lhs = degree_D(spec, N);
            long long rhs = 0;
            for (long long n : proper_divisors(N)) rhs += degree_D(spec, n);
            bool equality_case = (N == 2 && d == 2);
            if ((equality_case && lhs != rhs) || (!equality_case && lhs <= rhs)) {
                std::ostringstream os;
                os << "d=" << d << " N=" << N << ": D(N)=" << lhs << " vs sum " << rhs;
                return {"degree-growth", false, os.str()};
            }
            ++checked;
        }
    }
    return {"degree-growth", true,
            "D(N) strictly dominates except at (N,d)=(2,2); " + std::to_string(checked) +
                " cases"};
}

inline SuiteOutcome suite_psi_product(DynCache& cache) {
    int checked = 0;
    for (long long d : {2, 3}) {
        MapSpec spec(d);
        auto ring = cyclotomic_ring(d);
        for (long long M = 1; M <= 2; ++M)
            for (long long N = 1; N <= 3; ++N) {
                BiPoly<QuotientElement> prod = BiPoly<QuotientElement>::constant(ring->one());
                for (long long k = 1; k <= d - 1; ++k) {
                    auto zeta = generic_pow(ring->generator(), static_cast<unsigned long long>(k));
                    prod = prod * psi_factor(spec, PortraitLabel(M, N), zeta, cache);
                }
                auto rationalized = demote(prod);
                if (!rationalized.has_value()) {
                    std::ostringstream os;
                    os << "d=" << d << " M=" << M << " N=" << N
                       << ": psi product has irrational coefficients";
                    return {"psi-product", false, os.str()};
                }
                if (!(*rationalized == gen_dynatomic_poly(spec, PortraitLabel(M, N), cache))) {
                    std::ostringstream os;
                    os << "d=" << d << " M=" << M << " N=" << N
                       << ": psi product differs from Phi_{M,N}";
                    return {"psi-product", false, os.str()};
                }
                ++checked;
            }
    }
    return {"psi-product", true,
            "cyclotomic psi products rebuild Phi_{M,N} in " + std::to_string(checked) + " cases"};
}

inline SuiteOutcome suite_derivative(DynCache& cache) {
    int checked = 0;
    for (long long d : {2, 3}) {
        MapSpec spec(d);
        for (long long k = 1; k <= 6; ++k) {
            BiPolyQ lhs = iterate_poly(spec, k, cache).derivative('C');
            BiPolyQ rhs = BiPolyQ::constant(Rational(1));
            for (long long j = 1; j <= k - 1; ++j) {
                BiPolyQ prod = BiPolyQ::constant(Rational(ipow(d, j)));
                for (long long i = 1; i <= j; ++i)
                    prod = prod * generic_pow(iterate_poly(spec, k - i, cache),
                                              static_cast<unsigned long long>(d - 1));
                rhs = rhs + prod;
            }
            if (!(lhs == rhs)) {
                std::ostringstream os;
                os << "d=" << d << " k=" << k << ": dC-derivative formula mismatch";
                return {"derivative", false, os.str()};
            }
            ++checked;
        }
    }
    return {"derivative", true,
            "C-derivative of f^k matches the nested product form in " + std::to_string(checked) +
                " cases"};
}

inline SuiteOutcome suite_recursion(DynCache& cache) {
    int checked = 0;
    for (long long d = 2; d <= 3; ++d) {
        MapSpec spec(d);
        for (long long M = 1; M <= 3; ++M)
            for (long long N = 1; N <= 3; ++N) {
                PortraitLabel label(M, N);
                if (!(gen_dynatomic_poly(spec, label, cache) ==
                      gen_dynatomic_direct(spec, label, cache))) {
                    std::ostringstream os;
                    os << "d=" << d << " M=" << M << " N=" << N
                       << ": composition route differs from the defining quotient";
                    return {"recursion", false, os.str()};
                }
                ++checked;
            }
    }
    return {"recursion", true,
            "composition route equals the defining quotient in " + std::to_string(checked) +
                " cases"};
}

}  // namespace detail

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"factorization", "degrees",    "degree-growth",
                                                "psi-product",   "derivative", "recursion"};
    return names;
}

inline SuiteOutcome run_verify_suite(const std::string& name, DynCache& cache = default_cache()) {
    if (name == "factorization") return detail::suite_factorization(cache);
    if (name == "degrees") return detail::suite_degrees(cache);
    if (name == "degree-growth") return detail::suite_degree_growth(cache);
    if (name == "psi-product") return detail::suite_psi_product(cache);
    if (name == "derivative") return detail::suite_derivative(cache);
    if (name == "recursion") return detail::suite_recursion(cache);
    throw MathError("unknown verify suite: " + name);
}

inline std::vector<SuiteOutcome> run_all_verify_suites(DynCache& cache = default_cache()) {
    std::vector<SuiteOutcome> out;
    for (const auto& n : verify_suite_names()) out.push_back(run_verify_suite(n, cache));
    return out;
}

}  // namespace unicrit
