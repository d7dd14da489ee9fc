#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "unicrit/dynatomic.hpp"
#include "unicrit/ratroots.hpp"
#include "unicrit/resultant.hpp"

using unicrit::BiPolyQ;
using unicrit::MapSpec;
using unicrit::Rational;
using PolyC = unicrit::UniPoly<unicrit::Rational>;

#include "oracles.hpp"

using unicrit_testing::fraction_field_gcd_degree;
using unicrit_testing::sylvester_resultant;

namespace {

BiPolyQ random_bipoly(std::mt19937_64& rng, int dx, int dc) {
    std::vector<BiPolyQ::Term> ts;
    for (int i = 0; i <= dx; ++i)
        for (int j = 0; j <= dc; ++j) {
            long long v = static_cast<long long>(rng() % 7) - 3;
            if (v != 0) ts.push_back({i, j, Rational(v)});
        }
    return BiPolyQ::from_terms(std::move(ts));
}

}  // namespace

TEST_CASE("resultant of the first two dynatomic polynomials is the bifurcation locus") {
    MapSpec d2(2);
    const BiPolyQ& phi1 = unicrit::dynatomic_poly(d2, 1);
    const BiPolyQ& phi2 = unicrit::dynatomic_poly(d2, 2);
    PolyC expected = PolyC::from_terms("C", {{1, Rational(4)}, {0, Rational(3)}});
    PolyC via_prs = unicrit::resultant_x(phi2, phi1);
    CHECK(via_prs == expected);
    CHECK(sylvester_resultant(phi2, phi1) == expected);
    CHECK(unicrit::rational_roots(via_prs) == std::vector<Rational>{Rational(-3, 4)});
}

TEST_CASE("resultant linear case and zero cases") {
    BiPolyQ xa = BiPolyQ::monomial(1, 0, Rational(1)) - BiPolyQ::constant(Rational(2, 3));
    BiPolyQ xb = BiPolyQ::monomial(1, 0, Rational(1)) - BiPolyQ::constant(Rational(7));
    // Res_X(X - a, X - b) = b - a
    PolyC r = unicrit::resultant_x(xa, xb);
    CHECK(r == PolyC::constant("C", Rational(7) - Rational(2, 3)));
    CHECK(sylvester_resultant(xa, xb) == r);
    MapSpec d2(2);
    const BiPolyQ& phi1 = unicrit::dynatomic_poly(d2, 1);
    CHECK(unicrit::resultant_x(phi1, phi1).is_zero());
    CHECK_THROWS_AS(unicrit::resultant_x(BiPolyQ(), phi1), unicrit::ZeroOperand);
}

TEST_CASE("resultant agrees with the Sylvester oracle on random pairs") {
    std::mt19937_64 rng(8888);
    int nonzero_checked = 0;
    for (int iter = 0; iter < 60; ++iter) {
        BiPolyQ a = random_bipoly(rng, 1 + static_cast<int>(rng() % 3), 1);
        BiPolyQ b = random_bipoly(rng, 1 + static_cast<int>(rng() % 3), 1);
        if (a.is_zero() || b.is_zero() || a.degree_x() < 1 || b.degree_x() < 1) continue;
        PolyC fast = unicrit::resultant_x(a, b);
        PolyC slow = sylvester_resultant(a, b);
        CHECK(fast == slow);
        ++nonzero_checked;
    }
    CHECK(nonzero_checked > 30);
}

TEST_CASE("resultant vanishes exactly on pairs sharing a factor") {
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 40; ++iter) {
        BiPolyQ f = random_bipoly(rng, 1, 1), g = random_bipoly(rng, 1, 1);
        BiPolyQ h = random_bipoly(rng, 1, 1);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        if (f.degree_x() < 1 || g.degree_x() < 1 || h.degree_x() < 1) continue;
        PolyC shared = unicrit::resultant_x(f * h, g * h);
        CHECK(shared.is_zero());
        PolyC maybe = unicrit::resultant_x(f, g);
        CHECK(maybe.is_zero() == (fraction_field_gcd_degree(f, g) >= 1));
    }
}
