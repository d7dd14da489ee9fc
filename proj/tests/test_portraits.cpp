#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "unicrit/portraits.hpp"

using unicrit::MapSpec;
using unicrit::PortraitLabel;
using unicrit::Rational;
using PolyC = unicrit::UniPoly<unicrit::Rational>;

namespace {

PolyC cpoly(std::initializer_list<std::pair<long long, Rational>> terms) {
    std::vector<PolyC::Term> ts;
    for (const auto& [e, c] : terms) ts.push_back({e, c});
    return PolyC::from_terms("C", std::move(ts));
}

}  // namespace

TEST_CASE("orbit portraits by exact iteration") {
    MapSpec d2(2);
    auto r1 = unicrit::orbit_portrait(Rational(-1, 2), Rational(-3, 4), d2);
    REQUIRE(r1.portrait.has_value());
    CHECK(*r1.portrait == PortraitLabel(0, 1));
    auto r2 = unicrit::orbit_portrait(Rational(1, 2), Rational(-3, 4), d2);
    REQUIRE(r2.portrait.has_value());
    CHECK(*r2.portrait == PortraitLabel(1, 1));
    CHECK(r2.orbit == std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
    auto r3 = unicrit::orbit_portrait(Rational(0), Rational(-1), d2);
    REQUIRE(r3.portrait.has_value());
    CHECK(*r3.portrait == PortraitLabel(0, 2));
    auto r4 = unicrit::orbit_portrait(Rational(1), Rational(-1), d2);
    REQUIRE(r4.portrait.has_value());
    CHECK(*r4.portrait == PortraitLabel(1, 2));
    CHECK(r4.orbit == std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
    auto r5 = unicrit::orbit_portrait(Rational(3, 2), Rational(-3, 4), d2);
    REQUIRE(r5.portrait.has_value());
    CHECK(*r5.portrait == PortraitLabel(0, 1));
}

TEST_CASE("orbits that never return report the bound marker") {
    MapSpec d2(2);
    auto r = unicrit::orbit_portrait(Rational(1), Rational(1), d2, 24);
    CHECK_FALSE(r.portrait.has_value());
    CHECK(r.bound_used == 24);
    // bound too small to close the cycle
    auto tight = unicrit::orbit_portrait(Rational(0), Rational(-1), d2, 1);
    CHECK_FALSE(tight.portrait.has_value());
    auto enough = unicrit::orbit_portrait(Rational(0), Rational(-1), d2, 2);
    CHECK(enough.portrait.has_value());
}

TEST_CASE("orbit portraits over a quotient field") {
    auto ring = unicrit::cyclotomic_ring(4);
    auto i = ring->generator();
    auto rep = unicrit::orbit_portrait(i, ring->zero(), MapSpec(2), 8);
    REQUIRE(rep.portrait.has_value());
    CHECK(*rep.portrait == PortraitLabel(2, 1));
    REQUIRE(rep.orbit.size() == 3);
    CHECK(rep.orbit[0] == i);
    CHECK(rep.orbit[1] == ring->from_rational(Rational(-1)));
    CHECK(rep.orbit[2] == ring->from_rational(Rational(1)));
}

TEST_CASE("multiplier along a cycle") {
    MapSpec d2(2);
    CHECK(unicrit::multiplier(Rational(-1, 2), Rational(-3, 4), d2, 1) == Rational(-1));
    CHECK(unicrit::multiplier(Rational(0), Rational(0), d2, 1) == Rational(0));
    CHECK(unicrit::multiplier(Rational(0), Rational(-1), d2, 2) == Rational(0));
    CHECK(unicrit::multiplier(Rational(3, 2), Rational(-3, 4), d2, 1) == Rational(3));
}

TEST_CASE("specialization of generalized dynatomic polynomials") {
    MapSpec d2(2);
    CHECK(unicrit::specialize(PortraitLabel(0, 2), d2, Rational(-1, 2)) ==
          cpoly({{1, Rational(1)}, {0, Rational(3, 4)}}));
    CHECK(unicrit::specialize(PortraitLabel(2, 2), d2, Rational(1)) ==
          cpoly({{2, Rational(1)}, {1, Rational(2)}, {0, Rational(1)}}));
    CHECK(unicrit::specialize(PortraitLabel(1, 2), d2, Rational(1, 2)) ==
          cpoly({{1, Rational(1)}, {0, Rational(3, 4)}}));
}

TEST_CASE("degenerate locus") {
    MapSpec d2(2);
    CHECK(unicrit::degenerate_locus(PortraitLabel(0, 2), d2, Rational(-1, 2)) ==
          cpoly({{1, Rational(1)}, {0, Rational(3, 4)}}));
    CHECK(unicrit::degenerate_locus(PortraitLabel(1, 1), d2, Rational(0)).is_zero());
    CHECK(unicrit::degenerate_locus(PortraitLabel(1, 2), d2, Rational(1, 2)) ==
          cpoly({{2, Rational(1, 2)}, {1, Rational(1, 4)}, {0, Rational(-3, 32)}}));
}

TEST_CASE("degenerate locus vanishes exactly at (x, M) = (0, 1)") {
    for (long long d : {2, 3}) {
        MapSpec spec(d);
        for (Rational x : {Rational(0), Rational(1), Rational(-1, 2), Rational(2, 3)}) {
            for (long long M = 0; M <= 3; ++M)
                for (long long N = 1; N <= 3; ++N) {
                    bool zero =
                        unicrit::degenerate_locus(PortraitLabel(M, N), spec, x).is_zero();
                    CHECK(zero == (x.is_zero() && M == 1));
                }
        }
    }
}

TEST_CASE("the four sporadic exceptions are not realizable") {
    MapSpec d2(2);
    auto r1 = unicrit::realizes(Rational(-1, 2), PortraitLabel(0, 2), d2);
    CHECK_FALSE(r1.realizable);
    CHECK(r1.P == cpoly({{1, Rational(1)}, {0, Rational(3, 4)}}));
    CHECK(r1.Pstar.is_one());
    auto r2 = unicrit::realizes(Rational(1, 2), PortraitLabel(1, 2), d2);
    CHECK_FALSE(r2.realizable);
    auto r3 = unicrit::realizes(Rational(1), PortraitLabel(2, 2), d2);
    CHECK_FALSE(r3.realizable);
    CHECK(r3.P == cpoly({{2, Rational(1)}, {1, Rational(2)}, {0, Rational(1)}}));
    CHECK(divrem(r3.S, cpoly({{1, Rational(1)}, {0, Rational(1)}})).second.is_zero());
    CHECK(r3.Pstar.is_one());
    auto r4 = unicrit::realizes(Rational(-1), PortraitLabel(2, 2), d2);
    CHECK_FALSE(r4.realizable);
}

TEST_CASE("the totally ramified point never has preperiod exactly one") {
    for (long long d : {2, 3}) {
        MapSpec spec(d);
        for (long long N = 1; N <= 3; ++N) {
            auto r = unicrit::realizes(Rational(0), PortraitLabel(1, N), spec);
            CHECK_FALSE(r.realizable);
            CHECK(r.S.is_zero());
            CHECK(r.Pstar.is_one());
            CHECK(r.gcd_Pstar_S_is_one);
        }
    }
}

TEST_CASE("realizable cases with rational witnesses") {
    MapSpec d2(2);
    auto r1 = unicrit::realizes(Rational(0), PortraitLabel(0, 1), d2);
    CHECK(r1.realizable);
    CHECK(r1.Pstar == cpoly({{1, Rational(1)}}));
    REQUIRE(r1.witnesses.size() == 1);
    CHECK(r1.witnesses[0].first == Rational(0));
    CHECK(r1.witnesses[0].second.orbit == std::vector<Rational>{Rational(0)});
    auto r2 = unicrit::realizes(Rational(3, 2), PortraitLabel(0, 1), d2);
    CHECK(r2.realizable);
    REQUIRE(r2.witnesses.size() == 1);
    CHECK(r2.witnesses[0].first == Rational(-3, 4));
    // witnesses come back ordered by (denominator, numerator)
    auto r3 = unicrit::realizes(Rational(0), PortraitLabel(0, 2), d2);
    CHECK(r3.realizable);
    REQUIRE(r3.witnesses.size() == 1);  // c = -1 gives the two-cycle {0, -1}
    CHECK(r3.witnesses[0].first == Rational(-1));
    auto r4 = unicrit::realizes(Rational(1, 3), PortraitLabel(1, 2), d2);
    CHECK(r4.realizable);
    CHECK(r4.gcd_Pstar_S_is_one);
}

TEST_CASE("realizability over a quotient field with a rational witness") {
    // sqrt(2) -> 0 -> -2 -> 2 -> 2 under z^2 - 2: portrait (3, 1)
    auto ring = unicrit::QuotientRing::make(
        unicrit::UniPoly<Rational>::from_terms("t", {{2, Rational(1)}, {0, Rational(-2)}}), true);
    auto sqrt2 = ring->generator();
    auto res = unicrit::realizes(sqrt2, PortraitLabel(3, 1), MapSpec(2));
    CHECK(res.realizable);
    bool found = false;
    for (const auto& [c, orbit] : res.witnesses)
        if (c == Rational(-2)) found = true;
    CHECK(found);
    // every root of P* over Q-bar works, but only rational c are listed
    for (const auto& [c, orbit] : res.witnesses) {
        REQUIRE(orbit.portrait.has_value());
        CHECK(*orbit.portrait == PortraitLabel(3, 1));
    }
}

TEST_CASE("quotient point with no rational witnesses") {
    auto ring = unicrit::cyclotomic_ring(4);
    auto i = ring->generator();
    auto res = unicrit::realizes(i, PortraitLabel(1, 1), MapSpec(2));
    CHECK(res.realizable);
    CHECK(res.witnesses.empty());
    CHECK(res.deg_Pstar == 1);
}

TEST_CASE("certificate check") {
    MapSpec d2(2);
    PolyC h1 = cpoly({{1, Rational(1)}, {0, Rational(3, 4)}});
    CHECK(unicrit::certificate_check(Rational(3, 2), PortraitLabel(0, 1), d2, h1));
    PolyC c1 = cpoly({{1, Rational(1)}, {0, Rational(1)}});
    CHECK_FALSE(unicrit::certificate_check(Rational(1), PortraitLabel(2, 2), d2, c1));
    // P* from a realizable run is always certified
    auto run = unicrit::realizes(Rational(0), PortraitLabel(0, 1), d2);
    CHECK(unicrit::certificate_check(Rational(0), PortraitLabel(0, 1), d2, run.Pstar));
    CHECK_THROWS_AS(unicrit::certificate_check(Rational(1), PortraitLabel(0, 1), d2, c1 * c1),
                    unicrit::NotSquarefree);
    CHECK_THROWS_AS(
        unicrit::certificate_check(Rational(1), PortraitLabel(0, 1), d2, c1.scaled(Rational(2))),
        unicrit::MathError);
    // the S = 0 branch certifies nothing
    CHECK_FALSE(unicrit::certificate_check(Rational(0), PortraitLabel(1, 1), d2,
                                           cpoly({{1, Rational(1)}})));
}

TEST_CASE("dichotomy: preperiod or eventual period is exact across all roots") {
    for (long long d : {2, 3}) {
        MapSpec spec(d);
        for (Rational x : {Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2)}) {
            for (long long M = 1; M <= 2; ++M)
                for (long long N = 1; N <= 3; ++N) {
                    PortraitLabel label(M, N);
                    auto P = unicrit::specialize(label, spec, x);
                    auto factors = unicrit::degenerate_factors(label, spec, x);
                    PolyC A = factors.front();
                    PolyC B = cpoly({{0, Rational(1)}});
                    for (std::size_t i = 1; i < factors.size(); ++i) B = B * factors[i];
                    if (A.is_zero()) continue;  // the (0,1) degenerate branch
                    bool pre_ok = A.degree() < 1 || gcd(P, A).degree() == 0;
                    bool per_ok = B.degree() < 1 || gcd(P, B).degree() == 0;
                    CHECK((pre_ok || per_ok));
                }
        }
    }
}

TEST_CASE("soundness oracle: detected portraits satisfy the formal equations") {
    std::mt19937_64 rng(20240809);
    int preperiodic_hits = 0;
    auto random_rational = [&rng]() {
        long long n = static_cast<long long>(rng() % 13) - 6;
        long long d = 1 + static_cast<long long>(rng() % 6);
        return Rational(n, d);
    };
    for (int iter = 0; iter < 120; ++iter) {
        MapSpec spec(2 + static_cast<long long>(rng() % 2));
        Rational x = random_rational(), c = random_rational();
        auto rep = unicrit::orbit_portrait(x, c, spec, 24);
        if (!rep.portrait.has_value()) continue;
        auto [m, n] = *rep.portrait;
        if (m + n > 6) continue;
        ++preperiodic_hits;
        const auto& phi = unicrit::gen_dynatomic_poly(spec, PortraitLabel(m, n));
        CHECK(phi.eval(x, c).is_zero());
    }
    // seeded cases guarantee the oracle sees real preperiodic pairs
    for (auto [x, c] : std::initializer_list<std::pair<Rational, Rational>>{
             {Rational(-1, 2), Rational(-3, 4)},
             {Rational(1, 2), Rational(-3, 4)},
             {Rational(0), Rational(-1)},
             {Rational(1), Rational(-1)},
             {Rational(0), Rational(-2)},
             {Rational(3, 2), Rational(-3, 4)}}) {
        auto rep = unicrit::orbit_portrait(x, c, MapSpec(2), 24);
        REQUIRE(rep.portrait.has_value());
        auto [m, n] = *rep.portrait;
        ++preperiodic_hits;
        CHECK(unicrit::gen_dynatomic_poly(MapSpec(2), PortraitLabel(m, n)).eval(x, c).is_zero());
    }
    CHECK(preperiodic_hits >= 6);
}

TEST_CASE("period collision forces multiplier 1 and vanishing X-partial") {
    MapSpec d2(2);
    // (-1/2, -3/4): exact period 1, formal period 2
    Rational x(-1, 2), c(-3, 4);
    const auto& phi2 = unicrit::dynatomic_poly(d2, 2);
    REQUIRE(phi2.eval(x, c).is_zero());
    CHECK(unicrit::multiplier(x, c, d2, 2) == Rational(1));
    CHECK(phi2.derivative('X').eval(x, c).is_zero());
}
