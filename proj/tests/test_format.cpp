#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "unicrit/format.hpp"

using unicrit::BiPolyQ;
using unicrit::MapSpec;
using unicrit::Rational;
using PolyC = unicrit::UniPoly<unicrit::Rational>;

TEST_CASE("canonical text of the explicit dynatomic polynomials") {
    MapSpec d2(2);
    CHECK(unicrit::dynatomic_poly(d2, 1).to_string() == "X^2 - X + C");
    CHECK(unicrit::dynatomic_poly(d2, 2).to_string() == "X^2 + X + C + 1");
    CHECK(unicrit::gen_dynatomic_poly(d2, unicrit::PortraitLabel(1, 2)).to_string() ==
          "X^2 - X + C + 1");
    CHECK(unicrit::iterate_poly(d2, 2).to_string() == "X^4 + 2*X^2*C + C^2 + C");
    CHECK(unicrit::dynatomic_poly(d2, 3).to_string() ==
          "X^6 + X^5 + 3*X^4*C + X^4 + 2*X^3*C + X^3 + 3*X^2*C^2 + 3*X^2*C + X^2 + X*C^2 + "
          "2*X*C + X + C^3 + 2*C^2 + C + 1");
    CHECK(BiPolyQ().to_string() == "0");
}

TEST_CASE("polynomial text parses back to the same value") {
    MapSpec d2(2), d3(3);
    for (const BiPolyQ& p :
         {unicrit::dynatomic_poly(d2, 3), unicrit::dynatomic_poly(d3, 2),
          unicrit::iterate_poly(d2, 3), unicrit::gen_dynatomic_poly(d2, unicrit::PortraitLabel(2, 2)),
          BiPolyQ::constant(Rational(-3, 4)), BiPolyQ()}) {
        if (p.is_zero()) {
            CHECK(unicrit::parse_bipoly("0").is_zero());
            continue;
        }
        CHECK(unicrit::parse_bipoly(p.to_string()) == p);
    }
    PolyC q = PolyC::from_terms(
        "C", {{3, Rational(-5, 7)}, {1, Rational(1)}, {0, Rational(-2)}});
    CHECK(unicrit::parse_unipoly(q.to_string(), "C") == q);
    CHECK(unicrit::parse_unipoly("C^2+1", "C") ==
          PolyC::from_terms("C", {{2, Rational(1)}, {0, Rational(1)}}));
    CHECK_THROWS_AS(unicrit::parse_unipoly("C + 0.5", "C"), unicrit::ParseError);
    CHECK_THROWS_AS(unicrit::parse_unipoly("C + Y", "C"), unicrit::ParseError);
    CHECK_THROWS_AS(unicrit::parse_unipoly("", "C"), unicrit::ParseError);
}

TEST_CASE("JSON round trip is bit exact") {
    MapSpec d2(2);
    const BiPolyQ& phi3 = unicrit::dynatomic_poly(d2, 3);
    auto j = unicrit::poly_json(phi3);
    CHECK(j["vars"] == nlohmann::json({"X", "C"}));
    CHECK(unicrit::bipoly_from_json(j) == phi3);
    // canonical order in the serialized terms: X-major descending
    CHECK(j["terms"][0] == nlohmann::json::array({6, 0, "1"}));
    PolyC p = PolyC::from_terms("C", {{1, Rational(1)}, {0, Rational(3, 4)}});
    auto ju = unicrit::poly_json(p);
    CHECK(ju["terms"] == nlohmann::json::array({{1, "1"}, {0, "3/4"}}));
    CHECK(unicrit::unipoly_from_json(ju) == p);
    // a parse-print-parse cycle through text as well
    CHECK(unicrit::parse_bipoly(phi3.to_string()) == unicrit::bipoly_from_json(j));
}

TEST_CASE("point values") {
    auto p1 = unicrit::parse_point("-3/4");
    REQUIRE(std::holds_alternative<Rational>(p1));
    CHECK(std::get<Rational>(p1) == Rational(-3, 4));
    auto p2 = unicrit::parse_point("t mod t^2 + 1");
    REQUIRE(std::holds_alternative<unicrit::QuotientElement>(p2));
    const auto& qe = std::get<unicrit::QuotientElement>(p2);
    CHECK(qe.ring()->modulus().degree() == 2);
    CHECK((qe * qe) == qe.ring()->from_rational(Rational(-1)));
    CHECK(unicrit::point_text(p2) == "t mod t^2 + 1");
    CHECK_THROWS_AS(unicrit::parse_point("t mod 2*t^2 + 1"), unicrit::IncompatibleRings);
    CHECK_THROWS_AS(unicrit::parse_point("1/0"), unicrit::ZeroOperand);
    CHECK_THROWS_AS(unicrit::parse_point("0.25"), unicrit::ParseError);
}

TEST_CASE("curve info JSON uses the documented keys") {
    auto info = unicrit::curve_info(MapSpec(3), unicrit::PortraitLabel(1, 1));
    auto j = unicrit::curve_info_json(info);
    CHECK(j["M"] == 1);
    CHECK(j["N"] == 1);
    CHECK(j["d"] == 3);
    CHECK(j["degX"] == 6);
    CHECK(j["degC"] == 2);
    CHECK(j["components"] == 2);
    CHECK(j["singular_note"] == "points with f_{d,c}^{M-1}(x) = 0");
}

TEST_CASE("realizability JSON follows the documented schema") {
    MapSpec d2(2);
    unicrit::PortraitLabel label(0, 2);
    auto res = unicrit::realizes(Rational(-1, 2), label, d2);
    auto j = unicrit::realizability_json("-1/2", label, d2, res);
    CHECK(j["x"] == "-1/2");
    CHECK(j["M"] == 0);
    CHECK(j["N"] == 2);
    CHECK(j["d"] == 2);
    CHECK(j["realizable"] == false);
    CHECK(unicrit::unipoly_from_json(j["P"]) ==
          PolyC::from_terms("C", {{1, Rational(1)}, {0, Rational(3, 4)}}));
    CHECK(j["certificate"]["gcd_Pstar_S_is_one"] == true);
    CHECK(j["certificate"]["deg_Pstar"] == 0);
    CHECK(j["witnesses"].is_array());
    CHECK(j["witnesses"].empty());
}
