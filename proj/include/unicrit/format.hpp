// Canonical text parsing and JSON serialization. The text grammar accepts
// exactly what the printers emit (plus optional whitespace): terms joined by
// '+'/'-', each a '*'-separated product of rational constants and variable
// powers. Rationals are "p/q" in lowest terms; decimals are rejected.
// Bit-exact round trips between values, canonical text, and JSON are part of
// the interface contract and are enforced by tests.
#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "unicrit/dynatomic.hpp"
#include "unicrit/portraits.hpp"

namespace unicrit {

namespace detail {

struct Token {
    enum Kind { Number, Ident, Caret, Star, Plus, Minus, End } kind;
    std::string text;
};

inline std::vector<Token> lex_poly(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\n') {
            ++i;
            continue;
        }
        if (c >= '0' && c <= '9') {
            std::size_t j = i;
            while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
            if (j < src.size() && src[j] == '/') {
                std::size_t k = j + 1;
                while (k < src.size() && src[k] >= '0' && src[k] <= '9') ++k;
                if (k == j + 1) throw ParseError("missing denominator", std::string(src.substr(i, j + 1 - i)));
                j = k;
            }
            out.push_back({Token::Number, std::string(src.substr(i, j - i))});
            i = j;
            continue;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= 'A' && src[j] <= 'Z') ||
                    (src[j] >= '0' && src[j] <= '9') || src[j] == '_'))
                ++j;
            out.push_back({Token::Ident, std::string(src.substr(i, j - i))});
            i = j;
            continue;
        }
        switch (c) {
            case '^': out.push_back({Token::Caret, "^"}); break;
            case '*': out.push_back({Token::Star, "*"}); break;
            case '+': out.push_back({Token::Plus, "+"}); break;
            case '-': out.push_back({Token::Minus, "-"}); break;
            case '.': throw ParseError("decimal literals are not accepted; use p/q", std::string(1, c));
            default: throw ParseError("unexpected character in polynomial", std::string(1, c));
        }
        ++i;
    }
    out.push_back({Token::End, ""});
    return out;
}

struct ParsedTerm {
    Rational coeff;
    std::map<std::string, long long> exps;
};

inline std::vector<ParsedTerm> parse_poly_terms(std::string_view src,
                                                const std::set<std::string>& vars) {
    std::vector<Token> toks = lex_poly(src);
    std::size_t pos = 0;
    auto peek = [&]() -> const Token& { return toks[pos]; };
    auto next = [&]() -> const Token& { return toks[pos++]; };

    std::vector<ParsedTerm> terms;
    bool first = true;
    while (peek().kind != Token::End) {
        int sign = 1;
        if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            if (first && peek().kind == Token::Plus)
                throw ParseError("polynomial cannot start with +", "+");
            sign = next().kind == Token::Minus ? -1 : 1;
        } else if (!first) {
            throw ParseError("expected + or - between terms", peek().text);
        }
        ParsedTerm term;
        term.coeff = Rational(sign);
        bool want_factor = true;
        while (want_factor) {
            const Token& t = next();
            if (t.kind == Token::Number) {
                term.coeff = term.coeff * Rational::parse(t.text);
            } else if (t.kind == Token::Ident) {
                if (!vars.count(t.text)) throw ParseError("unknown variable", t.text);
                long long e = 1;
                if (peek().kind == Token::Caret) {
                    ++pos;
                    if (peek().kind != Token::Number || peek().text.find('/') != std::string::npos)
                        throw ParseError("exponent must be a nonnegative integer", peek().text);
                    e = std::stoll(next().text);
                }
                term.exps[t.text] += e;
            } else {
                throw ParseError("expected a coefficient or variable", t.text);
            }
            if (peek().kind == Token::Star) {
                ++pos;
                want_factor = true;
            } else {
                want_factor = false;
            }
        }
        terms.push_back(std::move(term));
        first = false;
    }
    if (terms.empty()) throw ParseError("empty polynomial", std::string(src));
    return terms;
}

}  // namespace detail

inline UniPoly<Rational> parse_unipoly(std::string_view src, const std::string& var) {
    std::vector<UniPoly<Rational>::Term> ts;
    for (auto& t : detail::parse_poly_terms(src, {var})) {
        long long e = t.exps.count(var) ? t.exps[var] : 0;
        ts.push_back({e, t.coeff});
    }
    return UniPoly<Rational>::from_terms(var, std::move(ts));
}

inline BiPolyQ parse_bipoly(std::string_view src) {
    std::vector<BiPolyQ::Term> ts;
    for (auto& t : detail::parse_poly_terms(src, {"X", "C"})) {
        int ex = static_cast<int>(t.exps.count("X") ? t.exps["X"] : 0);
        int ec = static_cast<int>(t.exps.count("C") ? t.exps["C"] : 0);
        ts.push_back({ex, ec, t.coeff});
    }
    return BiPolyQ::from_terms(std::move(ts));
}

// Point values: a rational "p/q", or a quotient-ring literal
// "<rep> mod <modulus>" with both sides polynomials in t (modulus monic).
using PointValue = std::variant<Rational, QuotientElement>;

inline PointValue parse_point(std::string_view src) {
    const std::string marker = " mod ";
    auto pos = std::string_view::npos;
    for (std::size_t i = 0; i + marker.size() <= src.size(); ++i)
        if (src.substr(i, marker.size()) == marker) {
            pos = i;
            break;
        }
    if (pos == std::string_view::npos) return Rational::parse(src);
    UniPoly<Rational> rep = parse_unipoly(src.substr(0, pos), "t");
    UniPoly<Rational> modulus = parse_unipoly(src.substr(pos + marker.size()), "t");
    auto ring = QuotientRing::make(std::move(modulus), /*irreducibility_asserted=*/true);
    return ring->element(std::move(rep));
}

inline std::string scalar_text(const Rational& v) { return v.to_string(); }
inline std::string scalar_text(const QuotientElement& v) {
    if (!v.ring()) return "0";
    return v.to_text() + " mod " + v.ring()->modulus().to_string();
}

inline std::string point_text(const PointValue& v) {
    return std::visit([](const auto& x) { return scalar_text(x); }, v);
}

// ---------------------------------------------------------------------------
// JSON forms

template <class K>
nlohmann::json poly_json(const UniPoly<K>& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms())
        terms.push_back(nlohmann::json::array({t.exp, scalar_text(t.coeff)}));
    return {{"vars", {p.var()}}, {"terms", terms}};
}

template <class K>
nlohmann::json poly_json(const BiPoly<K>& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms())
        terms.push_back(nlohmann::json::array({t.ex, t.ec, scalar_text(t.coeff)}));
    return {{"vars", {"X", "C"}}, {"terms", terms}};
}

inline UniPoly<Rational> unipoly_from_json(const nlohmann::json& j) {
    if (!j.contains("vars") || !j.contains("terms") || j["vars"].size() != 1)
        throw ParseError("univariate polynomial JSON needs one variable", j.dump());
    std::string var = j["vars"][0].get<std::string>();
    std::vector<UniPoly<Rational>::Term> ts;
    for (const auto& t : j["terms"])
        ts.push_back({t.at(0).get<long long>(), Rational::parse(t.at(1).get<std::string>())});
    return UniPoly<Rational>::from_terms(var, std::move(ts));
}

inline BiPolyQ bipoly_from_json(const nlohmann::json& j) {
    if (!j.contains("vars") || !j.contains("terms") || j["vars"].size() != 2)
        throw ParseError("bivariate polynomial JSON needs two variables", j.dump());
    std::vector<BiPolyQ::Term> ts;
    for (const auto& t : j["terms"])
        ts.push_back({t.at(0).get<int>(), t.at(1).get<int>(),
                      Rational::parse(t.at(2).get<std::string>())});
    return BiPolyQ::from_terms(std::move(ts));
}

inline nlohmann::json curve_info_json(const CurveInfo& info) {
    return {{"M", info.label.M},
            {"N", info.label.N},
            {"d", info.d},
            {"degX", info.degX},
            {"degC", info.degC},
            {"components", info.component_count},
            {"singular_note", info.singular_note}};
}

template <class K>
nlohmann::json orbit_json(const OrbitReport<K>& report) {
    nlohmann::json orbit = nlohmann::json::array();
    for (const auto& v : report.orbit) orbit.push_back(scalar_text(v));
    nlohmann::json portrait;
    if (report.portrait.has_value())
        portrait = nlohmann::json::array({report.portrait->M, report.portrait->N});
    return {{"portrait", portrait}, {"orbit", orbit}, {"bound_used", report.bound_used}};
}

template <class K>
nlohmann::json realizability_json(const std::string& x_text, const PortraitLabel& label,
                                  const MapSpec& spec, const RealizabilityResult<K>& res) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& [c, orbit] : res.witnesses) {
        nlohmann::json o = nlohmann::json::array();
        for (const auto& v : orbit.orbit) o.push_back(scalar_text(v));
        witnesses.push_back({{"c", c.to_string()},
                             {"orbit", o},
                             {"portrait", {orbit.portrait->M, orbit.portrait->N}}});
    }
    return {{"x", x_text},
            {"M", label.M},
            {"N", label.N},
            {"d", spec.d},
            {"realizable", res.realizable},
            {"P", poly_json(res.P)},
            {"S", poly_json(res.S)},
            {"Pstar", poly_json(res.Pstar)},
            {"witnesses", witnesses},
            {"certificate",
             {{"gcd_Pstar_S_is_one", res.gcd_Pstar_S_is_one}, {"deg_Pstar", res.deg_Pstar}}}};
}

}  // namespace unicrit
