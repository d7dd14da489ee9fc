// Command-line surface. Deterministic output: identical invocations print
// identical bytes. Exit codes: 0 success, 1 usage/input error, 2 certificate
// or verification failure. Tokens beginning with "--" are flags; everything
// else is positional, so negative rationals like -1/2 parse as values.
#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "unicrit/format.hpp"
#include "unicrit/ratroots.hpp"
#include "unicrit/verify.hpp"

namespace unicrit::cli {

namespace detail {

struct Invocation {
    std::string subcommand;
    std::vector<std::string> positionals;
    std::map<std::string, std::string> values;
    std::set<std::string> switches;
};

inline const std::map<std::string, std::set<std::string>>& value_flags() {
    static const std::map<std::string, std::set<std::string>> table{
        {"--format", {"dynatomic", "gen-dynatomic", "iterate", "realizes", "portrait",
                      "curve-info", "sweep"}},
        {"--bound", {"portrait"}},
        {"--max-witnesses", {"realizes", "sweep"}},
        {"--suite", {"verify"}},
        {"--grid", {"sweep"}},
    };
    return table;
}

inline const char* usage_text() {
    return
        "usage: unicrit <subcommand> [args] [flags]\n"
        "\n"
        "subcommands:\n"
        "  dynatomic d N                 print Phi_N(X, C) for z^d + C\n"
        "  gen-dynatomic d M N           print Phi_{M,N}(X, C)\n"
        "  iterate d n                   print f_{d,C}^n(X)\n"
        "  realizes x M N d              decide whether x realizes portrait (M, N)\n"
        "  portrait x c d [--bound B]    exact orbit portrait of x under z^d + c\n"
        "  curve-info d M N              degrees and components of Y_1(M, N)\n"
        "  verify [--suite name|--list]  run the identity suites\n"
        "  sweep --grid FILE             batch realizes over a JSON grid\n"
        "\n"
        "flags:\n"
        "  --format text|json            output form (default text)\n"
        "  --bound B                     orbit iteration bound (default 64)\n"
        "  --max-witnesses L             cap reported witnesses (0 = all)\n"
        "\n"
        "values x and c are exact: \"p/q\", or \"<rep> mod <modulus>\" over t.\n";
}

inline Invocation parse_args(const std::vector<std::string>& args) {
    Invocation inv;
    if (args.empty()) throw ParseError("missing subcommand", "");
    inv.subcommand = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) == 0) {
            if (a == "--help") {
                inv.switches.insert("--help");
                continue;
            }
            if (a == "--list") {
                inv.switches.insert("--list");
                continue;
            }
            std::string name = a, value;
            bool has_value = false;
            if (auto eq = a.find('='); eq != std::string::npos) {
                name = a.substr(0, eq);
                value = a.substr(eq + 1);
                has_value = true;
            }
            auto it = value_flags().find(name);
            if (it == value_flags().end()) throw ParseError("unknown flag", name);
            if (!it->second.count(inv.subcommand))
                throw ParseError("flag not valid for subcommand " + inv.subcommand, name);
            if (!has_value) {
                if (i + 1 >= args.size()) throw ParseError("flag needs a value", name);
                value = args[++i];
            }
            inv.values[name] = value;
        } else {
            inv.positionals.push_back(a);
        }
    }
    return inv;
}

inline long long parse_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected an integer for ") + what, s);
    }
}

inline std::string format_of(const Invocation& inv) {
    auto it = inv.values.find("--format");
    if (it == inv.values.end()) return "text";
    if (it->second != "text" && it->second != "json")
        throw ParseError("format must be text or json", it->second);
    return it->second;
}

inline void require_positionals(const Invocation& inv, std::size_t n) {
    if (inv.positionals.size() != n)
        throw ParseError(inv.subcommand + " expects " + std::to_string(n) + " arguments",
                         inv.positionals.empty() ? "" : inv.positionals.back());
}

template <class K>
void print_realizes(const std::string& x_text, const PortraitLabel& label, const MapSpec& spec,
                    RealizabilityResult<K>& res, const std::string& format, long long max_witnesses,
                    std::ostream& out) {
    if (max_witnesses > 0 &&
        res.witnesses.size() > static_cast<std::size_t>(max_witnesses))
        res.witnesses.resize(static_cast<std::size_t>(max_witnesses));
    if (format == "json") {
        out << realizability_json(x_text, label, spec, res).dump(2) << "\n";
        return;
    }
    out << "realizable: " << (res.realizable ? "true" : "false") << "\n";
    out << "P: " << res.P.to_string() << "\n";
    out << "S: " << res.S.to_string() << "\n";
    out << "Pstar: " << res.Pstar.to_string() << "\n";
    if (res.witnesses.empty()) {
        out << "witnesses: (none)\n";
    } else {
        out << "witnesses:\n";
        for (const auto& [c, orbit] : res.witnesses) {
            out << "  c = " << c.to_string() << "  orbit:";
            for (const auto& v : orbit.orbit) out << " " << scalar_text(v);
            out << "  portrait: (" << orbit.portrait->M << "," << orbit.portrait->N << ")\n";
        }
    }
    out << "certificate: gcd(Pstar, S) = " << (res.gcd_Pstar_S_is_one ? "1" : "nontrivial")
        << "; deg Pstar = " << res.deg_Pstar << "\n";
}

template <class K>
int run_realizes_typed(const K& x, const Invocation& inv, const PortraitLabel& label,
                       const MapSpec& spec, std::ostream& out) {
    auto res = realizes(x, label, spec);
    long long cap = 0;
    if (auto it = inv.values.find("--max-witnesses"); it != inv.values.end())
        cap = parse_int(it->second, "--max-witnesses");
    print_realizes(scalar_text(x), label, spec, res, format_of(inv), cap, out);
    return 0;
}

template <class K>
int run_portrait_typed(const K& x, const K& c, const MapSpec& spec, long long bound,
                       const std::string& format, std::ostream& out) {
    OrbitReport<K> rep = orbit_portrait(x, c, spec, bound);
    if (format == "json") {
        nlohmann::json j = orbit_json(rep);
        j["x"] = scalar_text(x);
        j["c"] = scalar_text(c);
        j["d"] = spec.d;
        out << j.dump(2) << "\n";
        return 0;
    }
    if (rep.portrait.has_value())
        out << "portrait [" << rep.portrait->M << "," << rep.portrait->N << "], orbit [";
    else
        out << "portrait none (not preperiodic within bound " << rep.bound_used << "), orbit [";
    for (std::size_t i = 0; i < rep.orbit.size(); ++i)
        out << (i ? "," : "") << "\"" << scalar_text(rep.orbit[i]) << "\"";
    out << "]\n";
    return 0;
}

inline int run_verify(const Invocation& inv, std::ostream& out) {
    if (inv.switches.count("--list")) {
        for (const auto& n : verify_suite_names()) out << n << "\n";
        return 0;
    }
    std::vector<SuiteOutcome> outcomes;
    if (auto it = inv.values.find("--suite"); it != inv.values.end()) {
        outcomes.push_back(run_verify_suite(it->second));
    } else {
        outcomes = run_all_verify_suites();
    }
    bool all_ok = true;
    for (const auto& o : outcomes) {
        out << (o.passed ? "PASS " : "FAIL ") << o.name << ": " << o.detail << "\n";
        all_ok = all_ok && o.passed;
    }
    return all_ok ? 0 : 2;
}

inline int run_sweep(const Invocation& inv, std::ostream& out) {
    auto it = inv.values.find("--grid");
    if (it == inv.values.end()) throw ParseError("sweep requires --grid FILE", "");
    std::ifstream in(it->second);
    if (!in) throw ParseError("cannot open grid file", it->second);
    nlohmann::json grid;
    try {
        in >> grid;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("grid file is not valid JSON: ") + e.what(), it->second);
    }
    if (!grid.is_array()) throw ParseError("grid file must hold a JSON array", it->second);
    const std::string format = format_of(inv);
    long long cap = 0;
    if (auto mw = inv.values.find("--max-witnesses"); mw != inv.values.end())
        cap = parse_int(mw->second, "--max-witnesses");
    nlohmann::json results = nlohmann::json::array();
    for (const auto& entry : grid) {
        std::string x_str = entry.at("x").get<std::string>();
        PortraitLabel label(entry.at("M").get<long long>(), entry.at("N").get<long long>());
        MapSpec spec(entry.at("d").get<long long>());
        PointValue x = parse_point(x_str);
        std::visit(
            [&](const auto& xv) {
                auto res = realizes(xv, label, spec);
                if (cap > 0 && res.witnesses.size() > static_cast<std::size_t>(cap))
                    res.witnesses.resize(static_cast<std::size_t>(cap));
                if (format == "json") {
                    results.push_back(realizability_json(scalar_text(xv), label, spec, res));
                } else {
                    out << "x=" << scalar_text(xv) << " M=" << label.M << " N=" << label.N
                        << " d=" << spec.d << ": realizable=" << (res.realizable ? "true" : "false");
                    out << " witnesses=[";
                    for (std::size_t i = 0; i < res.witnesses.size(); ++i)
                        out << (i ? "," : "") << res.witnesses[i].first.to_string();
                    out << "]\n";
                }
            },
            x);
    }
    if (format == "json") out << results.dump(2) << "\n";
    return 0;
}

}  // namespace detail

// Entry point shared by the binary and the tests. `args` excludes argv[0].
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace detail;
    try {
        if (args.empty() || args[0] == "--help" || args[0] == "help") {
            out << usage_text();
            return args.empty() ? 1 : 0;
        }
        Invocation inv = parse_args(args);
        if (inv.switches.count("--help")) {
            out << usage_text();
            return 0;
        }
        const std::string& sub = inv.subcommand;
        if (sub == "dynatomic") {
            require_positionals(inv, 2);
            MapSpec spec(parse_int(inv.positionals[0], "d"));
            long long N = parse_int(inv.positionals[1], "N");
            const BiPolyQ& phi = dynatomic_poly(spec, N);
            out << (format_of(inv) == "json" ? poly_json(phi).dump(2) : phi.to_string()) << "\n";
            return 0;
        }
        if (sub == "gen-dynatomic") {
            require_positionals(inv, 3);
            MapSpec spec(parse_int(inv.positionals[0], "d"));
            PortraitLabel label(parse_int(inv.positionals[1], "M"),
                                parse_int(inv.positionals[2], "N"));
            const BiPolyQ& phi = gen_dynatomic_poly(spec, label);
            out << (format_of(inv) == "json" ? poly_json(phi).dump(2) : phi.to_string()) << "\n";
            return 0;
        }
        if (sub == "iterate") {
            require_positionals(inv, 2);
            MapSpec spec(parse_int(inv.positionals[0], "d"));
            long long n = parse_int(inv.positionals[1], "n");
            const BiPolyQ& f = iterate_poly(spec, n);
            out << (format_of(inv) == "json" ? poly_json(f).dump(2) : f.to_string()) << "\n";
            return 0;
        }
        if (sub == "realizes") {
            require_positionals(inv, 4);
            PointValue x = parse_point(inv.positionals[0]);
            PortraitLabel label(parse_int(inv.positionals[1], "M"),
                                parse_int(inv.positionals[2], "N"));
            MapSpec spec(parse_int(inv.positionals[3], "d"));
            return std::visit(
                [&](const auto& xv) { return run_realizes_typed(xv, inv, label, spec, out); }, x);
        }
        if (sub == "portrait") {
            require_positionals(inv, 3);
            PointValue x = parse_point(inv.positionals[0]);
            PointValue c = parse_point(inv.positionals[1]);
            MapSpec spec(parse_int(inv.positionals[2], "d"));
            long long bound = 64;
            if (auto it = inv.values.find("--bound"); it != inv.values.end())
                bound = parse_int(it->second, "--bound");
            const std::string format = format_of(inv);
            // promote a rational into the other operand's ring when mixed
            if (std::holds_alternative<Rational>(x) && std::holds_alternative<Rational>(c))
                return run_portrait_typed(std::get<Rational>(x), std::get<Rational>(c), spec,
                                          bound, format, out);
            QuotientRingPtr ring = std::holds_alternative<QuotientElement>(x)
                                       ? std::get<QuotientElement>(x).ring()
                                       : std::get<QuotientElement>(c).ring();
            auto lift = [&](const PointValue& v) {
                if (std::holds_alternative<QuotientElement>(v))
                    return std::get<QuotientElement>(v);
                return ring->from_rational(std::get<Rational>(v));
            };
            return run_portrait_typed(lift(x), lift(c), spec, bound, format, out);
        }
        if (sub == "curve-info") {
            require_positionals(inv, 3);
            MapSpec spec(parse_int(inv.positionals[0], "d"));
            PortraitLabel label(parse_int(inv.positionals[1], "M"),
                                parse_int(inv.positionals[2], "N"));
            CurveInfo info = curve_info(spec, label);
            if (format_of(inv) == "json") {
                out << curve_info_json(info).dump(2) << "\n";
            } else {
                out << "curve Y_1(" << info.label.M << "," << info.label.N << ") in degree "
                    << info.d << "\n";
                out << "degX: " << info.degX << "\n";
                out << "degC: " << info.degC << "\n";
                out << "components: " << info.component_count << "\n";
                out << "singular locus: " << info.singular_note << "\n";
            }
            return 0;
        }
        if (sub == "verify") return run_verify(inv, out);
        if (sub == "sweep") return run_sweep(inv, out);
        throw ParseError("unknown subcommand", sub);
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const CertificateFailure& e) {
        err << "certificate failure: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace unicrit::cli
