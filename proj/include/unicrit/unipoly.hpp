// Univariate polynomials with exact coefficients, stored sparse-by-term in
// canonical form: strictly decreasing exponents, no zero terms. Structural
// equality therefore coincides with mathematical equality. The coefficient
// type K is a field (Rational, or a quotient-ring element); a handful of
// operations are specific to K = Rational.
#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "unicrit/errors.hpp"
#include "unicrit/rational.hpp"
#include "unicrit/zmod.hpp"

namespace unicrit {

// degree of the zero polynomial
inline constexpr long long kNegInfinity = std::numeric_limits<long long>::min();

template <class V>
V generic_pow(const V& base, unsigned long long e) {
    if (e == 0) return one_like(base);
    V b = base;
    while (!(e & 1ull)) {
        b = b * b;
        e >>= 1;
    }
    V r = b;
    e >>= 1;
    while (e) {
        b = b * b;
        if (e & 1ull) r = r * b;
        e >>= 1;
    }
    return r;
}

template <class K>
class UniPoly {
public:
    struct Term {
        long long exp;
        K coeff;
    };

    UniPoly() : var_("C") {}
    explicit UniPoly(std::string var) : var_(std::move(var)) {}

    static UniPoly zero(std::string var) { return UniPoly(std::move(var)); }

    static UniPoly constant(std::string var, K c) {
        UniPoly p(std::move(var));
        if (!c.is_zero()) p.terms_.push_back({0, std::move(c)});
        return p;
    }

    static UniPoly monomial(std::string var, long long exp, K c) {
        UniPoly p(std::move(var));
        if (!c.is_zero()) p.terms_.push_back({exp, std::move(c)});
        return p;
    }

    // canonicalizes: sorts descending, merges equal exponents, drops zeros
    static UniPoly from_terms(std::string var, std::vector<Term> terms) {
        UniPoly p(std::move(var));
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.exp > b.exp; });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().exp == t.exp)
                p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
            else
                p.terms_.push_back(std::move(t));
        }
        std::erase_if(p.terms_, [](const Term& t) { return t.coeff.is_zero(); });
        return p;
    }

    const std::string& var() const { return var_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    long long degree() const { return terms_.empty() ? kNegInfinity : terms_.front().exp; }

    const K& leading_coeff() const {
        if (terms_.empty()) throw ZeroOperand("leading coefficient of zero polynomial");
        return terms_.front().coeff;
    }

    // coefficient of var^exp; nullptr when absent
    const K* coeff(long long exp) const {
        for (const auto& t : terms_) {
            if (t.exp == exp) return &t.coeff;
            if (t.exp < exp) break;
        }
        return nullptr;
    }

    bool is_one() const {
        return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff.is_one();
    }

    bool is_monic() const { return !terms_.empty() && terms_.front().coeff.is_one(); }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.var_ != b.var_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].exp != b.terms_[i].exp || !(a.terms_[i].coeff == b.terms_[i].coeff))
                return false;
        return true;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        check_compatible(a, b);
        UniPoly r(a.var_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exp > b.terms_[j].exp)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].exp > a.terms_[i].exp) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                K c = a.terms_[i].coeff + b.terms_[j].coeff;
                if (!c.is_zero()) r.terms_.push_back({a.terms_[i].exp, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    UniPoly operator-() const {
        UniPoly r(var_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.exp, -t.coeff});
        return r;
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        check_compatible(a, b);
        UniPoly r(a.var_);
        if (a.is_zero() || b.is_zero()) return r;
        std::vector<Term> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) acc.push_back({ta.exp + tb.exp, ta.coeff * tb.coeff});
        return from_terms(a.var_, std::move(acc));
    }

    UniPoly scaled(const K& c) const {
        UniPoly r(var_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            K v = t.coeff * c;
            if (!v.is_zero()) r.terms_.push_back({t.exp, std::move(v)});
        }
        return r;
    }

    UniPoly shifted(long long dexp) const {
        UniPoly r = *this;
        for (auto& t : r.terms_) t.exp += dexp;
        return r;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(terms_.front().coeff.inverse());
    }

    // quotient/remainder over the coefficient field; den != 0
    friend std::pair<UniPoly, UniPoly> divrem(const UniPoly& num, const UniPoly& den) {
        check_compatible(num, den);
        if (den.is_zero()) throw ZeroOperand("division by zero polynomial");
        UniPoly q(num.var_), r = num;
        K lead_inv = den.terms_.front().coeff.inverse();
        long long dd = den.degree();
        while (!r.is_zero() && r.degree() >= dd) {
            K c = r.terms_.front().coeff * lead_inv;
            long long e = r.degree() - dd;
            q.terms_.push_back({e, c});
            r = r - den.scaled(c).shifted(e);
        }
        return {std::move(q), std::move(r)};
    }

    friend UniPoly exact_div(const UniPoly& num, const UniPoly& den) {
        auto [q, r] = divrem(num, den);
        if (!r.is_zero()) throw NotDivisible("polynomial division left a nonzero remainder");
        return q;
    }

    UniPoly derivative() const {
        UniPoly r(var_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (t.exp == 0) continue;
            K c = t.coeff.times_int(t.exp);
            if (!c.is_zero()) r.terms_.push_back({t.exp - 1, std::move(c)});
        }
        return r;
    }

    // Horner evaluation; V must support V*V, V+K, and one_like/zero_like
    template <class V>
    V eval(const V& x) const {
        if (terms_.empty()) return zero_like(x);
        V acc = zero_like(x) + terms_[0].coeff;
        for (std::size_t i = 1; i < terms_.size(); ++i) {
            acc = acc * generic_pow(x, static_cast<unsigned long long>(terms_[i - 1].exp - terms_[i].exp));
            acc = acc + terms_[i].coeff;
        }
        long long low = terms_.back().exp;
        if (low > 0) acc = acc * generic_pow(x, static_cast<unsigned long long>(low));
        return acc;
    }

    // substitute var -> g (polynomial composition)
    UniPoly compose(const UniPoly& g) const {
        UniPoly acc(g.var());
        bool first = true;
        long long prev = 0;
        for (const auto& t : terms_) {
            if (first) {
                acc = UniPoly::constant(g.var(), t.coeff);
                prev = t.exp;
                first = false;
                continue;
            }
            acc = acc * generic_pow(g, static_cast<unsigned long long>(prev - t.exp));
            acc = acc + UniPoly::constant(g.var(), t.coeff);
            prev = t.exp;
        }
        if (first) return acc;  // zero polynomial
        if (prev > 0) acc = acc * generic_pow(g, static_cast<unsigned long long>(prev));
        return acc;
    }

    UniPoly with_var(std::string var) const {
        UniPoly r = *this;
        r.var_ = std::move(var);
        return r;
    }

    // Canonical text: terms in canonical order, "p/q" rationals, explicit
    // "*" between a non-unit coefficient and the variable power.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& t : terms_) {
            bool neg = false;
            std::string body;
            if constexpr (std::is_same_v<K, Rational>) {
                neg = t.coeff.sign() < 0;
                Rational a = t.coeff.abs();
                if (t.exp == 0) {
                    body = a.to_string();
                } else {
                    if (!a.is_one()) body = a.to_string() + "*";
                    body += var_;
                    if (t.exp != 1) body += "^" + std::to_string(t.exp);
                }
            } else {
                // quotient-ring coefficients carry no sign; parenthesize
                if (t.exp == 0) {
                    body = "(" + t.coeff.to_text() + ")";
                } else {
                    if (!t.coeff.is_one()) body = "(" + t.coeff.to_text() + ")*";
                    body += var_;
                    if (t.exp != 1) body += "^" + std::to_string(t.exp);
                }
            }
            if (first) {
                if (neg) s += "-";
                first = false;
            } else {
                s += neg ? " - " : " + ";
            }
            s += body;
        }
        return s;
    }

private:
    std::string var_;
    std::vector<Term> terms_;

    static void check_compatible(const UniPoly& a, const UniPoly& b) {
        if (a.var_ != b.var_)
            throw IncompatibleRings("polynomials in different variables: " + a.var_ + " vs " + b.var_);
    }

    template <class K2>
    friend class UniPoly;
};

template <class K>
UniPoly<K> one_like(const UniPoly<K>& p) {
    if (!p.is_zero()) return UniPoly<K>::constant(p.var(), one_like(p.terms().front().coeff));
    if constexpr (std::is_same_v<K, Rational>) return UniPoly<K>::constant(p.var(), Rational(1));
    else
        throw ZeroOperand("cannot infer coefficient ring from an empty polynomial");
}

template <class K>
UniPoly<K> zero_like(const UniPoly<K>& p) {
    return UniPoly<K>::zero(p.var());
}

// ---------------------------------------------------------------------------
// integer form of rational-coefficient polynomials (dense, ascending)

namespace detail {

struct IntegerForm {
    std::vector<BigInt> coeffs;  // ascending, primitive (content removed)
    Rational content;            // original = content * primitive
};

inline IntegerForm to_primitive_integer(const UniPoly<Rational>& p) {
    IntegerForm out;
    if (p.is_zero()) {
        out.content = Rational();
        return out;
    }
    BigInt den_lcm(1);
    for (const auto& t : p.terms()) {
        const BigInt& d = t.coeff.denominator();
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    out.coeffs.assign(static_cast<std::size_t>(p.degree()) + 1, BigInt());
    BigInt content_num;
    for (const auto& t : p.terms()) {
        BigInt c = t.coeff.numerator() * (den_lcm / t.coeff.denominator());
        content_num = gcd(content_num, c);
        out.coeffs[static_cast<std::size_t>(t.exp)] = std::move(c);
    }
    if (!content_num.is_one())
        for (auto& c : out.coeffs)
            if (!c.is_zero()) c = c / content_num;
    int lead_sign = out.coeffs.back().sign();
    if (lead_sign < 0) {
        for (auto& c : out.coeffs) c = -c;
        content_num = -content_num;
    }
    out.content = Rational(content_num, den_lcm);
    return out;
}

inline UniPoly<Rational> from_integer(const std::string& var, const std::vector<BigInt>& coeffs) {
    std::vector<UniPoly<Rational>::Term> ts;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) ts.push_back({static_cast<long long>(i), Rational(coeffs[i], BigInt(1))});
    return UniPoly<Rational>::from_terms(var, std::move(ts));
}

inline long long ideg(const std::vector<BigInt>& f) { return static_cast<long long>(f.size()) - 1; }

inline void itrim(std::vector<BigInt>& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

inline void make_primitive(std::vector<BigInt>& f) {
    BigInt g;
    for (const auto& c : f) g = gcd(g, c);
    if (g.is_zero() || g.is_one()) {
    } else {
        for (auto& c : f)
            if (!c.is_zero()) c = c / g;
    }
    if (!f.empty() && f.back().sign() < 0)
        for (auto& c : f) c = -c;
}

// pseudo-remainder of a by b (b nonzero, deg a >= deg b); scales the
// remainder-in-progress by lc(b) at each step
inline std::vector<BigInt> prem(std::vector<BigInt> r, const std::vector<BigInt>& b) {
    const BigInt& lb = b.back();
    const long long db = ideg(b);
    while (ideg(r) >= db && !r.empty()) {
        BigInt lr = r.back();
        std::size_t off = r.size() - b.size();
        for (auto& c : r) c = c * lb;
        for (std::size_t i = 0; i < b.size(); ++i) r[off + i] = r[off + i] - lr * b[i];
        itrim(r);
    }
    return r;
}

// gcd of primitive integer polynomials via the primitive PRS, with a
// small-prime precheck that certifies coprime pairs without any big
// coefficient work
inline std::vector<BigInt> gcd_primitive(std::vector<BigInt> a, std::vector<BigInt> b) {
    if (ideg(a) < ideg(b)) std::swap(a, b);
    if (ideg(b) == 0) return {BigInt(1)};
    int tried = 0;
    for (int pi = 0; pi < zmod::kPrimeCount && tried < 3; ++pi) {
        zmod::Poly pa, pb;
        if (!zmod::project(a, zmod::kPrimes[pi], pa) || !zmod::project(b, zmod::kPrimes[pi], pb))
            continue;
        ++tried;
        if (zmod::deg(zmod::gcd(pa, pb, zmod::kPrimes[pi])) == 0) return {BigInt(1)};
    }
    while (true) {
        std::vector<BigInt> r = prem(a, b);
        if (r.empty()) return b;
        if (ideg(r) == 0) return {BigInt(1)};
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
        if (ideg(a) < ideg(b)) std::swap(a, b);
    }
}

}  // namespace detail

// Monic gcd. Over Q the computation clears denominators and runs a
// primitive-PRS on integer polynomials; over other coefficient fields it is
// the Euclidean algorithm (inversions there may surface ZeroDivisor).
// gcd(0, 0) = 0.
template <class K>
UniPoly<K> gcd(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.var() != b.var())
        throw IncompatibleRings("gcd of polynomials in different variables");
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    if constexpr (std::is_same_v<K, Rational>) {
        auto fa = detail::to_primitive_integer(a);
        auto fb = detail::to_primitive_integer(b);
        auto g = detail::gcd_primitive(std::move(fa.coeffs), std::move(fb.coeffs));
        return detail::from_integer(a.var(), g).monic();
    } else {
        UniPoly<K> A = a, B = b;
        while (!B.is_zero()) {
            UniPoly<K> r = divrem(A, B).second;
            A = std::move(B);
            B = std::move(r);
        }
        return A.monic();
    }
}

// Monic product of the distinct irreducible factors: p / gcd(p, p').
template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& p) {
    if (p.is_zero()) throw ZeroOperand("squarefree part of zero polynomial");
    if (p.degree() == 0) return one_like(p);
    UniPoly<K> g = gcd(p, p.derivative());
    return exact_div(p, g).monic();
}

}  // namespace unicrit
