// Bivariate polynomials in X and C, stored sparse-by-term in canonical order
// (lexicographic, X-exponent major, descending), no zero terms. As with
// UniPoly, structural equality is mathematical equality. The substitution
// X -> X^d + C is the workhorse of iterate and generalized-dynatomic
// construction and uses the binomial theorem with an incrementally grown
// Pascal row rather than repeated polynomial products.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "unicrit/unipoly.hpp"

namespace unicrit {

template <class K>
class BiPoly {
public:
    struct Term {
        int ex, ec;
        K coeff;
    };

    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }

    static BiPoly constant(K c) { return monomial(0, 0, std::move(c)); }

    static BiPoly monomial(int ex, int ec, K c) {
        BiPoly p;
        if (!c.is_zero()) p.terms_.push_back({ex, ec, std::move(c)});
        return p;
    }

    static BiPoly from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return key_of(a) > key_of(b); });
        BiPoly p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().ex == t.ex && p.terms_.back().ec == t.ec)
                p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
            else
                p.terms_.push_back(std::move(t));
        }
        std::erase_if(p.terms_, [](const Term& t) { return t.coeff.is_zero(); });
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    long long degree_x() const {
        if (terms_.empty()) return kNegInfinity;
        return terms_.front().ex;  // canonical order: X-major descending
    }

    long long degree_c() const {
        if (terms_.empty()) return kNegInfinity;
        long long d = 0;
        for (const auto& t : terms_)
            if (t.ec > d) d = t.ec;
        return d;
    }

    // monic in X: the coefficient of X^degX (a polynomial in C) is 1
    bool is_monic_x() const {
        return !terms_.empty() && terms_.front().ec == 0 && terms_.front().coeff.is_one();
    }

    // monic in C: the coefficient of C^degC (a polynomial in X) is 1
    bool is_monic_c() const {
        if (terms_.empty()) return false;
        long long dc = degree_c();
        const Term* found = nullptr;
        for (const auto& t : terms_)
            if (t.ec == dc) {
                if (found) return false;
                found = &t;
            }
        return found->ex == 0 && found->coeff.is_one();
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            const Term &x = a.terms_[i], &y = b.terms_[i];
            if (x.ex != y.ex || x.ec != y.ec || !(x.coeff == y.coeff)) return false;
        }
        return true;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() && key_of(a.terms_[i]) > key_of(b.terms_[j]))) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || key_of(b.terms_[j]) > key_of(a.terms_[i])) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                K c = a.terms_[i].coeff + b.terms_[j].coeff;
                if (!c.is_zero()) r.terms_.push_back({a.terms_[i].ex, a.terms_[i].ec, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

    BiPoly operator-() const {
        BiPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.ex, t.ec, -t.coeff});
        return r;
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return BiPoly();
        std::unordered_map<std::uint64_t, K> acc;
        acc.reserve(a.terms_.size() + b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                auto [it, fresh] = acc.try_emplace(key(ta.ex + tb.ex, ta.ec + tb.ec), K());
                it->second = it->second + ta.coeff * tb.coeff;
            }
        return from_map(std::move(acc));
    }

    BiPoly scaled(const K& c) const {
        BiPoly r;
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            K v = t.coeff * c;
            if (!v.is_zero()) r.terms_.push_back({t.ex, t.ec, std::move(v)});
        }
        return r;
    }

    // formal partial derivative; var is 'X' or 'C'
    BiPoly derivative(char var) const {
        BiPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            int e = var == 'X' ? t.ex : t.ec;
            if (e == 0) continue;
            K c = t.coeff.times_int(e);
            if (c.is_zero()) continue;
            if (var == 'X')
                r.terms_.push_back({t.ex - 1, t.ec, std::move(c)});
            else
                r.terms_.push_back({t.ex, t.ec - 1, std::move(c)});
        }
        return r;
    }

    // Exact division over the coefficient field; throws NotDivisible when the
    // quotient would have a remainder. The common case (divisor monic in X
    // with constant leading coefficient) is handled column-by-column.
    friend BiPoly exact_div(const BiPoly& num, const BiPoly& den) {
        if (den.is_zero()) throw ZeroOperand("exact division by zero polynomial");
        if (num.is_zero()) return BiPoly();
        if (den.terms_.size() == 1 && den.terms_[0].ex == 0 && den.terms_[0].ec == 0)
            return num.scaled(den.terms_[0].coeff.inverse());
        if (den.terms_.front().ec == 0) return divide_columns(num, den);
        return divide_lex(num, den);
    }

    // substitute X -> X^d + C (binomial expansion)
    BiPoly substitute_zd_plus_c(int d) const {
        std::unordered_map<std::uint64_t, K> acc;
        acc.reserve(terms_.size() * 2);
        std::vector<BigInt> row{BigInt(1)};  // Pascal row for current i
        int cur = 0;
        // ascend in X-exponent so the Pascal row only ever grows
        for (std::size_t idx = terms_.size(); idx-- > 0;) {
            const Term& t = terms_[idx];
            while (cur < t.ex) {
                row.push_back(BigInt(1));
                for (std::size_t k = row.size() - 2; k >= 1; --k) row[k] = row[k] + row[k - 1];
                ++cur;
            }
            for (int k = 0; k <= t.ex; ++k) {
                K v = t.coeff * Rational(row[static_cast<std::size_t>(k)], BigInt(1));
                auto [it, fresh] = acc.try_emplace(key(d * (t.ex - k), t.ec + k), K());
                it->second = it->second + v;
            }
        }
        return from_map(std::move(acc));
    }

    // substitute X -> g(X, C) (Horner over X-exponent groups)
    BiPoly substitute_x(const BiPoly& g) const {
        if (terms_.empty()) return BiPoly();
        BiPoly acc;
        long long prev = -1;
        std::size_t i = 0;
        while (i < terms_.size()) {
            int e = terms_[i].ex;
            BiPoly slice;
            while (i < terms_.size() && terms_[i].ex == e) {
                slice.terms_.push_back({0, terms_[i].ec, terms_[i].coeff});
                ++i;
            }
            if (prev < 0)
                acc = std::move(slice);
            else
                acc = acc * generic_pow(g, static_cast<unsigned long long>(prev - e)) + slice;
            prev = e;
        }
        if (prev > 0) acc = acc * generic_pow(g, static_cast<unsigned long long>(prev));
        return acc;
    }

    // substitute X -> u(C); result is univariate in C over K
    UniPoly<K> substitute_x(const UniPoly<K>& u) const {
        UniPoly<K> acc(u.var());
        if (terms_.empty()) return acc;
        long long prev = -1;
        std::size_t i = 0;
        while (i < terms_.size()) {
            int e = terms_[i].ex;
            std::vector<typename UniPoly<K>::Term> ts;
            while (i < terms_.size() && terms_[i].ex == e) {
                ts.push_back({terms_[i].ec, terms_[i].coeff});
                ++i;
            }
            UniPoly<K> slice = UniPoly<K>::from_terms(u.var(), std::move(ts));
            if (prev < 0)
                acc = std::move(slice);
            else
                acc = acc * generic_pow(u, static_cast<unsigned long long>(prev - e)) + slice;
            prev = e;
        }
        if (prev > 0) acc = acc * generic_pow(u, static_cast<unsigned long long>(prev));
        return acc;
    }

    // substitute X -> x (a scalar); result is univariate in C over V
    template <class V>
    UniPoly<V> substitute_x_value(const V& x) const {
        std::vector<V> pw = power_table(x, degree_x());
        std::map<long long, V> acc;
        for (const auto& t : terms_) {
            V v = pw[static_cast<std::size_t>(t.ex)] * t.coeff;
            auto [it, fresh] = acc.try_emplace(static_cast<long long>(t.ec), V());
            it->second = it->second + v;
        }
        std::vector<typename UniPoly<V>::Term> ts;
        for (auto& [e, c] : acc) ts.push_back({e, std::move(c)});
        return UniPoly<V>::from_terms("C", std::move(ts));
    }

    // substitute C -> c (a scalar); result is univariate in X over V
    template <class V>
    UniPoly<V> substitute_c_value(const V& c) const {
        std::vector<V> pw = power_table(c, degree_c());
        std::map<long long, V> acc;
        for (const auto& t : terms_) {
            V v = pw[static_cast<std::size_t>(t.ec)] * t.coeff;
            auto [it, fresh] = acc.try_emplace(static_cast<long long>(t.ex), V());
            it->second = it->second + v;
        }
        std::vector<typename UniPoly<V>::Term> ts;
        for (auto& [e, c2] : acc) ts.push_back({e, std::move(c2)});
        return UniPoly<V>::from_terms("X", std::move(ts));
    }

    template <class V>
    V eval(const V& x, const V& c) const {
        std::vector<V> px = power_table(x, degree_x());
        std::vector<V> pc = power_table(c, degree_c());
        V acc = zero_like(x);
        for (const auto& t : terms_)
            acc = acc + px[static_cast<std::size_t>(t.ex)] * pc[static_cast<std::size_t>(t.ec)] * t.coeff;
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& t : terms_) {
            bool neg = false;
            std::string body;
            std::string mono;
            if (t.ex > 0) {
                mono += "X";
                if (t.ex != 1) mono += "^" + std::to_string(t.ex);
            }
            if (t.ec > 0) {
                if (!mono.empty()) mono += "*";
                mono += "C";
                if (t.ec != 1) mono += "^" + std::to_string(t.ec);
            }
            if constexpr (std::is_same_v<K, Rational>) {
                neg = t.coeff.sign() < 0;
                Rational a = t.coeff.abs();
                if (mono.empty())
                    body = a.to_string();
                else if (a.is_one())
                    body = mono;
                else
                    body = a.to_string() + "*" + mono;
            } else {
                std::string cs = "(" + t.coeff.to_text() + ")";
                if (mono.empty())
                    body = cs;
                else if (t.coeff.is_one())
                    body = mono;
                else
                    body = cs + "*" + mono;
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
    std::vector<Term> terms_;

    static std::uint64_t key(int ex, int ec) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ex)) << 32) |
               static_cast<std::uint32_t>(ec);
    }
    static std::uint64_t key_of(const Term& t) { return key(t.ex, t.ec); }

    static BiPoly from_map(std::unordered_map<std::uint64_t, K> acc) {
        BiPoly p;
        p.terms_.reserve(acc.size());
        for (auto& [k, c] : acc) {
            if (c.is_zero()) continue;
            p.terms_.push_back(
                {static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffull), std::move(c)});
        }
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [](const Term& a, const Term& b) { return key_of(a) > key_of(b); });
        return p;
    }

    template <class V>
    static std::vector<V> power_table(const V& x, long long maxdeg) {
        std::vector<V> pw;
        pw.push_back(one_like(x));
        for (long long i = 1; i <= maxdeg; ++i) pw.push_back(pw.back() * x);
        return pw;
    }

    // division when the divisor is monic in X with a constant leading
    // coefficient: whole X-columns of the remainder become quotient columns
    static BiPoly divide_columns(const BiPoly& num, const BiPoly& den) {
        const int dx = den.terms_.front().ex;
        K lead_inv = den.terms_.front().coeff.inverse();
        std::map<int, std::unordered_map<int, K>> cols;
        for (const auto& t : num.terms_) cols[t.ex][t.ec] = t.coeff;
        std::vector<Term> q;
        while (!cols.empty()) {
            auto top = std::prev(cols.end());
            int ex = top->first;
            std::erase_if(top->second, [](const auto& kv) { return kv.second.is_zero(); });
            if (top->second.empty()) {
                cols.erase(top);
                continue;
            }
            if (ex < dx) throw NotDivisible("bivariate division left a remainder");
            std::unordered_map<int, K> qcol = std::move(top->second);
            cols.erase(top);
            for (auto& [ec, c] : qcol) c = c * lead_inv;
            for (std::size_t i = 1; i < den.terms_.size(); ++i) {
                const Term& dt = den.terms_[i];
                auto& target = cols[ex - dx + dt.ex];
                for (const auto& [ec, c] : qcol) {
                    auto [it, fresh] = target.try_emplace(ec + dt.ec, K());
                    it->second = it->second - c * dt.coeff;
                }
            }
            for (auto& [ec, c] : qcol) q.push_back({ex - dx, ec, std::move(c)});
        }
        return from_terms(std::move(q));
    }

    // general sparse division in lex order (X major); used only for divisors
    // that are not monic in X
    static BiPoly divide_lex(const BiPoly& num, const BiPoly& den) {
        std::map<std::uint64_t, K, std::greater<>> rem;
        for (const auto& t : num.terms_) rem.emplace(key_of(t), t.coeff);
        const Term& dl = den.terms_.front();
        K dl_inv = dl.coeff.inverse();
        std::vector<Term> q;
        while (!rem.empty()) {
            auto lead = rem.begin();
            int ex = static_cast<int>(lead->first >> 32);
            int ec = static_cast<int>(lead->first & 0xffffffffull);
            if (ex < dl.ex || ec < dl.ec) throw NotDivisible("bivariate division left a remainder");
            Term qt{ex - dl.ex, ec - dl.ec, lead->second * dl_inv};
            rem.erase(lead);
            for (std::size_t i = 1; i < den.terms_.size(); ++i) {
                const Term& dt = den.terms_[i];
                auto [it, fresh] =
                    rem.try_emplace(key(qt.ex + dt.ex, qt.ec + dt.ec), K());
                it->second = it->second - qt.coeff * dt.coeff;
                if (it->second.is_zero()) rem.erase(it);
            }
            q.push_back(std::move(qt));
        }
        return from_terms(std::move(q));
    }
};

template <class K>
BiPoly<K> one_like(const BiPoly<K>& p) {
    if (!p.is_zero()) return BiPoly<K>::constant(one_like(p.terms().front().coeff));
    if constexpr (std::is_same_v<K, Rational>) return BiPoly<K>::constant(Rational(1));
    else
        throw ZeroOperand("cannot infer coefficient ring from an empty polynomial");
}

template <class K>
BiPoly<K> zero_like(const BiPoly<K>&) {
    return BiPoly<K>();
}

using BiPolyQ = BiPoly<Rational>;

}  // namespace unicrit
