// Resultants by subresultant pseudo-remainder chains over an arbitrary
// coefficient ring R (here R is typically K[C]). resultant_x(a, b) eliminates
// X from a pair of bivariate polynomials: it is the determinant of the
// Sylvester arrangement whose top block holds b's coefficient rows, and it
// vanishes at c exactly when a(., c) and b(., c) share a root in the
// algebraic closure.
#pragma once

#include <vector>

#include "unicrit/bipoly.hpp"
#include "unicrit/unipoly.hpp"

namespace unicrit {
namespace detail {

template <class R>
void dense_trim(std::vector<R>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class R>
long long dense_deg(const std::vector<R>& p) {
    return static_cast<long long>(p.size()) - 1;
}

// pseudo-remainder: prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b
template <class R>
std::vector<R> dense_prem(std::vector<R> r, const std::vector<R>& b) {
    const R& lb = b.back();
    const long long db = dense_deg(b);
    while (!r.empty() && dense_deg(r) >= db) {
        R lr = r.back();
        std::size_t off = r.size() - b.size();
        for (auto& c : r) c = c * lb;
        for (std::size_t i = 0; i < b.size(); ++i) r[off + i] = r[off + i] - lr * b[i];
        dense_trim(r);
    }
    return r;
}

}  // namespace detail

// Resultant of dense polynomials over R in the product-of-roots convention
// Res(A, B) = lc(A)^deg(B) * prod B(alpha_i). Computed with the subresultant
// chain, so every division below is exact in R.
template <class R>
R resultant_dense(std::vector<R> A, std::vector<R> B, const R& one) {
    detail::dense_trim(A);
    detail::dense_trim(B);
    if (A.empty() || B.empty()) throw ZeroOperand("resultant of a zero polynomial");
    int s = 1;
    if (detail::dense_deg(A) < detail::dense_deg(B)) {
        if ((detail::dense_deg(A) & 1) && (detail::dense_deg(B) & 1)) s = -s;
        std::swap(A, B);
    }
    if (detail::dense_deg(B) == 0)
        return generic_pow(B[0], static_cast<unsigned long long>(detail::dense_deg(A)));
    R g = one, h = one;
    while (true) {
        const long long da = detail::dense_deg(A), db = detail::dense_deg(B);
        const long long delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        std::vector<R> rem = detail::dense_prem(A, B);
        A = std::move(B);
        if (rem.empty()) return zero_like(one);  // common factor of positive degree
        R denom = g * generic_pow(h, static_cast<unsigned long long>(delta));
        B = std::move(rem);
        for (auto& c : B) c = exact_div(c, denom);
        g = A.back();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = exact_div(generic_pow(g, static_cast<unsigned long long>(delta)),
                          generic_pow(h, static_cast<unsigned long long>(delta - 1)));
        if (detail::dense_deg(B) == 0) {
            const long long dA = detail::dense_deg(A);
            R num = generic_pow(B[0], static_cast<unsigned long long>(dA));
            R res = dA <= 1
                        ? num
                        : exact_div(num, generic_pow(h, static_cast<unsigned long long>(dA - 1)));
            return s < 0 ? -res : res;
        }
    }
}

// Res_X with the second argument's rows on top of the Sylvester matrix:
// resultant_x(a, b) = Res(b, a) in the convention above.
template <class K>
UniPoly<K> resultant_x(const BiPoly<K>& a, const BiPoly<K>& b) {
    if (a.is_zero() || b.is_zero()) throw ZeroOperand("resultant of a zero polynomial");
    auto columns = [](const BiPoly<K>& p) {
        std::vector<UniPoly<K>> cols(static_cast<std::size_t>(p.degree_x()) + 1,
                                     UniPoly<K>::zero("C"));
        std::vector<std::vector<typename UniPoly<K>::Term>> raw(cols.size());
        for (const auto& t : p.terms()) raw[static_cast<std::size_t>(t.ex)].push_back({t.ec, t.coeff});
        for (std::size_t i = 0; i < cols.size(); ++i)
            cols[i] = UniPoly<K>::from_terms("C", std::move(raw[i]));
        return cols;
    };
    const K& exemplar = a.terms().front().coeff;
    UniPoly<K> one = UniPoly<K>::constant("C", one_like(exemplar));
    return resultant_dense(columns(b), columns(a), one);
}

}  // namespace unicrit
