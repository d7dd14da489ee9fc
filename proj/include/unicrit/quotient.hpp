// Quotient rings Q[t]/(m(t)) and their elements. Irreducibility of the
// modulus is asserted by the caller, not verified; inversion detects any lie
// exactly when it matters and reports the discovered factor of the modulus.
#pragma once

#include <memory>
#include <string>
#include <utility>

#include "unicrit/unipoly.hpp"

namespace unicrit {

class QuotientRing;
using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

class QuotientElement;

class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
public:
    static QuotientRingPtr make(UniPoly<Rational> modulus, bool irreducibility_asserted) {
        if (modulus.degree() < 1) throw ZeroOperand("quotient modulus must have degree >= 1");
        if (!modulus.is_monic()) throw IncompatibleRings("quotient modulus must be monic");
        return QuotientRingPtr(new QuotientRing(std::move(modulus), irreducibility_asserted));
    }

    const UniPoly<Rational>& modulus() const { return modulus_; }
    bool irreducibility_asserted() const { return asserted_; }
    long long degree() const { return modulus_.degree(); }

    QuotientElement element(UniPoly<Rational> rep) const;
    QuotientElement from_rational(const Rational& c) const;
    QuotientElement zero() const;
    QuotientElement one() const;
    QuotientElement generator() const;  // the class of t

    friend bool same_ring(const QuotientRingPtr& a, const QuotientRingPtr& b) {
        if (a.get() == b.get()) return true;
        if (!a || !b) return false;
        return a->modulus_ == b->modulus_;
    }

private:
    QuotientRing(UniPoly<Rational> modulus, bool asserted)
        : modulus_(std::move(modulus)), asserted_(asserted) {}

    UniPoly<Rational> modulus_;
    bool asserted_;
};

// An element of Q[t]/(m). Representative always reduced below deg m.
// A default-constructed element is the zero of an unspecified ring; it is
// absorbed into the other operand's ring on first use (containers need a
// default constructor).
class QuotientElement {
public:
    QuotientElement() = default;

    QuotientElement(QuotientRingPtr ring, UniPoly<Rational> rep) : ring_(std::move(ring)) {
        if (!ring_) throw IncompatibleRings("quotient element without a ring");
        rep_ = divrem(rep.with_var(ring_->modulus().var()), ring_->modulus()).second;
    }

    const QuotientRingPtr& ring() const { return ring_; }
    const UniPoly<Rational>& rep() const { return rep_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.is_one(); }

    friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
        if (!a.ring_ || !b.ring_) return a.rep_.is_zero() && b.rep_.is_zero();
        if (!same_ring(a.ring_, b.ring_)) return false;
        return a.rep_ == b.rep_;
    }

    friend QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
        if (!a.ring_) return b;  // ringless elements are always zero
        if (!b.ring_) return a;
        check_same(a, b);
        return raw(a.ring_, a.rep_ + b.rep_);
    }

    friend QuotientElement operator-(const QuotientElement& a, const QuotientElement& b) {
        return a + (-b);
    }

    QuotientElement operator-() const {
        QuotientElement r = *this;
        r.rep_ = -r.rep_;
        return r;
    }

    friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
        if (!a.ring_) return a;
        if (!b.ring_) return b;
        check_same(a, b);
        return QuotientElement(a.ring_, a.rep_ * b.rep_);
    }

    // mixed scalar ops: rationals embed as constant representatives
    friend QuotientElement operator+(const QuotientElement& a, const Rational& c) {
        return a + a.embed(c);
    }
    friend QuotientElement operator+(const Rational& c, const QuotientElement& a) { return a + c; }
    friend QuotientElement operator-(const QuotientElement& a, const Rational& c) {
        return a - a.embed(c);
    }
    friend QuotientElement operator*(const QuotientElement& a, const Rational& c) {
        QuotientElement r = a;
        r.rep_ = r.rep_.scaled(c);
        return r;
    }
    friend QuotientElement operator*(const Rational& c, const QuotientElement& a) { return a * c; }

    QuotientElement times_int(long long k) const {
        QuotientElement r = *this;
        r.rep_ = r.rep_.scaled(Rational(k));
        return r;
    }

    // Inverse via the extended Euclidean algorithm in Q[t]. When the
    // representative is not coprime to the modulus the discovered factor is
    // reported through ZeroDivisor.
    QuotientElement inverse() const {
        if (!ring_ || rep_.is_zero()) throw ZeroOperand("inverse of zero in quotient ring");
        const UniPoly<Rational>& m = ring_->modulus();
        UniPoly<Rational> r0 = m, r1 = rep_;
        UniPoly<Rational> t0 = UniPoly<Rational>::zero(m.var());
        UniPoly<Rational> t1 = UniPoly<Rational>::constant(m.var(), Rational(1));
        while (!r1.is_zero()) {
            auto [q, r2] = divrem(r0, r1);
            UniPoly<Rational> t2 = t0 - q * t1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.degree() > 0) throw ZeroDivisor(r0.monic().to_string());
        // r0 is a nonzero constant: t0 * rep == r0 (mod m)
        return raw(ring_, t0.scaled(r0.leading_coeff().inverse()));
    }

    std::string to_text() const { return rep_.to_string(); }

private:
    QuotientRingPtr ring_;
    UniPoly<Rational> rep_;

    static QuotientElement raw(QuotientRingPtr ring, UniPoly<Rational> rep) {
        QuotientElement e;
        e.ring_ = std::move(ring);
        e.rep_ = std::move(rep);
        return e;
    }

    QuotientElement embed(const Rational& c) const {
        if (!ring_) throw IncompatibleRings("cannot embed a rational into a null ring");
        return raw(ring_, UniPoly<Rational>::constant(rep_.var(), c));
    }

    static void check_same(const QuotientElement& a, const QuotientElement& b) {
        if (!same_ring(a.ring_, b.ring_))
            throw IncompatibleRings("quotient elements from different rings");
    }

    friend QuotientElement zero_like(const QuotientElement& x);
    friend QuotientElement one_like(const QuotientElement& x);
};

inline QuotientElement zero_like(const QuotientElement& x) {
    if (!x.ring_) return QuotientElement();
    return x.ring_->zero();
}

inline QuotientElement one_like(const QuotientElement& x) {
    if (!x.ring_) throw IncompatibleRings("cannot infer ring for the unit element");
    return x.ring_->one();
}

inline QuotientElement QuotientRing::element(UniPoly<Rational> rep) const {
    return QuotientElement(shared_from_this(), std::move(rep));
}

inline QuotientElement QuotientRing::from_rational(const Rational& c) const {
    return QuotientElement(shared_from_this(), UniPoly<Rational>::constant(modulus_.var(), c));
}

inline QuotientElement QuotientRing::zero() const { return from_rational(Rational()); }
inline QuotientElement QuotientRing::one() const { return from_rational(Rational(1)); }

inline QuotientElement QuotientRing::generator() const {
    return QuotientElement(shared_from_this(),
                           UniPoly<Rational>::monomial(modulus_.var(), 1, Rational(1)));
}

}  // namespace unicrit
