// Exact rational scalars. Always stored in lowest terms with positive
// denominator; zero is 0/1.
#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "unicrit/bigint.hpp"
#include "unicrit/errors.hpp"

namespace unicrit {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ZeroOperand("rational with zero denominator");
        normalize();
    }

    // Accepts "p", "p/q", with optional leading sign. Decimal forms are
    // rejected so no input is ever silently rounded.
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        if (s.find('.') != std::string_view::npos)
            throw ParseError("decimal literals are not accepted; use p/q", std::string(s));
        if (slash == std::string_view::npos) return Rational(BigInt::parse(s), BigInt(1));
        return Rational(BigInt::parse(s.substr(0, slash)), BigInt::parse(s.substr(slash + 1)));
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ + b.num_, BigInt(1));
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ - b.num_, BigInt(1));
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return Rational();
        if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ * b.num_, BigInt(1));
        // cross-reduce before multiplying to keep intermediates small
        BigInt g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        BigInt n = (a.num_ / g1) * (b.num_ / g2);
        BigInt d = (a.den_ / g2) * (b.den_ / g1);
        return raw(std::move(n), std::move(d));
    }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

    Rational operator-() const { return raw(-num_, den_); }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    Rational inverse() const {
        if (num_.is_zero()) throw ZeroOperand("reciprocal of zero");
        return num_.sign() > 0 ? raw(den_, num_) : raw(-den_, -num_);
    }

    Rational times_int(long long k) const { return *this * Rational(k); }

    Rational pow(unsigned long long e) const {
        // reduced p/q stays reduced under powering
        return raw(BigInt::pow(num_, e), BigInt::pow(den_, e));
    }

    Rational abs() const { return raw(num_.abs(), den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;

    // bypasses normalization; caller guarantees canonical form
    static Rational raw(BigInt n, BigInt d) {
        Rational r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void normalize() {
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.is_one()) return;
        BigInt g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }

}  // namespace unicrit
