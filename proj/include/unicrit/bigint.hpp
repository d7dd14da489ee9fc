// Arbitrary-precision signed integers. Sign-magnitude with base-2^32 limbs,
// little-endian, magnitude never carries trailing zero limbs. Built from
// scratch: the rest of the library needs exact arithmetic with unbounded
// coefficient growth and no external bignum dependency.
#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unicrit/errors.hpp"

namespace unicrit {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {  // NOLINT(google-explicit-constructor)
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on LLONG_MIN
        std::uint64_t m = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        mag_.push_back(static_cast<std::uint32_t>(m));
        if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
    }

    explicit BigInt(std::string_view s) { *this = parse(s); }

    static BigInt parse(std::string_view s) {
        std::size_t pos = 0;
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -1;
            ++pos;
        }
        if (pos >= s.size()) throw ParseError("empty integer literal", std::string(s));
        BigInt r;
        std::uint32_t chunk = 0;
        int chunk_len = 0;
        for (; pos < s.size(); ++pos) {
            char c = s[pos];
            if (c < '0' || c > '9') throw ParseError("invalid digit in integer literal", std::string(1, c));
            chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
            if (++chunk_len == 9) {
                r.mul_small_add(1000000000u, chunk);
                chunk = 0;
                chunk_len = 0;
            }
        }
        if (chunk_len > 0) {
            std::uint32_t p10 = 1;
            for (int i = 0; i < chunk_len; ++i) p10 *= 10;
            r.mul_small_add(p10, chunk);
        }
        if (!r.mag_.empty()) r.sign_ = sign;
        return r;
    }

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_neg_one() const { return sign_ == -1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_odd() const { return !mag_.empty() && (mag_[0] & 1u); }

    // Number of bits in the magnitude; 0 for zero.
    std::size_t bit_length() const {
        if (mag_.empty()) return 0;
        return mag_.size() * 32 - static_cast<std::size_t>(std::countl_zero(mag_.back()));
    }

    bool fits_slonglong() const { return bit_length() <= 62; }
    long long to_longlong() const {
        std::uint64_t v = 0;
        if (mag_.size() > 2) throw MathError("BigInt too large for long long");
        if (mag_.size() >= 1) v = mag_[0];
        if (mag_.size() == 2) v |= static_cast<std::uint64_t>(mag_[1]) << 32;
        if (v >> 63) throw MathError("BigInt too large for long long");
        return sign_ < 0 ? -static_cast<long long>(v) : static_cast<long long>(v);
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = ucmp(a.mag_, b.mag_);
        if (a.sign_ < 0) c = -c;
        return c <=> 0;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = uadd(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = ucmp(a.mag_, b.mag_);
            if (c == 0) return r;
            if (c > 0) {
                r.mag_ = usub(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = usub(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.sign_ == 0 || b.sign_ == 0) return r;
        r.mag_ = umul(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    // Truncated division: quotient rounds toward zero, remainder keeps the
    // sign of the dividend; |r| < |b| and a = q*b + r exactly.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw ZeroOperand("division by zero");
        int c = ucmp(a.mag_, b.mag_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<std::uint32_t> qm, rm;
        udivmod(a.mag_, b.mag_, qm, rm);
        q = BigInt();
        r = BigInt();
        if (!qm.empty()) {
            q.mag_ = std::move(qm);
            q.sign_ = a.sign_ * b.sign_;
        }
        if (!rm.empty()) {
            r.mag_ = std::move(rm);
            r.sign_ = a.sign_;
        }
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    // Shift by whole bits (magnitude only; sign preserved).
    BigInt shifted_left(std::size_t bits) const {
        if (is_zero() || bits == 0) return *this;
        BigInt r;
        r.sign_ = sign_;
        std::size_t limbs = bits / 32, rem = bits % 32;
        r.mag_.assign(limbs, 0u);
        if (rem == 0) {
            r.mag_.insert(r.mag_.end(), mag_.begin(), mag_.end());
        } else {
            std::uint32_t carry = 0;
            for (std::uint32_t w : mag_) {
                r.mag_.push_back((w << rem) | carry);
                carry = static_cast<std::uint32_t>(static_cast<std::uint64_t>(w) >> (32 - rem));
            }
            if (carry) r.mag_.push_back(carry);
        }
        return r;
    }

    BigInt shifted_right(std::size_t bits) const {
        if (is_zero()) return *this;
        std::size_t limbs = bits / 32, rem = bits % 32;
        if (limbs >= mag_.size()) return BigInt();
        BigInt r;
        r.mag_.assign(mag_.begin() + static_cast<std::ptrdiff_t>(limbs), mag_.end());
        if (rem != 0) {
            std::uint32_t carry = 0;
            for (std::size_t i = r.mag_.size(); i-- > 0;) {
                std::uint32_t w = r.mag_[i];
                r.mag_[i] = (w >> rem) | carry;
                carry = static_cast<std::uint32_t>(static_cast<std::uint64_t>(w) << (32 - rem));
            }
            trim(r.mag_);
        }
        if (!r.mag_.empty()) r.sign_ = sign_;
        return r;
    }

    std::size_t trailing_zero_bits() const {
        if (is_zero()) return 0;
        std::size_t i = 0;
        while (mag_[i] == 0) ++i;
        return i * 32 + static_cast<std::size_t>(std::countr_zero(mag_[i]));
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        // binary gcd
        std::size_t za = a.trailing_zero_bits(), zb = b.trailing_zero_bits();
        std::size_t shift = std::min(za, zb);
        a = a.shifted_right(za);
        b = b.shifted_right(zb);
        while (true) {
            int c = ucmp(a.mag_, b.mag_);
            if (c == 0) break;
            if (c < 0) std::swap(a, b);
            a.mag_ = usub(a.mag_, b.mag_);
            a = a.shifted_right(a.trailing_zero_bits());
        }
        return a.shifted_left(shift);
    }

    static BigInt pow(const BigInt& base, unsigned long long e) {
        BigInt r(1), b = base;
        while (e) {
            if (e & 1ull) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
                rem = cur % 1000000000ull;
            }
            trim(m);
            char buf[10];
            for (int i = 0; i < 9; ++i) {
                buf[i] = static_cast<char>('0' + rem % 10);
                rem /= 10;
            }
            digits.append(buf, 9);
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out;
        if (sign_ < 0) out.push_back('-');
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void mul_small_add(std::uint32_t mul, std::uint32_t add) {
        std::uint64_t carry = add;
        for (auto& w : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(w) * mul + carry;
            w = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int ucmp(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> uadd(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r;
        r.reserve(big.size() + 1);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
            r.push_back(static_cast<std::uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires a >= b
    static std::vector<std::uint32_t> usub(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r;
        r.reserve(a.size());
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = 0;
            if (cur < 0) {
                cur += (1ll << 32);
                borrow = 1;
            }
            r.push_back(static_cast<std::uint32_t>(cur));
        }
        trim(r);
        return r;
    }

    static std::vector<std::uint32_t> umul(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
        // dedicated single-limb paths; these dominate polynomial work
        if (a.size() == 1) return umul_small(b, a[0]);
        if (b.size() == 1) return umul_small(a, b[0]);
        std::vector<std::uint32_t> r(a.size() + b.size(), 0u);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(r[i + j]) + ai * b[j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r[i + b.size()] = static_cast<std::uint32_t>(carry);
        }
        trim(r);
        return r;
    }

    static std::vector<std::uint32_t> umul_small(const std::vector<std::uint32_t>& a, std::uint32_t m) {
        std::vector<std::uint32_t> r;
        r.reserve(a.size() + 1);
        std::uint64_t carry = 0;
        for (std::uint32_t w : a) {
            std::uint64_t cur = static_cast<std::uint64_t>(w) * m + carry;
            r.push_back(static_cast<std::uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        trim(r);
        return r;
    }

    // Knuth algorithm D; requires |a| >= |b|, b nonzero.
    static void udivmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        if (b.size() == 1) {
            q.assign(a.size(), 0u);
            std::uint64_t rem = 0;
            for (std::size_t i = a.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<std::uint32_t>(cur / b[0]);
                rem = cur % b[0];
            }
            trim(q);
            r.clear();
            if (rem) r.push_back(static_cast<std::uint32_t>(rem));
            return;
        }
        const std::size_t n = b.size(), m = a.size() - n;
        const int shift = std::countl_zero(b.back());
        // normalized copies
        std::vector<std::uint32_t> u(a.size() + 1, 0u), v(n);
        if (shift == 0) {
            std::copy(a.begin(), a.end(), u.begin());
            v = b;
        } else {
            std::uint32_t carry = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                u[i] = (a[i] << shift) | carry;
                carry = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[i]) >> (32 - shift));
            }
            u[a.size()] = carry;
            carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                v[i] = (b[i] << shift) | carry;
                carry = static_cast<std::uint32_t>(static_cast<std::uint64_t>(b[i]) >> (32 - shift));
            }
        }
        q.assign(m + 1, 0u);
        const std::uint64_t vtop = v[n - 1], vsecond = v[n - 2];
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qhat = num / vtop, rhat = num % vtop;
            while (qhat >> 32 || qhat * vsecond > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += vtop;
                if (rhat >> 32) break;
            }
            // multiply and subtract
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(u[i + j]) - borrow -
                                 static_cast<std::int64_t>(p & 0xffffffffull);
                borrow = 0;
                if (t < 0) {
                    t += (1ll << 32);
                    borrow = 1;
                }
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) - borrow - static_cast<std::int64_t>(carry);
            if (t < 0) {
                // qhat was one too large: add back
                t += (1ll << 32);
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<std::uint32_t>(cur);
                    c2 = cur >> 32;
                }
                t += static_cast<std::int64_t>(c2);
                t &= 0xffffffffll;
            }
            u[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        trim(q);
        r.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
        if (shift) {
            std::uint32_t carry = 0;
            for (std::size_t i = r.size(); i-- > 0;) {
                std::uint32_t w = r[i];
                r[i] = (w >> shift) | carry;
                carry = static_cast<std::uint32_t>(static_cast<std::uint64_t>(w) << (32 - shift));
            }
        }
        trim(r);
    }
};

inline BigInt gcd(const BigInt& a, const BigInt& b) { return BigInt::gcd(a, b); }
inline BigInt pow(const BigInt& b, unsigned long long e) { return BigInt::pow(b, e); }

}  // namespace unicrit
