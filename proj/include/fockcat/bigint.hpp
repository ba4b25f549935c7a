#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fockcat {

/// Arbitrary-precision unsigned integer, base 2^32 limbs, little-endian.
/// Invariant: no trailing zero limbs; the empty limb vector is zero.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t v) {
        if (v) {
            limbs_.push_back(static_cast<std::uint32_t>(v));
            if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
        }
    }

    static Natural from_decimal(std::string_view s) {
        Natural r;
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("Natural: bad decimal digit");
            r = mul_small(r, 10);
            r = add(r, Natural(static_cast<std::uint64_t>(c - '0')));
        }
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }

    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const {
        if (!fits_u64()) throw std::overflow_error("Natural: does not fit in 64 bits");
        std::uint64_t v = 0;
        if (limbs_.size() > 0) v = limbs_[0];
        if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
        return v;
    }

    double to_double() const {
        double v = 0;
        for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) v = v * 4294967296.0 + *it;
        return v;
    }

    static int compare(const Natural& a, const Natural& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        return 0;
    }

    static Natural add(const Natural& a, const Natural& b) {
        Natural r;
        const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
        r.limbs_.resize(n);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = carry;
            if (i < a.limbs_.size()) s += a.limbs_[i];
            if (i < b.limbs_.size()) s += b.limbs_[i];
            r.limbs_[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    /// Requires a >= b.
    static Natural sub(const Natural& a, const Natural& b) {
        if (compare(a, b) < 0) throw std::underflow_error("Natural: negative subtraction");
        Natural r;
        r.limbs_.resize(a.limbs_.size());
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                             (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
            borrow = 0;
            if (d < 0) {
                d += (std::int64_t{1} << 32);
                borrow = 1;
            }
            r.limbs_[i] = static_cast<std::uint32_t>(d);
        }
        r.trim();
        return r;
    }

    static Natural mul(const Natural& a, const Natural& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.limbs_.size() + b.limbs_.size() <= 2) return Natural(a.to_u64() * b.to_u64());
        Natural r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] + carry +
                                    static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
        }
        r.trim();
        return r;
    }

    static Natural mul_small(const Natural& a, std::uint32_t m) {
        if (m == 0 || a.is_zero()) return {};
        Natural r;
        r.limbs_.resize(a.limbs_.size());
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * m + carry;
            r.limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    /// Quotient of division by a single limb; remainder returned through rem.
    static Natural divmod_small(const Natural& a, std::uint32_t d, std::uint32_t& rem) {
        if (d == 0) throw std::domain_error("Natural: division by zero");
        Natural q;
        q.limbs_.resize(a.limbs_.size());
        std::uint64_t r = 0;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (r << 32) | a.limbs_[i];
            q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
            r = cur % d;
        }
        rem = static_cast<std::uint32_t>(r);
        q.trim();
        return q;
    }

    /// Long division, bit at a time. Desk-scale operands only.
    static Natural divmod(const Natural& a, const Natural& b, Natural& rem) {
        if (b.is_zero()) throw std::domain_error("Natural: division by zero");
        if (a.fits_u64() && b.fits_u64()) {
            std::uint64_t x = a.to_u64(), y = b.to_u64();
            rem = Natural(x % y);
            return Natural(x / y);
        }
        if (b.limbs_.size() == 1) {
            std::uint32_t r32;
            Natural q = divmod_small(a, b.limbs_[0], r32);
            rem = Natural(r32);
            return q;
        }
        Natural q, r;
        q.limbs_.assign(a.limbs_.size(), 0);
        for (std::size_t bit = a.bit_length(); bit-- > 0;) {
            r = r.shl1();
            if (a.bit(bit)) r.limbs_.empty() ? r.limbs_.push_back(1) : void(r.limbs_[0] |= 1);
            if (compare(r, b) >= 0) {
                r = sub(r, b);
                q.limbs_[bit / 32] |= (std::uint32_t{1} << (bit % 32));
            }
        }
        q.trim();
        rem = r;
        return q;
    }

    static Natural gcd(Natural a, Natural b) {
        while (!b.is_zero()) {
            if (a.fits_u64() && b.fits_u64()) {
                std::uint64_t x = a.to_u64(), y = b.to_u64();
                while (y) {
                    std::uint64_t t = x % y;
                    x = y;
                    y = t;
                }
                return Natural(x);
            }
            Natural r;
            divmod(a, b, r);
            a = b;
            b = r;
        }
        return a;
    }

    static Natural pow(const Natural& base, std::uint64_t e) {
        Natural r(1), b = base;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    std::string to_decimal() const {
        if (is_zero()) return "0";
        Natural t = *this;
        std::string out;
        while (!t.is_zero()) {
            std::uint32_t rem;
            t = divmod_small(t, 1000000000u, rem);
            std::string chunk = std::to_string(rem);
            if (!t.is_zero()) chunk = std::string(9 - chunk.size(), '0') + chunk;
            out = chunk + out;
        }
        return out;
    }

    friend bool operator==(const Natural& a, const Natural& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Natural& a, const Natural& b) { return compare(a, b) != 0; }
    friend bool operator<(const Natural& a, const Natural& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Natural& a, const Natural& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Natural& a, const Natural& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Natural& a, const Natural& b) { return compare(a, b) >= 0; }
    friend Natural operator+(const Natural& a, const Natural& b) { return add(a, b); }
    friend Natural operator-(const Natural& a, const Natural& b) { return sub(a, b); }
    friend Natural operator*(const Natural& a, const Natural& b) { return mul(a, b); }
    friend Natural operator/(const Natural& a, const Natural& b) {
        Natural r;
        return divmod(a, b, r);
    }
    friend Natural operator%(const Natural& a, const Natural& b) {
        Natural r;
        divmod(a, b, r);
        return r;
    }
    Natural& operator+=(const Natural& o) { return *this = add(*this, o); }
    Natural& operator-=(const Natural& o) { return *this = sub(*this, o); }
    Natural& operator*=(const Natural& o) { return *this = mul(*this, o); }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::size_t n = (limbs_.size() - 1) * 32;
        std::uint32_t top = limbs_.back();
        while (top) {
            ++n;
            top >>= 1;
        }
        return n;
    }
    bool bit(std::size_t i) const {
        return i / 32 < limbs_.size() && ((limbs_[i / 32] >> (i % 32)) & 1);
    }
    Natural shl1() const {
        Natural r;
        r.limbs_.resize(limbs_.size());
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            r.limbs_[i] = (limbs_[i] << 1) | carry;
            carry = limbs_[i] >> 31;
        }
        if (carry) r.limbs_.push_back(carry);
        return r;
    }

    std::vector<std::uint32_t> limbs_;
};

inline Natural factorial(std::uint64_t n) {
    Natural r(1);
    for (std::uint64_t i = 2; i <= n; ++i) r = Natural::mul_small(r, static_cast<std::uint32_t>(i));
    return r;
}

inline Natural binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return {};
    if (k > n - k) k = n - k;
    Natural r(1);
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = Natural::mul_small(r, static_cast<std::uint32_t>(n - k + i));
        std::uint32_t rem;
        r = Natural::divmod_small(r, static_cast<std::uint32_t>(i), rem);
    }
    return r;
}

/// Signed arbitrary-precision integer.
class Integer {
public:
    Integer() = default;
    Integer(std::int64_t v)
        : negative_(v < 0),
          mag_(v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v)) {}
    Integer(Natural mag, bool negative = false)
        : negative_(negative && !mag.is_zero()), mag_(std::move(mag)) {}

    static Integer from_decimal(std::string_view s) {
        bool neg = !s.empty() && s.front() == '-';
        if (neg) s.remove_prefix(1);
        return Integer(Natural::from_decimal(s), neg);
    }

    bool is_zero() const { return mag_.is_zero(); }
    bool is_negative() const { return negative_; }
    const Natural& magnitude() const { return mag_; }
    int signum() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    Integer negated() const { return Integer(mag_, !negative_); }

    std::int64_t to_i64() const {
        std::uint64_t m = mag_.to_u64();
        if (negative_) {
            if (m > static_cast<std::uint64_t>(INT64_MAX) + 1) throw std::overflow_error("Integer: i64 overflow");
            return static_cast<std::int64_t>(~m + 1);
        }
        if (m > static_cast<std::uint64_t>(INT64_MAX)) throw std::overflow_error("Integer: i64 overflow");
        return static_cast<std::int64_t>(m);
    }
    double to_double() const { return negative_ ? -mag_.to_double() : mag_.to_double(); }

    static int compare(const Integer& a, const Integer& b) {
        if (a.negative_ != b.negative_) return a.negative_ ? -1 : 1;
        int c = Natural::compare(a.mag_, b.mag_);
        return a.negative_ ? -c : c;
    }

    friend Integer operator+(const Integer& a, const Integer& b) {
        if (a.negative_ == b.negative_) return Integer(a.mag_ + b.mag_, a.negative_);
        int c = Natural::compare(a.mag_, b.mag_);
        if (c == 0) return {};
        return c > 0 ? Integer(a.mag_ - b.mag_, a.negative_) : Integer(b.mag_ - a.mag_, b.negative_);
    }
    friend Integer operator-(const Integer& a, const Integer& b) { return a + b.negated(); }
    friend Integer operator*(const Integer& a, const Integer& b) {
        return Integer(a.mag_ * b.mag_, a.negative_ != b.negative_);
    }
    friend bool operator==(const Integer& a, const Integer& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Integer& a, const Integer& b) { return compare(a, b) != 0; }
    friend bool operator<(const Integer& a, const Integer& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Integer& a, const Integer& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Integer& a, const Integer& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Integer& a, const Integer& b) { return compare(a, b) >= 0; }
    Integer& operator+=(const Integer& o) { return *this = *this + o; }
    Integer& operator-=(const Integer& o) { return *this = *this - o; }
    Integer& operator*=(const Integer& o) { return *this = *this * o; }

    std::string to_decimal() const { return (negative_ ? "-" : "") + mag_.to_decimal(); }

private:
    bool negative_ = false;
    Natural mag_;
};

}  // namespace fockcat
