#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "fockcat/bigint.hpp"

namespace fockcat {

/// Exact rational number. Always reduced; denominator positive.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(Integer num, Natural den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    Rational(std::int64_t num, std::uint64_t den)
        : num_(num), den_(den) { reduce(); }

    /// Parses "p/q", "p", or "-p/q".
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(Integer::from_decimal(s), Natural(1));
        return Rational(Integer::from_decimal(s.substr(0, slash)),
                        Natural::from_decimal(s.substr(slash + 1)));
    }

    const Integer& num() const { return num_; }
    const Natural& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_integer() const { return den_ == Natural(1); }
    bool is_unit_fraction() const { return num_ == Integer(1); }

    double to_double() const { return num_.to_double() / den_.to_double(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * Integer(b.den_) + b.num_ * Integer(a.den_), a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * Integer(b.den_) - b.num_ * Integer(a.den_), a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        Integer num = a.num_ * Integer(b.den_);
        Natural den = a.den_ * b.num_.magnitude();
        if (b.num_.is_negative()) num = num.negated();
        return Rational(std::move(num), std::move(den));
    }
    Rational negated() const { return Rational(num_.negated(), den_); }
    Rational reciprocal() const { return Rational(1) / *this; }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    static int compare(const Rational& a, const Rational& b) {
        return Integer::compare(a.num_ * Integer(b.den_), b.num_ * Integer(a.den_));
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

    static Rational pow(const Rational& base, std::uint64_t e) {
        Rational r(1), b = base;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    static Rational from_natural(const Natural& n) { return Rational(Integer(n), Natural(1)); }

    /// Exact integer part; throws if not an integer.
    Natural to_natural() const {
        if (!is_integer() || is_negative()) throw std::domain_error("Rational: not a natural number");
        return num_.magnitude();
    }

    std::string to_string() const {
        if (is_integer()) return num_.to_decimal();
        return num_.to_decimal() + "/" + den_.to_decimal();
    }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = Natural(1);
            return;
        }
        Natural g = Natural::gcd(num_.magnitude(), den_);
        if (g != Natural(1)) {
            num_ = Integer(num_.magnitude() / g, num_.is_negative());
            den_ = den_ / g;
        }
    }

    Integer num_;
    Natural den_;
};

}  // namespace fockcat
