#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "fockcat/rational.hpp"

namespace fockcat {

inline constexpr double kTau = 6.283185307179586476925286766559;

/// A phase angle: either an exact number of turns (a rational in [0,1),
/// one turn = 2*pi radians) or a floating-point radian value for arbitrary
/// evolution times. Exact angles stay exact under addition, negation and
/// integer scaling; mixing exact and real demotes to real.
class Angle {
public:
    Angle() : exact_(true), turns_(0) {}

    static Angle turns(Rational t) { return Angle(normalize_turns(std::move(t))); }
    static Angle radians(double r) {
        Angle a(Rational(0));
        a.exact_ = false;
        a.radians_ = r;
        return a;
    }
    static Angle zero() { return Angle(); }
    static Angle half_turn() { return turns(Rational(1, 2)); }
    static Angle quarter_turn() { return turns(Rational(1, 4)); }

    bool is_exact() const { return exact_; }
    bool is_zero() const { return exact_ ? turns_.is_zero() : radians_ == 0.0; }
    const Rational& exact_turns() const { return turns_; }

    double to_radians() const { return exact_ ? kTau * turns_.to_double() : radians_; }

    friend Angle operator+(const Angle& a, const Angle& b) {
        if (a.exact_ && b.exact_) return Angle(normalize_turns(a.turns_ + b.turns_));
        return radians(a.to_radians() + b.to_radians());
    }
    Angle negated() const {
        if (!exact_) return radians(-radians_);
        if (turns_.is_zero()) return Angle();
        return Angle(Rational(1) - turns_);
    }
    Angle scaled(std::uint64_t n) const {
        if (!exact_) return radians(radians_ * static_cast<double>(n));
        return Angle(normalize_turns(turns_ * Rational(static_cast<std::int64_t>(n))));
    }

    /// Canonical ordering: exact before real, then by value. Used only to
    /// canonicalize term lists, not as a geometric comparison.
    static int compare(const Angle& a, const Angle& b) {
        if (a.exact_ != b.exact_) return a.exact_ ? -1 : 1;
        if (a.exact_) return Rational::compare(a.turns_, b.turns_);
        if (a.radians_ != b.radians_) return a.radians_ < b.radians_ ? -1 : 1;
        return 0;
    }
    friend bool operator==(const Angle& a, const Angle& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Angle& a, const Angle& b) { return compare(a, b) != 0; }

    std::string to_string() const {
        if (exact_) return turns_.to_string() + " turns";
        return std::to_string(radians_) + " rad";
    }

private:
    explicit Angle(Rational t) : exact_(true), turns_(std::move(t)) {}

    static Rational normalize_turns(Rational t) {
        // Reduce into [0,1): subtract the floor.
        Natural rem;
        Natural::divmod(t.num().magnitude(), t.den(), rem);
        Rational frac(Integer(rem), t.den());
        if (t.is_negative() && !frac.is_zero()) frac = Rational(1) - frac;
        return frac;
    }

    bool exact_;
    Rational turns_;
    double radians_ = 0.0;
};

}  // namespace fockcat
