#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fockcat/angle.hpp"
#include "fockcat/rational.hpp"

namespace fockcat {

/// One summand of a phased scalar: magnitude * e^{i*angle}.
struct PhasedTerm {
    Rational magnitude;
    Angle angle;
};

/// Element of the rig of formal nonnegative-rational combinations of phases.
/// Terms with equal angles are merged; zero-magnitude terms are dropped. The
/// representation is deliberately formal: opposite phases are NOT cancelled
/// here. Cancellation (interference) happens only in the homomorphism h to
/// the complex numbers.
class PhasedScalar {
public:
    PhasedScalar() = default;
    PhasedScalar(Rational magnitude) { // rationals embed with zero phase
        if (!magnitude.is_zero()) terms_.push_back({std::move(magnitude), Angle::zero()});
    }
    PhasedScalar(Rational magnitude, Angle angle) {
        if (!magnitude.is_zero()) terms_.push_back({std::move(magnitude), std::move(angle)});
    }

    static PhasedScalar zero() { return {}; }
    static PhasedScalar one() { return PhasedScalar(Rational(1)); }

    const std::vector<PhasedTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// True when every term has zero phase (so the value is a plain rational).
    bool is_rational() const {
        for (const auto& t : terms_)
            if (!t.angle.is_zero()) return false;
        return true;
    }
    Rational to_rational() const {
        Rational r(0);
        for (const auto& t : terms_) {
            if (!t.angle.is_zero()) throw std::domain_error("PhasedScalar: has nonzero phase");
            r += t.magnitude;
        }
        return r;
    }

    friend PhasedScalar operator+(const PhasedScalar& a, const PhasedScalar& b) {
        PhasedScalar r;
        r.terms_ = a.terms_;
        r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
        r.canonicalize();
        return r;
    }
    friend PhasedScalar operator*(const PhasedScalar& a, const PhasedScalar& b) {
        PhasedScalar r;
        r.terms_.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_)
                r.terms_.push_back({x.magnitude * y.magnitude, x.angle + y.angle});
        r.canonicalize();
        return r;
    }
    PhasedScalar& operator+=(const PhasedScalar& o) { return *this = *this + o; }
    PhasedScalar& operator*=(const PhasedScalar& o) { return *this = *this * o; }

    PhasedScalar scaled(const Rational& m) const {
        if (m.is_negative()) throw std::domain_error("PhasedScalar: negative magnitude");
        PhasedScalar r;
        if (m.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.magnitude *= m;
        return r;
    }
    PhasedScalar phase_shifted(const Angle& a) const {
        PhasedScalar r = *this;
        for (auto& t : r.terms_) t.angle = t.angle + a;
        r.canonicalize();
        return r;
    }
    PhasedScalar conjugated() const {
        PhasedScalar r = *this;
        for (auto& t : r.terms_) t.angle = t.angle.negated();
        r.canonicalize();
        return r;
    }
    static PhasedScalar pow(const PhasedScalar& base, std::uint64_t e) {
        PhasedScalar r = one(), b = base;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const PhasedScalar& a, const PhasedScalar& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].magnitude != b.terms_[i].magnitude ||
                a.terms_[i].angle != b.terms_[i].angle)
                return false;
        return true;
    }
    friend bool operator!=(const PhasedScalar& a, const PhasedScalar& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) s += " + ";
            s += terms_[i].magnitude.to_string();
            if (!terms_[i].angle.is_zero()) s += " @ " + terms_[i].angle.to_string();
        }
        return s;
    }

private:
    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [](const PhasedTerm& x, const PhasedTerm& y) {
            return Angle::compare(x.angle, y.angle) < 0;
        });
        std::vector<PhasedTerm> merged;
        for (auto& t : terms_) {
            if (t.magnitude.is_zero()) continue;
            if (!merged.empty() && merged.back().angle == t.angle)
                merged.back().magnitude += t.magnitude;
            else
                merged.push_back(std::move(t));
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const PhasedTerm& t) { return t.magnitude.is_zero(); }),
                     merged.end());
        terms_ = std::move(merged);
    }

    std::vector<PhasedTerm> terms_;
};

/// The homomorphism from formal phased scalars onto the complex numbers.
/// Quarter-turn multiples map to exact-component complexes; everything else
/// goes through cos/sin.
inline std::complex<double> h(const Angle& a) {
    if (a.is_exact()) {
        const Rational& t = a.exact_turns();
        if (t == Rational(0)) return {1.0, 0.0};
        if (t == Rational(1, 4)) return {0.0, 1.0};
        if (t == Rational(1, 2)) return {-1.0, 0.0};
        if (t == Rational(3, 4)) return {0.0, -1.0};
    }
    double r = a.to_radians();
    return {std::cos(r), std::sin(r)};
}

inline std::complex<double> h(const PhasedScalar& x) {
    std::complex<double> z{0.0, 0.0};
    for (const auto& t : x.terms()) z += t.magnitude.to_double() * h(t.angle);
    return z;
}

}  // namespace fockcat
