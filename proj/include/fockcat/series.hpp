#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <vector>

#include "fockcat/error.hpp"
#include "fockcat/phased.hpp"
#include "fockcat/rational.hpp"

namespace fockcat {

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_natural(std::uint64_t n) { return Rational(static_cast<std::int64_t>(n)); }
};

template <>
struct ScalarOps<PhasedScalar> {
    static PhasedScalar zero() { return PhasedScalar::zero(); }
    static PhasedScalar one() { return PhasedScalar::one(); }
    static PhasedScalar from_natural(std::uint64_t n) {
        return PhasedScalar(Rational(static_cast<std::int64_t>(n)));
    }
};

template <>
struct ScalarOps<std::complex<double>> {
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> from_natural(std::uint64_t n) {
        return {static_cast<double>(n), 0.0};
    }
};

/// Truncated formal power series. Coefficients are indexed 0..truncation;
/// arithmetic between series of different truncations works at the minimum.
template <class S>
class PowerSeries {
public:
    using Scalar = S;

    explicit PowerSeries(std::size_t truncation)
        : coeffs_(truncation + 1, ScalarOps<S>::zero()) {}
    PowerSeries(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(ScalarOps<S>::zero());
    }

    std::size_t truncation() const { return coeffs_.size() - 1; }
    const S& operator[](std::size_t n) const { return coeffs_[n]; }
    S& operator[](std::size_t n) { return coeffs_[n]; }
    const std::vector<S>& coeffs() const { return coeffs_; }

    static PowerSeries constant(S value, std::size_t truncation) {
        PowerSeries r(truncation);
        r.coeffs_[0] = std::move(value);
        return r;
    }
    static PowerSeries identity(std::size_t truncation) { // the series z
        PowerSeries r(truncation);
        if (truncation >= 1) r.coeffs_[1] = ScalarOps<S>::one();
        return r;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r(std::min(a.truncation(), b.truncation()));
        for (std::size_t n = 0; n <= r.truncation(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
        return r;
    }

    /// Cauchy convolution, truncated.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r(std::min(a.truncation(), b.truncation()));
        for (std::size_t n = 0; n <= r.truncation(); ++n) {
            S acc = ScalarOps<S>::zero();
            for (std::size_t k = 0; k <= n; ++k) acc = acc + a.coeffs_[k] * b.coeffs_[n - k];
            r.coeffs_[n] = std::move(acc);
        }
        return r;
    }

    PowerSeries scaled(const S& m) const {
        PowerSeries r(truncation());
        for (std::size_t n = 0; n <= truncation(); ++n) r.coeffs_[n] = coeffs_[n] * m;
        return r;
    }

    PowerSeries derivative() const {
        PowerSeries r(truncation() == 0 ? 0 : truncation() - 1);
        for (std::size_t n = 0; n + 1 <= truncation() && n <= r.truncation(); ++n)
            r.coeffs_[n] = coeffs_[n + 1] * ScalarOps<S>::from_natural(n + 1);
        return r;
    }

    /// Multiplication by z (coefficients shift up; the top one falls off).
    PowerSeries shifted_up() const {
        PowerSeries r(truncation());
        for (std::size_t n = 1; n <= truncation(); ++n) r.coeffs_[n] = coeffs_[n - 1];
        return r;
    }

    S eval(const S& x) const {
        S acc = coeffs_[truncation()];
        for (std::size_t n = truncation(); n-- > 0;) acc = acc * x + coeffs_[n];
        return acc;
    }

    bool is_zero_at(std::size_t n, const S& zero = ScalarOps<S>::zero()) const {
        return coeffs_[n] == zero;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

private:
    std::vector<S> coeffs_;
};

/// f(g(z)) by Horner over truncated polynomials. Requires g(0) = 0: the
/// composite of power series is otherwise not a formal power series at this
/// level (the same obstruction that keeps "a finite set of finite sets" from
/// being a structure type).
template <class S>
PowerSeries<S> compose(const PowerSeries<S>& f, const PowerSeries<S>& g) {
    if (!(g[0] == ScalarOps<S>::zero()))
        throw Error(ErrorCode::ComposeConst,
                    "series composition requires the inner series to have zero constant term");
    // f_k with k > trunc only feeds degrees above the truncation (g has no
    // constant term), so Horner can start at the joint truncation.
    std::size_t trunc = std::min(f.truncation(), g.truncation());
    PowerSeries<S> acc = PowerSeries<S>::constant(f[trunc], trunc);
    for (std::size_t n = trunc; n-- > 0;) {
        acc = acc * g;
        acc[0] = acc[0] + f[n];
    }
    return acc;
}

}  // namespace fockcat
