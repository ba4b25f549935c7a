#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "fockcat/error.hpp"
#include "fockcat/rational.hpp"
#include "fockcat/series.hpp"

namespace fockcat {

/// Exact element of Q[i, sqrt(2)]: a + b i + c sqrt2 + d i sqrt2. Closed
/// under the arithmetic the p/q change of generators needs, so root-two
/// factors stay symbolic until a matrix demotes them.
struct CScalar {
    Rational a, b, c, d;

    CScalar() = default;
    CScalar(Rational real) : a(std::move(real)) {}
    CScalar(std::int64_t v) : a(Rational(v)) {}
    static CScalar i(Rational m = Rational(1)) {
        CScalar s;
        s.b = std::move(m);
        return s;
    }
    static CScalar sqrt2(Rational m = Rational(1)) {
        CScalar s;
        s.c = std::move(m);
        return s;
    }
    static CScalar i_sqrt2(Rational m = Rational(1)) {
        CScalar s;
        s.d = std::move(m);
        return s;
    }

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_rational() const { return b.is_zero() && c.is_zero() && d.is_zero(); }
    Rational to_rational() const {
        if (!is_rational()) throw std::domain_error("CScalar: not rational");
        return a;
    }
    std::complex<double> to_complex() const {
        const double r2 = std::sqrt(2.0);
        return {a.to_double() + c.to_double() * r2, b.to_double() + d.to_double() * r2};
    }

    friend CScalar operator+(const CScalar& x, const CScalar& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend CScalar operator-(const CScalar& x, const CScalar& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend CScalar operator*(const CScalar& x, const CScalar& y) {
        Rational two(2);
        return {x.a * y.a - x.b * y.b + two * (x.c * y.c - x.d * y.d),
                x.a * y.b + x.b * y.a + two * (x.c * y.d + x.d * y.c),
                x.a * y.c + x.c * y.a - x.b * y.d - x.d * y.b,
                x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b};
    }
    CScalar negated() const { return {a.negated(), b.negated(), c.negated(), d.negated()}; }
    friend bool operator==(const CScalar& x, const CScalar& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const CScalar& x, const CScalar& y) { return !(x == y); }

private:
    CScalar(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
};

/// A normal-ordered monomial: creation power then annihilation power.
struct WeylMonomial {
    std::uint32_t creators = 0;
    std::uint32_t annihilators = 0;
    friend bool operator<(const WeylMonomial& x, const WeylMonomial& y) {
        return x.creators != y.creators ? x.creators < y.creators
                                        : x.annihilators < y.annihilators;
    }
    friend bool operator==(const WeylMonomial& x, const WeylMonomial& y) {
        return x.creators == y.creators && x.annihilators == y.annihilators;
    }
};

enum class Ladder { Annihilate, Create };

/// Element of the Weyl algebra kept in normal order: a finite sum of
/// coefficients on monomials a*^i a^j. Products re-normal-order through the
/// commutation relation.
class WeylElement {
public:
    WeylElement() = default;

    static WeylElement zero() { return {}; }
    static WeylElement identity(CScalar coeff = CScalar(1)) {
        WeylElement w;
        w.add_term({0, 0}, std::move(coeff));
        return w;
    }
    static WeylElement annihilator() {
        WeylElement w;
        w.add_term({0, 1}, CScalar(1));
        return w;
    }
    static WeylElement creator() {
        WeylElement w;
        w.add_term({1, 0}, CScalar(1));
        return w;
    }
    static WeylElement field() { return annihilator() + creator(); } // phi = a + a*
    static WeylElement number() {                                    // N = a* a
        WeylElement w;
        w.add_term({1, 1}, CScalar(1));
        return w;
    }

    const std::map<WeylMonomial, CScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_rational_coefficients() const {
        for (const auto& [m, c] : terms_)
            if (!c.is_rational()) return false;
        return true;
    }
    std::uint32_t max_creators() const {
        std::uint32_t m = 0;
        for (const auto& [mono, c] : terms_) m = std::max(m, mono.creators);
        return m;
    }
    std::uint32_t max_annihilators() const {
        std::uint32_t m = 0;
        for (const auto& [mono, c] : terms_) m = std::max(m, mono.annihilators);
        return m;
    }

    friend WeylElement operator+(const WeylElement& x, const WeylElement& y) {
        WeylElement r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, c);
        return r;
    }
    friend WeylElement operator-(const WeylElement& x, const WeylElement& y) {
        WeylElement r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, c.negated());
        return r;
    }

    WeylElement scaled(const CScalar& s) const {
        WeylElement r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }

    /// Normal-ordered product. The cross block a^j a*^k expands by the
    /// contraction sum a^j a*^k = sum_r C(j,r) C(k,r) r! a*^{k-r} a^{j-r}.
    friend WeylElement operator*(const WeylElement& x, const WeylElement& y) {
        WeylElement r;
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) {
                CScalar coeff = cx * cy;
                std::uint32_t j = mx.annihilators, k = my.creators;
                for (std::uint32_t cont = 0; cont <= std::min(j, k); ++cont) {
                    Natural weight = binomial(j, cont) * binomial(k, cont) * factorial(cont);
                    CScalar w = coeff * CScalar(Rational::from_natural(weight));
                    r.add_term({mx.creators + (k - cont), (j - cont) + my.annihilators},
                               std::move(w));
                }
            }
        return r;
    }

    static WeylElement pow(const WeylElement& base, std::uint64_t e) {
        WeylElement r = identity(), b = base;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    static WeylElement commutator(const WeylElement& x, const WeylElement& y) {
        return x * y - y * x;
    }

    friend bool operator==(const WeylElement& x, const WeylElement& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const WeylElement& x, const WeylElement& y) { return !(x == y); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + (c.is_rational() ? c.a.to_string() : std::string("complex")) + ")";
            for (std::uint32_t i = 0; i < m.creators; ++i) s += " a*";
            for (std::uint32_t i = 0; i < m.annihilators; ++i) s += " a";
        }
        return s;
    }

private:
    void add_term(const WeylMonomial& m, CScalar c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<WeylMonomial, CScalar> terms_;
};

/// Rewrites a word in the generators into normal order, with a coefficient.
inline WeylElement normal_order(const std::vector<Ladder>& word, CScalar coeff = CScalar(1)) {
    WeylElement acc = WeylElement::identity(std::move(coeff));
    for (Ladder l : word)
        acc = acc * (l == Ladder::Create ? WeylElement::creator() : WeylElement::annihilator());
    return acc;
}

/// p and q with exact root-two coefficients: q = (a+a*)/sqrt2,
/// p = (a-a*)/(sqrt2 i).
inline std::pair<WeylElement, WeylElement> pq_generators() {
    WeylElement q = (WeylElement::annihilator() + WeylElement::creator())
                        .scaled(CScalar::sqrt2(Rational(1, 2)));
    WeylElement p = (WeylElement::annihilator() - WeylElement::creator())
                        .scaled(CScalar::i_sqrt2(Rational(-1, 2)));
    return {p, q};
}

namespace detail {
/// l!/(l-j)! as an exact natural.
inline Natural falling_factorial(std::uint64_t l, std::uint64_t j) {
    Natural r(1);
    for (std::uint64_t i = 0; i < j; ++i)
        r = Natural::mul_small(r, static_cast<std::uint32_t>(l - i));
    return r;
}
}  // namespace detail

/// Acts on a polynomial state: a differentiates, a* multiplies by z.
/// Coefficients above the truncation are taken to be zero; pushing a nonzero
/// coefficient past the truncation is an error.
template <class S>
PowerSeries<S> apply(const WeylElement& w, const PowerSeries<S>& state) {
    PowerSeries<S> out(state.truncation());
    for (const auto& [mono, coeff] : w.terms()) {
        S scalar;
        if constexpr (std::is_same_v<S, Rational>) {
            scalar = coeff.to_rational();
        } else {
            static_assert(std::is_same_v<S, std::complex<double>>,
                          "apply supports Rational and complex states");
            scalar = coeff.to_complex();
        }
        PowerSeries<S> term = state;
        for (std::uint32_t r = 0; r < mono.annihilators; ++r) {
            PowerSeries<S> d(term.truncation());
            for (std::size_t n = 0; n + 1 <= term.truncation(); ++n)
                d[n] = term[n + 1] * ScalarOps<S>::from_natural(n + 1);
            term = std::move(d);
        }
        for (std::uint32_t r = 0; r < mono.creators; ++r) {
            if (!(term[term.truncation()] == ScalarOps<S>::zero()))
                throw Error(ErrorCode::Cutoff,
                            "state degree overflows the truncation under a*");
            term = term.shifted_up();
        }
        out = out + term.scaled(scalar);
    }
    return out;
}

/// <z^k, phi^m z^l> under <z^n, z^m> = n! delta, computed symbolically.
inline Rational field_power_expect(std::uint32_t k, std::uint32_t m, std::uint32_t l) {
    WeylElement phi_m = WeylElement::pow(WeylElement::field(), m);
    Rational total(0);
    for (const auto& [mono, coeff] : phi_m.terms()) {
        if (mono.annihilators > l) continue;
        if (l - mono.annihilators + mono.creators != k) continue;
        Rational weight = Rational::from_natural(detail::falling_factorial(l, mono.annihilators)) *
                          Rational::from_natural(factorial(k));
        total += coeff.to_rational() * weight;
    }
    return total;
}

/// Dense complex matrix in the orthonormalized Fock basis e_n = z^n/sqrt(n!),
/// truncated at a cutoff. The basis change keeps exponentials numerically
/// tame; sqrt(k! l!) factors reappear at the boundary with the monomial
/// basis.
class FockMatrix {
public:
    explicit FockMatrix(std::size_t dimension)
        : dim_(dimension), data_(dimension * dimension, {0.0, 0.0}) {}

    std::size_t dimension() const { return dim_; }
    std::complex<double>& at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const std::complex<double>& at(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    static FockMatrix identity(std::size_t dim) {
        FockMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
        return m;
    }

    friend FockMatrix operator*(const FockMatrix& x, const FockMatrix& y) {
        FockMatrix r(x.dim_);
        for (std::size_t i = 0; i < x.dim_; ++i)
            for (std::size_t k = 0; k < x.dim_; ++k) {
                std::complex<double> v = x.at(i, k);
                if (v == std::complex<double>{0.0, 0.0}) continue;
                for (std::size_t j = 0; j < x.dim_; ++j) r.at(i, j) += v * y.at(k, j);
            }
        return r;
    }
    friend FockMatrix operator+(const FockMatrix& x, const FockMatrix& y) {
        FockMatrix r(x.dim_);
        for (std::size_t i = 0; i < x.data_.size(); ++i) r.data_[i] = x.data_[i] + y.data_[i];
        return r;
    }
    FockMatrix scaled(std::complex<double> s) const {
        FockMatrix r(dim_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
        return r;
    }
    FockMatrix adjoint() const {
        FockMatrix r(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) r.at(i, j) = std::conj(at(j, i));
        return r;
    }

    std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& v) const {
        std::vector<std::complex<double>> r(dim_, {0.0, 0.0});
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    double max_abs() const {
        double m = 0;
        for (const auto& v : data_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    std::size_t dim_;
    std::vector<std::complex<double>> data_;
};

/// Matrix of a Weyl element at a given cutoff: a e_n = sqrt(n) e_{n-1},
/// a* e_n = sqrt(n+1) e_{n+1}.
inline FockMatrix to_matrix(const WeylElement& w, std::size_t cutoff) {
    if (cutoff < 1) throw Error(ErrorCode::Cutoff, "matrix cutoff must be at least 1");
    if (cutoff < w.max_creators() || cutoff < w.max_annihilators())
        throw Error(ErrorCode::Cutoff, "matrix cutoff smaller than a monomial power");
    FockMatrix m(cutoff + 1);
    for (const auto& [mono, coeff] : w.terms()) {
        std::complex<double> c = coeff.to_complex();
        for (std::size_t n = 0; n <= cutoff; ++n) {
            if (mono.annihilators > n) continue;
            std::size_t mid = n - mono.annihilators;
            std::size_t row = mid + mono.creators;
            if (row > cutoff) continue;
            double amp = 1.0;
            for (std::size_t r = 0; r < mono.annihilators; ++r)
                amp *= std::sqrt(static_cast<double>(n - r));
            for (std::size_t r = 0; r < mono.creators; ++r)
                amp *= std::sqrt(static_cast<double>(mid + r + 1));
            m.at(row, n) += c * amp;
        }
    }
    return m;
}

/// exp(M t) by scaling and squaring with a truncated Taylor series.
inline FockMatrix matrix_exp(const FockMatrix& m, double t = 1.0) {
    FockMatrix a = m.scaled({t, 0.0});
    double norm = a.max_abs() * static_cast<double>(a.dimension());
    int squarings = 0;
    while (norm > 0.5 && squarings < 64) {
        norm /= 2;
        ++squarings;
    }
    a = a.scaled({std::ldexp(1.0, -squarings), 0.0});
    FockMatrix sum = FockMatrix::identity(a.dimension());
    FockMatrix term = FockMatrix::identity(a.dimension());
    for (int k = 1; k <= 40; ++k) {
        term = (term * a).scaled({1.0 / k, 0.0});
        sum = sum + term;
        if (term.max_abs() < 1e-18 * std::max(1.0, sum.max_abs())) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

}  // namespace fockcat
