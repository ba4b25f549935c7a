#pragma once

#include <cstdint>
#include <vector>

#include "fockcat/error.hpp"
#include "fockcat/groupoid.hpp"
#include "fockcat/series.hpp"
#include "fockcat/species.hpp"

namespace fockcat {

/// A stuff type stored as its graded fibers: fibers[n] is the skeletal
/// groupoid sitting over the n-element set. The cardinality series has the
/// groupoid cardinality of fibers[n] as its n-th coefficient. Fibers are
/// post-quotient: a species embeds with |F_n| points of mass 1/n!.
class StuffType {
public:
    explicit StuffType(std::size_t truncation) : fibers_(truncation + 1) {}
    StuffType(std::vector<SkeletalGroupoid> fibers) : fibers_(std::move(fibers)) {
        if (fibers_.empty()) fibers_.emplace_back();
    }

    std::size_t truncation() const { return fibers_.size() - 1; }
    const SkeletalGroupoid& fiber(std::size_t n) const { return fibers_[n]; }
    SkeletalGroupoid& fiber(std::size_t n) { return fibers_[n]; }

    static StuffType empty(std::size_t trunc) { return StuffType(trunc); }

    static StuffType from_species(const Species& f) {
        StuffType t(f.truncation());
        for (std::size_t n = 0; n <= f.truncation(); ++n)
            if (!f.count(n).is_zero())
                t.fibers_[n] = SkeletalGroupoid::point(Rational(Integer(1), factorial(n)),
                                                       Angle::zero(), {}, f.count(n));
        return t;
    }

    /// "First of a k-tuple of equal-sized finite sets": fiber n is a single
    /// point of mass (1/n!)^k.
    static StuffType k_tuple(std::uint64_t k, std::size_t trunc) {
        StuffType t(trunc);
        for (std::size_t n = 0; n <= trunc; ++n)
            t.fibers_[n] = SkeletalGroupoid::point(
                Rational::pow(Rational(Integer(1), factorial(n)), k));
        return t;
    }

    PowerSeries<PhasedScalar> cardinality() const {
        PowerSeries<PhasedScalar> s(truncation());
        for (std::size_t n = 0; n <= truncation(); ++n) s[n] = fibers_[n].cardinality();
        return s;
    }

    friend StuffType operator+(const StuffType& a, const StuffType& b) {
        StuffType r(std::min(a.truncation(), b.truncation()));
        for (std::size_t n = 0; n <= r.truncation(); ++n) r.fibers_[n] = a.fibers_[n] + b.fibers_[n];
        return r;
    }

    /// Product of types: fiber n collects all splits k + (n-k). Fibers are
    /// post-quotient, so the coefficients multiply as plain series.
    friend StuffType operator*(const StuffType& a, const StuffType& b) {
        StuffType r(std::min(a.truncation(), b.truncation()));
        for (std::size_t n = 0; n <= r.truncation(); ++n) {
            SkeletalGroupoid acc;
            for (std::size_t k = 0; k <= n; ++k) acc = acc + a.fibers_[k] * b.fibers_[n - k];
            r.fibers_[n] = std::move(acc);
        }
        return r;
    }

    static StuffType pow(const StuffType& base, std::uint64_t e, std::size_t trunc) {
        StuffType r(trunc);
        r.fibers_[0] = SkeletalGroupoid::point(Rational(1));
        StuffType b = base;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// Annihilation: fiber n of A(Psi) is n+1 copies of fiber n+1, matching
    /// differentiation of the cardinality series.
    StuffType annihilated() const {
        if (truncation() == 0) return StuffType(0);
        StuffType r(truncation() - 1);
        for (std::size_t n = 0; n <= r.truncation(); ++n)
            r.fibers_[n] = fibers_[n + 1].scaled(Natural(n + 1));
        return r;
    }

    /// Creation: fiber n of A*(Psi) is fiber n-1, matching multiplication of
    /// the cardinality series by z.
    StuffType created() const {
        StuffType r(truncation());
        for (std::size_t n = 1; n <= truncation(); ++n) r.fibers_[n] = fibers_[n - 1];
        return r;
    }

    StuffType phase_scaled(const Angle& m) const {
        StuffType r = *this;
        for (auto& f : r.fibers_) f = f.phase_shifted(m);
        return r;
    }

    StuffType groupoid_scaled(const SkeletalGroupoid& g) const {
        StuffType r = *this;
        for (auto& f : r.fibers_) f = f * g;
        return r;
    }

    StuffType conjugated() const {
        StuffType r = *this;
        for (auto& f : r.fibers_) f = f.conjugated();
        return r;
    }

    friend bool operator==(const StuffType& a, const StuffType& b) {
        return a.fibers_ == b.fibers_;
    }
    friend bool operator!=(const StuffType& a, const StuffType& b) { return !(a == b); }

private:
    std::vector<SkeletalGroupoid> fibers_;
};

/// The weak-pullback inner product, graded by set size. A pair of fiber
/// points over n with automorphism groups K_x, K_y contributes the groupoid
/// S_n // (K_x x K_y), of cardinality n!/(|K_x| |K_y|): each grade is the
/// product groupoid scaled by an S_n-torsor.
inline std::vector<SkeletalGroupoid> inner_product_graded(const StuffType& a, const StuffType& b) {
    std::size_t trunc = std::min(a.truncation(), b.truncation());
    std::vector<SkeletalGroupoid> grades(trunc + 1);
    for (std::size_t n = 0; n <= trunc; ++n) {
        SkeletalGroupoid prod = a.fiber(n) * b.fiber(n);
        std::vector<StackyPoint> pts = prod.points();
        Rational nf = Rational::from_natural(factorial(n));
        for (auto& p : pts) p.mass *= nf;
        grades[n] = SkeletalGroupoid(std::move(pts));
    }
    return grades;
}

inline SkeletalGroupoid inner_product(const StuffType& a, const StuffType& b) {
    SkeletalGroupoid total;
    for (auto& g : inner_product_graded(a, b)) total = total + g;
    return total;
}

/// Conjugate-linear variant: the physicists' bra-ket pairing.
inline SkeletalGroupoid fock_inner(const StuffType& a, const StuffType& b) {
    return inner_product(a.conjugated(), b);
}
inline std::vector<SkeletalGroupoid> fock_inner_graded(const StuffType& a, const StuffType& b) {
    return inner_product_graded(a.conjugated(), b);
}

/// |Psi(Z0)| = |Psi|(|Z0|): evaluation by colouring, read off at the level of
/// cardinalities. The explicit evaluation groupoid grows as |objects|^n and
/// is never materialized.
inline PhasedScalar evaluate(const StuffType& psi, const SkeletalGroupoid& z0) {
    return psi.cardinality().eval(z0.cardinality());
}

/// Composite stuff type. Cardinalities compose as series; the fibers of the
/// result are synthesized, one generalized point per phase term, since no
/// canonical explicit fiber exists at this cardinality-faithful level.
inline StuffType compose(const StuffType& f, const StuffType& g) {
    if (!g.fiber(0).is_empty())
        throw Error(ErrorCode::ComposeConst,
                    "stuff-type composition needs an empty fiber over the empty set");
    PowerSeries<PhasedScalar> comp = compose(f.cardinality(), g.cardinality());
    StuffType r(comp.truncation());
    for (std::size_t n = 0; n <= comp.truncation(); ++n) {
        std::vector<StackyPoint> pts;
        for (const auto& term : comp[n].terms())
            pts.push_back({term.magnitude, term.angle, {}, Natural(1)});
        r.fiber(n) = SkeletalGroupoid(std::move(pts));
    }
    return r;
}

inline StuffType free_evolve(const StuffType& psi, const Angle& theta) {
    StuffType r = psi;
    for (std::size_t n = 0; n <= r.truncation(); ++n)
        r.fiber(n) = r.fiber(n).phase_shifted(theta.scaled(n));
    return r;
}

}  // namespace fockcat
