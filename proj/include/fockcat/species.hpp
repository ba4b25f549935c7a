#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fockcat/bigint.hpp"
#include "fockcat/error.hpp"
#include "fockcat/series.hpp"

namespace fockcat {

/// A structure type recorded by its counting sequence: counts[n] is the
/// number of labelled structures on an n-element set. The generating
/// function has coefficient counts[n]/n!.
class Species {
public:
    explicit Species(std::size_t truncation) : counts_(truncation + 1) {}
    Species(std::vector<Natural> counts) : counts_(std::move(counts)) {
        if (counts_.empty()) counts_.push_back(Natural(0));
    }

    std::size_t truncation() const { return counts_.size() - 1; }
    const Natural& count(std::size_t n) const { return counts_[n]; }
    const std::vector<Natural>& counts() const { return counts_; }

    // the named atoms of the algebra
    static Species zero(std::size_t trunc) { return Species(trunc); }
    static Species one(std::size_t trunc) { // "being the empty set"
        Species s(trunc);
        s.counts_[0] = Natural(1);
        return s;
    }
    static Species singleton(std::size_t trunc) { // Z
        Species s(trunc);
        if (trunc >= 1) s.counts_[1] = Natural(1);
        return s;
    }
    static Species set(std::size_t trunc) { // E: one structure on any set
        Species s(trunc);
        for (auto& c : s.counts_) c = Natural(1);
        return s;
    }
    static Species nonempty_set(std::size_t trunc) { // E restricted to size >= 1
        Species s = set(trunc);
        s.counts_[0] = Natural(0);
        return s;
    }
    static Species orderings(std::size_t trunc) { // O: total orders, n! each
        Species s(trunc);
        for (std::size_t n = 0; n <= trunc; ++n) s.counts_[n] = factorial(n);
        return s;
    }
    static Species being_n_set(std::size_t n, std::size_t trunc) { // E_n
        Species s(trunc);
        if (n <= trunc) s.counts_[n] = Natural(1);
        return s;
    }

    friend Species operator+(const Species& a, const Species& b) {
        Species r(std::min(a.truncation(), b.truncation()));
        for (std::size_t n = 0; n <= r.truncation(); ++n) r.counts_[n] = a.counts_[n] + b.counts_[n];
        return r;
    }

    /// (F.G)_n = sum_k C(n,k) F_k G_{n-k}: split the set, structure each part.
    friend Species operator*(const Species& a, const Species& b) {
        Species r(std::min(a.truncation(), b.truncation()));
        for (std::size_t n = 0; n <= r.truncation(); ++n) {
            Natural acc(0);
            for (std::size_t k = 0; k <= n; ++k)
                acc += binomial(n, k) * a.counts_[k] * b.counts_[n - k];
            r.counts_[n] = std::move(acc);
        }
        return r;
    }

    Species scaled(const Natural& m) const {
        Species r(truncation());
        for (std::size_t n = 0; n <= truncation(); ++n) r.counts_[n] = counts_[n] * m;
        return r;
    }

    static Species pow(const Species& base, std::uint64_t e, std::size_t trunc) {
        Species r = one(trunc), b = base;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// The annihilation-side operator: structure the set with one element
    /// adjoined, so (AF)_n = F_{n+1} and the generating function
    /// differentiates.
    Species derivative() const {
        if (truncation() == 0) return Species(0);
        Species r(truncation() - 1);
        for (std::size_t n = 0; n <= r.truncation(); ++n) r.counts_[n] = counts_[n + 1];
        return r;
    }

    /// The creation-side operator (multiplication by Z): pick the removed
    /// element, structure the rest, so (A*F)_n = n F_{n-1}.
    Species shifted() const {
        Species r(truncation());
        for (std::size_t n = 1; n <= truncation(); ++n)
            r.counts_[n] = Natural::mul_small(counts_[n - 1], static_cast<std::uint32_t>(n));
        return r;
    }

    PowerSeries<Rational> gf() const {
        PowerSeries<Rational> s(truncation());
        for (std::size_t n = 0; n <= truncation(); ++n)
            s[n] = Rational(Integer(counts_[n]), factorial(n));
        return s;
    }

    friend bool operator==(const Species& a, const Species& b) { return a.counts_ == b.counts_; }
    friend bool operator!=(const Species& a, const Species& b) { return !(a == b); }

private:
    std::vector<Natural> counts_;
};

/// Substitution F(G) computed through the generating functions, with exact
/// rational intermediates. The result counts are integers by the partition
/// sum identity; the conversion asserts it. G must have no structures on the
/// empty set.
inline Species species_compose(const Species& f, const Species& g) {
    if (!g.count(0).is_zero())
        throw Error(ErrorCode::ComposeConst,
                    "composition needs G with no structure on the empty set; the composite is "
                    "otherwise a stuff type, not a structure type");
    PowerSeries<Rational> comp = compose(f.gf(), g.gf());
    std::vector<Natural> counts(comp.truncation() + 1);
    for (std::size_t n = 0; n <= comp.truncation(); ++n) {
        Rational c = comp[n] * Rational::from_natural(factorial(n));
        counts[n] = c.to_natural(); // throws if the partition-sum identity broke
    }
    return Species(std::move(counts));
}

/// Solves F = rhs(F) by graded iteration from the empty species. Coefficient
/// n must be final after n+1 rounds; any later change reports divergence.
inline Species solve_fixed_point(const std::function<Species(const Species&)>& rhs,
                                 std::size_t truncation) {
    Species cur = Species::zero(truncation);
    for (std::size_t it = 1; it <= truncation + 2; ++it) {
        Species next = rhs(cur);
        if (next.truncation() < truncation)
            throw Error(ErrorCode::Input, "fixed-point body reduces the truncation order");
        std::vector<Natural> counts(truncation + 1);
        for (std::size_t n = 0; n <= truncation; ++n) counts[n] = next.count(n);
        next = Species(std::move(counts));
        for (std::size_t n = 0; n <= truncation; ++n)
            if (it > n + 1 && next.count(n) != cur.count(n))
                throw Error(ErrorCode::Diverged,
                            "fixed-point iteration is not contractive: coefficient " +
                                std::to_string(n) + " changed after stabilizing");
        if (next == cur) return cur;
        cur = std::move(next);
    }
    return cur;
}

}  // namespace fockcat
