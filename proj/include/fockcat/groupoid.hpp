#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "fockcat/error.hpp"
#include "fockcat/phased.hpp"
#include "fockcat/rational.hpp"

namespace fockcat {

/// An isomorphism class of objects: mass 1/|Aut| (an arbitrary positive
/// rational for synthesized points), an optional U(1) phase, an opaque tag.
/// Equal points are merged, with the multiplicity counting how many copies
/// of the class the groupoid contains.
struct StackyPoint {
    Rational mass;
    Angle phase;
    std::string tag;
    Natural multiplicity{1};

    static int compare_key(const StackyPoint& a, const StackyPoint& b) {
        if (int c = Rational::compare(a.mass, b.mass); c != 0) return c;
        if (int c = Angle::compare(a.phase, b.phase); c != 0) return c;
        if (a.tag != b.tag) return a.tag < b.tag ? -1 : 1;
        return 0;
    }
};

/// A finite groupoid in skeletal form: a multiset of stacky points. Two
/// groupoids with the same multiset are indistinguishable here; every
/// operation downstream is determined by this cardinality data.
class SkeletalGroupoid {
public:
    SkeletalGroupoid() = default;
    explicit SkeletalGroupoid(std::vector<StackyPoint> points) : points_(std::move(points)) {
        canonicalize();
    }

    static SkeletalGroupoid empty() { return {}; }
    static SkeletalGroupoid point(Rational mass, Angle phase = Angle::zero(),
                                  std::string tag = {}, Natural multiplicity = Natural(1)) {
        if (mass.is_negative() || mass.is_zero())
            throw Error(ErrorCode::Input, "stacky point mass must be positive");
        SkeletalGroupoid g;
        if (!multiplicity.is_zero())
            g.points_.push_back({std::move(mass), std::move(phase), std::move(tag),
                                 std::move(multiplicity)});
        return g;
    }
    /// The n-element set seen as a groupoid: n points of mass 1.
    static SkeletalGroupoid finite_set(std::uint64_t n) {
        if (n == 0) return {};
        return point(Rational(1), Angle::zero(), {}, Natural(n));
    }

    const std::vector<StackyPoint>& points() const { return points_; }
    bool is_empty() const { return points_.empty(); }

    /// Number of isomorphism classes counted with multiplicity.
    Natural class_count() const {
        Natural n(0);
        for (const auto& p : points_) n += p.multiplicity;
        return n;
    }

    PhasedScalar cardinality() const {
        PhasedScalar c;
        for (const auto& p : points_)
            c += PhasedScalar(p.mass * Rational::from_natural(p.multiplicity), p.phase);
        return c;
    }

    friend SkeletalGroupoid operator+(const SkeletalGroupoid& a, const SkeletalGroupoid& b) {
        std::vector<StackyPoint> pts = a.points_;
        pts.insert(pts.end(), b.points_.begin(), b.points_.end());
        return SkeletalGroupoid(std::move(pts));
    }

    /// Product groupoid: Aut(x,y) = Aut(x) x Aut(y), so masses multiply;
    /// phases compose additively as in the tensor product of labelled sets.
    friend SkeletalGroupoid operator*(const SkeletalGroupoid& a, const SkeletalGroupoid& b) {
        std::vector<StackyPoint> pts;
        pts.reserve(a.points_.size() * b.points_.size());
        for (const auto& x : a.points_)
            for (const auto& y : b.points_)
                pts.push_back({x.mass * y.mass, x.phase + y.phase, join_tags(x.tag, y.tag),
                               x.multiplicity * y.multiplicity});
        return SkeletalGroupoid(std::move(pts));
    }

    SkeletalGroupoid scaled(const Natural& n) const {
        if (n.is_zero()) return {};
        std::vector<StackyPoint> pts = points_;
        for (auto& p : pts) p.multiplicity *= n;
        return SkeletalGroupoid(std::move(pts));
    }

    SkeletalGroupoid phase_shifted(const Angle& a) const {
        std::vector<StackyPoint> pts = points_;
        for (auto& p : pts) p.phase = p.phase + a;
        return SkeletalGroupoid(std::move(pts));
    }

    SkeletalGroupoid conjugated() const {
        std::vector<StackyPoint> pts = points_;
        for (auto& p : pts) p.phase = p.phase.negated();
        return SkeletalGroupoid(std::move(pts));
    }

    friend bool operator==(const SkeletalGroupoid& a, const SkeletalGroupoid& b) {
        if (a.points_.size() != b.points_.size()) return false;
        for (std::size_t i = 0; i < a.points_.size(); ++i) {
            if (StackyPoint::compare_key(a.points_[i], b.points_[i]) != 0) return false;
            if (a.points_[i].multiplicity != b.points_[i].multiplicity) return false;
        }
        return true;
    }
    friend bool operator!=(const SkeletalGroupoid& a, const SkeletalGroupoid& b) {
        return !(a == b);
    }

private:
    static std::string join_tags(const std::string& a, const std::string& b) {
        if (a.empty()) return b;
        if (b.empty()) return a;
        return "(" + a + "," + b + ")";
    }

    void canonicalize() {
        for (const auto& p : points_)
            if (p.mass.is_negative() || p.mass.is_zero())
                throw Error(ErrorCode::Input, "stacky point mass must be positive");
        std::sort(points_.begin(), points_.end(), [](const StackyPoint& a, const StackyPoint& b) {
            return StackyPoint::compare_key(a, b) < 0;
        });
        std::vector<StackyPoint> merged;
        for (auto& p : points_) {
            if (p.multiplicity.is_zero()) continue;
            if (!merged.empty() && StackyPoint::compare_key(merged.back(), p) == 0)
                merged.back().multiplicity += p.multiplicity;
            else
                merged.push_back(std::move(p));
        }
        points_ = std::move(merged);
    }

    std::vector<StackyPoint> points_;
};

using Permutation = std::vector<std::uint32_t>;

/// A permutation-group action on {0..domain_size-1}, presented by generators.
struct PermAction {
    std::size_t domain_size = 0;
    std::vector<Permutation> generators;

    void validate() const {
        for (const auto& g : generators) {
            if (g.size() != domain_size)
                throw Error(ErrorCode::Input, "permutation length does not match domain size");
            std::vector<bool> seen(domain_size, false);
            for (auto v : g) {
                if (v >= domain_size || seen[v])
                    throw Error(ErrorCode::Input, "generator is not a bijection of the domain");
                seen[v] = true;
            }
        }
    }
};

inline Permutation identity_permutation(std::size_t n) {
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
    return p;
}

inline Permutation compose_permutations(const Permutation& f, const Permutation& g) {
    Permutation r(g.size()); // (f g)(x) = f(g(x))
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
    return r;
}

inline constexpr std::size_t kGroupClosureCap = 1000000;

/// Breadth-first closure of the generated subgroup of S_n. Errors out past
/// the closure cap rather than grinding on.
inline std::vector<Permutation> group_closure(const PermAction& action) {
    action.validate();
    std::set<Permutation> seen;
    std::queue<Permutation> frontier;
    Permutation id = identity_permutation(action.domain_size);
    seen.insert(id);
    frontier.push(id);
    while (!frontier.empty()) {
        Permutation cur = frontier.front();
        frontier.pop();
        for (const auto& g : action.generators) {
            Permutation next = compose_permutations(g, cur);
            if (seen.insert(next).second) {
                if (seen.size() > kGroupClosureCap)
                    throw Error(ErrorCode::Size, "permutation group closure exceeds element cap");
                frontier.push(std::move(next));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

/// Orbits of the generated group on the domain, each sorted ascending, listed
/// by smallest element.
inline std::vector<std::vector<std::uint32_t>> orbits(const PermAction& action) {
    action.validate();
    std::vector<std::vector<std::uint32_t>> result;
    std::vector<bool> used(action.domain_size, false);
    for (std::uint32_t s = 0; s < action.domain_size; ++s) {
        if (used[s]) continue;
        std::vector<std::uint32_t> orbit{s};
        used[s] = true;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const auto& g : action.generators) {
                std::uint32_t img = g[orbit[i]];
                if (!used[img]) {
                    used[img] = true;
                    orbit.push_back(img);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        result.push_back(std::move(orbit));
    }
    return result;
}

/// The action groupoid of a finite set acted on by a permutation group, in
/// skeletal form: one point per orbit with mass 1/|Stab| by orbit-stabilizer.
/// Total cardinality is set_size / |group|.
inline SkeletalGroupoid skeletonize(const PermAction& action,
                                    const std::vector<std::string>& tags = {}) {
    if (!tags.empty() && tags.size() != action.domain_size)
        throw Error(ErrorCode::Input, "tag list does not match domain size");
    Natural group_order(group_closure(action).size());
    std::vector<StackyPoint> pts;
    for (const auto& orbit : orbits(action)) {
        Rational mass(Integer(Natural(orbit.size())), group_order); // |orbit|/|G| = 1/|Stab|
        std::string tag = tags.empty() ? std::string{} : tags[orbit.front()];
        pts.push_back({std::move(mass), Angle::zero(), std::move(tag), Natural(1)});
    }
    return SkeletalGroupoid(std::move(pts));
}

inline SkeletalGroupoid weak_quotient(std::size_t set_size, PermAction action) {
    action.domain_size = set_size;
    return skeletonize(action);
}

}  // namespace fockcat
