#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "fockcat/error.hpp"
#include "fockcat/rational.hpp"

namespace fockcat {

inline constexpr std::size_t kMaxHalfEdges = 24;
inline constexpr std::size_t kMaxExternalPoints = 8;
inline constexpr std::size_t kMatchingCap = 1u << 21;

/// A perfect matching on the half-edges of a diagram, stored as a partner
/// map over global half-edge ids.
struct Matching {
    std::array<std::uint8_t, kMaxHalfEdges> partner{};
    std::uint8_t size = 0;

    friend bool operator==(const Matching& a, const Matching& b) {
        if (a.size != b.size) return false;
        for (std::uint8_t i = 0; i < a.size; ++i)
            if (a.partner[i] != b.partner[i]) return false;
        return true;
    }

    std::vector<std::pair<std::uint8_t, std::uint8_t>> edges() const {
        std::vector<std::pair<std::uint8_t, std::uint8_t>> e;
        for (std::uint8_t i = 0; i < size; ++i)
            if (partner[i] > i) e.push_back({i, partner[i]});
        return e;
    }
};

struct MatchingHash {
    std::size_t operator()(const Matching& m) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint8_t i = 0; i < m.size; ++i) {
            h ^= m.partner[i];
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Half-edge layout of one diagram family: l labelled in-points (layer 0),
/// time-ordered vertices (vertex t at layer t+1, valences[0] nearest the
/// in-points), k labelled out-points (top layer). An edge must either move
/// strictly up in time or loop at a single vertex; external points are
/// rigid, vertex legs are interchangeable.
class DiagramShape {
public:
    DiagramShape(std::uint32_t out_points, std::uint32_t in_points,
                 std::vector<std::uint32_t> valences)
        : k_(out_points), l_(in_points), valences_(std::move(valences)) {
        if (k_ > kMaxExternalPoints || l_ > kMaxExternalPoints)
            throw Error(ErrorCode::Size, "too many external points");
        std::size_t total = k_ + l_;
        for (auto m : valences_) total += m;
        if (total > kMaxHalfEdges)
            throw Error(ErrorCode::Size, "diagram exceeds the half-edge bound");
        total_ = static_cast<std::uint8_t>(total);
        std::uint8_t base = static_cast<std::uint8_t>(l_);
        vertex_base_.reserve(valences_.size());
        for (auto m : valences_) {
            vertex_base_.push_back(base);
            base = static_cast<std::uint8_t>(base + m);
        }
        out_base_ = base;
    }

    std::uint32_t out_points() const { return k_; }
    std::uint32_t in_points() const { return l_; }
    const std::vector<std::uint32_t>& valences() const { return valences_; }
    std::uint8_t total_half_edges() const { return total_; }

    bool odd_parity() const { return total_ % 2 != 0; }

    /// -1 for an in-point, vertex index for a leg, -2 for an out-point.
    int vertex_of(std::uint8_t id) const {
        if (id < l_) return -1;
        if (id >= out_base_) return -2;
        int v = static_cast<int>(vertex_base_.size()) - 1;
        while (v > 0 && id < vertex_base_[static_cast<std::size_t>(v)]) --v;
        return v;
    }
    std::uint32_t layer_of(std::uint8_t id) const {
        int v = vertex_of(id);
        if (v == -1) return 0;
        if (v == -2) return static_cast<std::uint32_t>(valences_.size()) + 1;
        return static_cast<std::uint32_t>(v) + 1;
    }
    bool edge_allowed(std::uint8_t a, std::uint8_t b) const {
        int va = vertex_of(a), vb = vertex_of(b);
        if (va >= 0 && va == vb) return true; // loop at one vertex
        return layer_of(a) < layer_of(b);
    }

    std::uint8_t vertex_base(std::size_t v) const { return vertex_base_[v]; }
    std::uint8_t out_base() const { return out_base_; }

    Natural leg_group_order() const {
        Natural g(1);
        for (auto m : valences_) g *= factorial(m);
        return g;
    }

    /// Adjacent leg transpositions generating the leg-relabelling group.
    std::vector<std::pair<std::uint8_t, std::uint8_t>> leg_transpositions() const {
        std::vector<std::pair<std::uint8_t, std::uint8_t>> gens;
        for (std::size_t v = 0; v < valences_.size(); ++v)
            for (std::uint32_t i = 0; i + 1 < valences_[v]; ++i)
                gens.push_back({static_cast<std::uint8_t>(vertex_base_[v] + i),
                                static_cast<std::uint8_t>(vertex_base_[v] + i + 1)});
        return gens;
    }

private:
    std::uint32_t k_, l_;
    std::vector<std::uint32_t> valences_;
    std::vector<std::uint8_t> vertex_base_;
    std::uint8_t out_base_ = 0;
    std::uint8_t total_ = 0;
};

struct DiagramClass {
    Matching representative;
    Natural aut_order;
    Natural orbit_size;
};

struct DiagramGroupoid {
    std::uint32_t out_points = 0;
    std::uint32_t in_points = 0;
    std::vector<std::uint32_t> valences;
    std::vector<DiagramClass> classes;
    Natural labelled_count;
    Rational cardinality;
};

namespace detail {

template <class Visitor>
void enumerate_matchings(const DiagramShape& shape, Visitor&& visit) {
    std::uint8_t n = shape.total_half_edges();
    Matching m;
    m.size = n;
    std::array<bool, kMaxHalfEdges> used{};
    // Always extend from the lowest unmatched id, so each matching appears once.
    auto rec = [&](auto&& self, std::uint8_t matched) -> void {
        if (matched == n) {
            visit(m);
            return;
        }
        std::uint8_t a = 0;
        while (used[a]) ++a;
        used[a] = true;
        for (std::uint8_t b = a + 1; b < n; ++b) {
            if (used[b] || !shape.edge_allowed(a, b)) continue;
            used[b] = true;
            m.partner[a] = b;
            m.partner[b] = a;
            self(self, static_cast<std::uint8_t>(matched + 2));
            used[b] = false;
        }
        used[a] = false;
    };
    if (n == 0) {
        visit(m);
        return;
    }
    rec(rec, 0);
}

inline Matching relabelled(const Matching& m, std::uint8_t x, std::uint8_t y) {
    // conjugate the matching by the transposition (x y)
    auto swap_id = [&](std::uint8_t v) { return v == x ? y : (v == y ? x : v); };
    Matching r;
    r.size = m.size;
    for (std::uint8_t i = 0; i < m.size; ++i) r.partner[swap_id(i)] = swap_id(m.partner[i]);
    return r;
}

}  // namespace detail

/// Enumerates every leg-labelled matching and groups them into isomorphism
/// classes under the leg-relabelling group; class automorphism orders come
/// out of orbit-stabilizer. Odd parity yields the empty groupoid.
inline DiagramGroupoid enumerate_diagrams(std::uint32_t k, std::uint32_t l,
                                          const std::vector<std::uint32_t>& valences) {
    DiagramShape shape(k, l, valences);
    DiagramGroupoid out;
    out.out_points = k;
    out.in_points = l;
    out.valences = valences;
    out.labelled_count = Natural(0);
    out.cardinality = Rational(0);
    if (shape.odd_parity()) return out;

    std::vector<Matching> all;
    detail::enumerate_matchings(shape, [&](const Matching& m) {
        if (all.size() >= kMatchingCap)
            throw Error(ErrorCode::Size, "labelled matching count exceeds the enumeration cap");
        all.push_back(m);
    });
    out.labelled_count = Natural(all.size());

    Natural group_order = shape.leg_group_order();
    auto gens = shape.leg_transpositions();

    std::unordered_map<Matching, std::uint32_t, MatchingHash> cls;
    cls.reserve(all.size() * 2);
    for (const auto& m : all) cls.emplace(m, UINT32_MAX);
    std::uint32_t next_class = 0;
    for (const auto& seed : all) {
        if (cls[seed] != UINT32_MAX) continue;
        std::vector<Matching> frontier{seed};
        cls[seed] = next_class;
        std::size_t orbit = 1;
        while (!frontier.empty()) {
            Matching cur = frontier.back();
            frontier.pop_back();
            for (auto [x, y] : gens) {
                Matching img = detail::relabelled(cur, x, y);
                auto it = cls.find(img);
                if (it == cls.end())
                    throw Error(ErrorCode::Size, "leg relabelling left the matching set");
                if (it->second == UINT32_MAX) {
                    it->second = next_class;
                    ++orbit;
                    frontier.push_back(img);
                }
            }
        }
        Natural orbit_n(orbit);
        out.classes.push_back({seed, group_order / orbit_n, orbit_n});
        ++next_class;
    }

    out.cardinality = Rational(Integer(out.labelled_count), group_order);
    // double-count identity: sum of 1/aut over classes must match
    Rational by_classes(0);
    for (const auto& c : out.classes)
        by_classes += Rational(Integer(1), c.aut_order);
    if (by_classes != out.cardinality)
        throw Error(ErrorCode::Size, "class/labelled double count mismatch");
    return out;
}

/// Cardinality-only route: counts labelled matchings and divides by the leg
/// group order, skipping the classing pass.
inline Rational vev(std::uint32_t k, std::uint32_t l,
                    const std::vector<std::uint32_t>& valences) {
    DiagramShape shape(k, l, valences);
    if (shape.odd_parity()) return Rational(0);
    std::uint64_t count = 0;
    detail::enumerate_matchings(shape, [&](const Matching&) {
        if (++count > kMatchingCap)
            throw Error(ErrorCode::Size, "labelled matching count exceeds the enumeration cap");
    });
    return Rational(Integer(Natural(count)), shape.leg_group_order());
}

}  // namespace fockcat
