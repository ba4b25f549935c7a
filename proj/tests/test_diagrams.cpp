#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "fockcat/diagrams.hpp"
#include "fockcat/weyl.hpp"

using namespace fockcat;

namespace {

/// All elements of the leg group as permutations of the half-edge ids,
/// used as a brute-force stabilizer oracle for small shapes.
std::vector<std::vector<std::uint8_t>> leg_group_elements(const DiagramShape& shape) {
    std::vector<std::vector<std::uint8_t>> result;
    std::vector<std::uint8_t> base(shape.total_half_edges());
    std::iota(base.begin(), base.end(), 0);
    result.push_back(base);
    for (std::size_t v = 0; v < shape.valences().size(); ++v) {
        std::vector<std::uint8_t> legs(shape.valences()[v]);
        std::iota(legs.begin(), legs.end(), shape.vertex_base(v));
        std::vector<std::uint8_t> perm = legs;
        std::vector<std::vector<std::uint8_t>> extended;
        std::sort(perm.begin(), perm.end());
        do {
            for (const auto& g : result) {
                auto e = g;
                for (std::size_t i = 0; i < legs.size(); ++i) e[legs[i]] = g[perm[i]];
                extended.push_back(std::move(e));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        result = std::move(extended);
    }
    return result;
}

Matching apply_perm(const Matching& m, const std::vector<std::uint8_t>& p) {
    Matching r;
    r.size = m.size;
    for (std::uint8_t i = 0; i < m.size; ++i) r.partner[p[i]] = p[m.partner[i]];
    return r;
}

}  // namespace

TEST_CASE("the sixth-power vacuum diagram: 15 matchings, one class of aut order 48") {
    DiagramGroupoid g = enumerate_diagrams(0, 0, {6});
    CHECK(g.labelled_count == Natural(15));
    REQUIRE(g.classes.size() == 1);
    CHECK(g.classes[0].aut_order == Natural(48));
    CHECK(g.cardinality == Rational(1, 48));
    CHECK(vev(0, 0, {6}) == Rational(1, 48));
}

TEST_CASE("fourth power vacuum: 3 matchings, aut order 8") {
    DiagramGroupoid g = enumerate_diagrams(0, 0, {4});
    CHECK(g.labelled_count == Natural(3));
    REQUIRE(g.classes.size() == 1);
    CHECK(g.classes[0].aut_order == Natural(8));
    CHECK(g.cardinality == Rational(1, 8));
}

TEST_CASE("odd parity leaves the groupoid empty") {
    DiagramGroupoid g = enumerate_diagrams(0, 0, {3});
    CHECK(g.labelled_count.is_zero());
    CHECK(g.classes.empty());
    CHECK(g.cardinality == Rational(0));
    CHECK(vev(1, 0, {4}) == Rational(0));
}

TEST_CASE("one propagator vertex between single legs") {
    // in-leg/leg-out twice over, plus in-out with a vertex loop
    DiagramGroupoid g = enumerate_diagrams(1, 1, {2});
    CHECK(g.labelled_count == Natural(3));
    CHECK(g.cardinality == Rational(3, 2));
    REQUIRE(g.classes.size() == 2);
    // pass-through class: the two legs swap, trivial stabilizer
    CHECK(g.classes[0].orbit_size + g.classes[1].orbit_size == Natural(3));
}

TEST_CASE("no vertices: the bare inner product k! delta") {
    for (std::uint32_t k = 0; k <= 5; ++k)
        for (std::uint32_t l = 0; l <= 5; ++l) {
            Rational expected = k == l ? Rational::from_natural(factorial(k)) : Rational(0);
            CHECK(vev(k, l, {}) == expected);
        }
}

TEST_CASE("double-count identity holds on assorted shapes") {
    for (auto [k, l, vals] : std::vector<std::tuple<std::uint32_t, std::uint32_t,
                                                    std::vector<std::uint32_t>>>{
             {0, 0, {4, 2}}, {2, 0, {3, 3}}, {1, 1, {4}}, {2, 2, {2, 2}},
             {3, 1, {2, 4}}, {0, 2, {3, 3, 2}}}) {
        DiagramGroupoid g = enumerate_diagrams(k, l, vals);
        Rational by_classes(0);
        for (const auto& c : g.classes) by_classes += Rational(Integer(1), c.aut_order);
        Natural group(1);
        for (auto m : vals) group *= factorial(m);
        CHECK(by_classes == Rational(Integer(g.labelled_count), group));
        CHECK(by_classes == g.cardinality);
    }
}

TEST_CASE("class automorphism orders match brute-force stabilizers") {
    for (auto [k, l, vals] : std::vector<std::tuple<std::uint32_t, std::uint32_t,
                                                    std::vector<std::uint32_t>>>{
             {0, 0, {6}}, {1, 1, {2}}, {0, 0, {4, 2}}, {2, 0, {3, 3}}, {2, 2, {2, 2}}}) {
        DiagramShape shape(k, l, vals);
        auto group = leg_group_elements(shape);
        DiagramGroupoid g = enumerate_diagrams(k, l, vals);
        for (const auto& c : g.classes) {
            std::uint64_t stab = 0;
            for (const auto& p : group)
                if (apply_perm(c.representative, p) == c.representative) ++stab;
            CHECK(c.aut_order == Natural(stab));
        }
    }
}

TEST_CASE("weyl oracle: m! vev(k,l,[m]) = <z^k, phi^m z^l>") {
    for (std::uint32_t k = 0; k <= 4; ++k)
        for (std::uint32_t l = 0; l <= 4; ++l)
            for (std::uint32_t m = 0; m <= 6; ++m) {
                Rational lhs = vev(k, l, {m}) * Rational::from_natural(factorial(m));
                CHECK(lhs == field_power_expect(k, m, l));
            }
}

TEST_CASE("composing vertex layers inserts the inverse torsor factor") {
    // vev(k,l,[m1,m2]) = sum_j vev(k,j,[m2]) vev(j,l,[m1]) / j!
    for (auto [k, l, m1, m2] : std::vector<std::array<std::uint32_t, 4>>{
             {0, 0, 2, 2}, {0, 0, 4, 2}, {1, 1, 2, 2}, {2, 0, 3, 3}, {1, 1, 3, 3},
             {2, 2, 2, 4}}) {
        Rational direct = vev(k, l, {m1, m2});
        Rational summed(0);
        for (std::uint32_t j = 0; j <= l + m1; ++j)
            summed += vev(k, j, {m2}) * vev(j, l, {m1}) *
                      Rational(Integer(1), factorial(j));
        CHECK(direct == summed);
    }
}

TEST_CASE("multi-vertex values agree with the weyl matrix product") {
    // <z^k, (phi^{m2}/m2!)(phi^{m1}/m1!) z^l> with valences[0] acting first
    for (auto [k, l, m1, m2] : std::vector<std::array<std::uint32_t, 4>>{
             {0, 0, 2, 2}, {1, 1, 2, 2}, {0, 2, 3, 3}, {2, 0, 4, 2}}) {
        WeylElement op = WeylElement::pow(WeylElement::field(), m2) *
                         WeylElement::pow(WeylElement::field(), m1);
        Rational expect(0);
        for (const auto& [mono, coeff] : op.terms()) {
            if (mono.annihilators > l) continue;
            if (l - mono.annihilators + mono.creators != k) continue;
            Natural fall(1);
            for (std::uint32_t i = 0; i < mono.annihilators; ++i)
                fall = Natural::mul_small(fall, l - i);
            expect += coeff.to_rational() * Rational::from_natural(fall) *
                      Rational::from_natural(factorial(k));
        }
        Rational got = vev(k, l, {m1, m2}) * Rational::from_natural(factorial(m1)) *
                       Rational::from_natural(factorial(m2));
        CHECK(got == expect);
    }
}

TEST_CASE("scale bounds raise size errors") {
    CHECK_THROWS_AS(enumerate_diagrams(9, 0, {}), Error);
    CHECK_THROWS_AS(enumerate_diagrams(0, 0, {25}), Error);
    CHECK_THROWS_AS(vev(8, 8, {4, 4, 4}), Error); // 24 < 8+8+12
}
