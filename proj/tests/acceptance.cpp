// Acceptance suite: runs every advertised guarantee end to end and prints one
// pass/fail line per criterion, with its runtime budget enforced.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fockcat/diagrams.hpp"
#include "fockcat/evolution.hpp"
#include "fockcat/groupoid.hpp"
#include "fockcat/query.hpp"
#include "fockcat/species.hpp"
#include "fockcat/stuff_type.hpp"
#include "fockcat/weyl.hpp"

using namespace fockcat;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && elapsed > budget_seconds)
        error = "runtime " + std::to_string(elapsed) + "s exceeds budget " +
                std::to_string(budget_seconds) + "s";
    if (error.empty()) {
        std::printf("[PASS] criterion %2d: %s (%.3f s)\n", number, name.c_str(), elapsed);
    } else {
        std::printf("[FAIL] criterion %2d: %s (%.3f s): %s\n", number, name.c_str(), elapsed,
                    error.c_str());
        ++failures;
    }
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

std::vector<Natural> catalan_numbers(std::size_t count) {
    std::vector<Natural> cat{Natural(1)};
    for (std::size_t n = 1; n < count; ++n) {
        Natural c(0);
        for (std::size_t k = 0; k < n; ++k) c += cat[k] * cat[n - 1 - k];
        cat.push_back(c);
    }
    return cat;
}

std::vector<Natural> bell_numbers(std::size_t count) {
    std::vector<Natural> bell{Natural(1)};
    std::vector<Natural> row{Natural(1)};
    for (std::size_t i = 1; i < count; ++i) {
        std::vector<Natural> next{row.back()};
        for (std::size_t j = 0; j < row.size(); ++j) next.push_back(next.back() + row[j]);
        bell.push_back(next.front());
        row = std::move(next);
    }
    return bell;
}

StuffType random_stuff(std::mt19937& rng, std::size_t trunc) {
    std::uniform_int_distribution<int> npoints(0, 3), denom(1, 24), numer(1, 4);
    StuffType t(trunc);
    for (std::size_t n = 0; n <= trunc; ++n) {
        SkeletalGroupoid fiber;
        int pts = npoints(rng);
        for (int i = 0; i < pts; ++i)
            fiber = fiber + SkeletalGroupoid::point(
                                Rational(numer(rng), static_cast<std::uint64_t>(denom(rng))));
        t.fiber(n) = fiber;
    }
    return t;
}

std::uint64_t team_seed() { return 0x5eedULL; }

PhasedScalar random_phased(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), mag(0, 6), denom(1, 4), numer(0, 7);
    PhasedScalar x;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        int d = denom(rng) * 2;
        x += PhasedScalar(Rational(mag(rng), static_cast<std::uint64_t>(denom(rng))),
                          Angle::turns(Rational(numer(rng) % d, static_cast<std::uint64_t>(d))));
    }
    return x;
}

void criterion_catalan() {
    Json result = query_solve("B = Z + B^2", 12);
    auto cat = catalan_numbers(12);
    require(result["gf"]["coeffs"][0] == "0", "constant term");
    for (std::size_t n = 1; n <= 12; ++n)
        require(result["gf"]["coeffs"][n].get<std::string>() == cat[n - 1].to_decimal(),
                "gf coefficient " + std::to_string(n));
}

void criterion_fock_inner() {
    for (std::size_t n = 0; n <= 8; ++n)
        for (std::size_t m = 0; m <= 8; ++m) {
            StuffType zn = StuffType::from_species(
                Species::pow(Species::singleton(8), n, 8));
            StuffType zm = StuffType::from_species(
                Species::pow(Species::singleton(8), m, 8));
            Rational got = inner_product(zn, zm).cardinality().to_rational();
            Rational expected = n == m ? Rational::from_natural(factorial(n)) : Rational(0);
            require(got == expected, "inner(Z^" + std::to_string(n) + ", Z^" + std::to_string(m) +
                                         ") = " + got.to_string());
        }
}

void criterion_commutation() {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        StuffType psi = random_stuff(rng, 16);
        auto lhs = psi.created().annihilated().cardinality();  // A A* Psi
        auto rhs = psi.annihilated().created().cardinality();  // A* A Psi
        auto base = psi.cardinality();
        for (std::size_t n = 0; n <= 15; ++n)
            require(lhs[n] == rhs[n] + base[n],
                    "AA* - A*A != 1 at trial " + std::to_string(trial) + ", degree " +
                        std::to_string(n));
    }
}

void criterion_weak_quotient() {
    // the worked example: Z_2 swapping two of three elements
    SkeletalGroupoid swap3 = weak_quotient(3, PermAction{3, {{1, 0, 2}}});
    require(swap3.cardinality().to_rational() == Rational(3, 2), "Z_2-on-3 is 3/2");

    // actions with group order <= 120: either a single cycle, or generators
    // supported on a shared subset of at most five points (inside an S_5)
    std::mt19937 rng(team_seed());
    for (int accepted = 0; accepted < 100; ++accepted) {
        std::uniform_int_distribution<std::size_t> size_dist(1, 10);
        std::size_t n = size_dist(rng);
        PermAction act{n, {}};
        std::uniform_int_distribution<int> style_dist(0, 2);
        int style = style_dist(rng);
        if (style == 0 && n >= 2) {
            std::uniform_int_distribution<std::size_t> len_dist(2, n);
            std::size_t len = len_dist(rng);
            Permutation p = identity_permutation(n);
            for (std::size_t i = 0; i < len; ++i)
                p[i] = static_cast<std::uint32_t>((i + 1) % len);
            act.generators.push_back(p);
        } else if (style == 1) {
            std::vector<std::uint32_t> support = identity_permutation(n);
            std::shuffle(support.begin(), support.end(), rng);
            support.resize(std::min<std::size_t>(n, 5));
            std::uniform_int_distribution<int> gens_dist(1, 2);
            int gens = gens_dist(rng);
            for (int i = 0; i < gens; ++i) {
                std::vector<std::uint32_t> image = support;
                std::shuffle(image.begin(), image.end(), rng);
                Permutation p = identity_permutation(n);
                for (std::size_t j = 0; j < support.size(); ++j) p[support[j]] = image[j];
                act.generators.push_back(p);
            }
        } // style 2: the trivial group
        std::size_t order = group_closure(act).size();
        require(order <= 120, "generated group unexpectedly large");
        Rational got = weak_quotient(n, act).cardinality().to_rational();
        require(got == Rational(Integer(Natural(n)), Natural(order)),
                "|X//G| != |X|/|G| for n=" + std::to_string(n));
    }
}

void criterion_vacuum() {
    DiagramGroupoid g = enumerate_diagrams(0, 0, {6});
    require(g.labelled_count == Natural(15), "labelled count 15");
    require(g.classes.size() == 1, "single class");
    require(g.classes[0].aut_order == Natural(48), "aut order 48");
    require(g.cardinality == Rational(1, 48), "cardinality 1/48");
}

void criterion_diagram_weyl() {
    for (std::uint32_t k = 0; k <= 4; ++k)
        for (std::uint32_t l = 0; l <= 4; ++l)
            for (std::uint32_t m = 0; m <= 6; ++m) {
                Rational lhs = vev(k, l, {m}) * Rational::from_natural(factorial(m));
                require(lhs == field_power_expect(k, m, l),
                        "vev*m! != expectation at k=" + std::to_string(k) +
                            " l=" + std::to_string(l) + " m=" + std::to_string(m));
            }
}

void criterion_composition() {
    Species partitions = species_compose(Species::set(8), Species::nonempty_set(8));
    auto bell = bell_numbers(9);
    auto gf = partitions.gf();
    for (std::size_t n = 0; n <= 8; ++n)
        require(gf[n] == Rational(Integer(bell[n]), factorial(n)),
                "Bell coefficient " + std::to_string(n));
    try {
        species_compose(Species::set(8), Species::set(8));
        require(false, "E of E must raise COMPOSE_CONST");
    } catch (const Error& e) {
        require(e.code() == ErrorCode::ComposeConst, "wrong error code for E of E");
    }
}

void criterion_interference() {
    StuffType psi(4);
    psi.fiber(2) = SkeletalGroupoid::point(Rational(1), Angle::zero()) +
                   SkeletalGroupoid::point(Rational(1), Angle::half_turn());
    std::complex<double> amp = h(psi.cardinality()[2]);
    require(amp == std::complex<double>(0.0, 0.0), "amplitude must vanish exactly");
    require(!psi.cardinality()[2].is_zero(), "the formal cardinality keeps both terms");
}

void criterion_evolution() {
    double T = 0.5;
    std::vector<double> gs{0.1, 0.05, 0.025};
    std::vector<double> errs;
    for (double g : gs) {
        PerturbationSpec spec;
        spec.potential = {{3, g}};
        spec.total_time = T;
        spec.dyson_order = 2;
        spec.fock_cutoff = 16;
        std::complex<double> dyson = dyson_amplitude(0, 1, spec);
        std::complex<double> exact = exact_amplitude(0, 1, spec);
        errs.push_back(std::abs(dyson - exact));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        double x = std::log(gs[i]), y = std::log(errs[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = static_cast<double>(gs.size());
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    require(std::abs(slope - 3.0) <= 0.3,
            "log-log slope " + std::to_string(slope) + " outside 3 +- 0.3");

    PerturbationSpec free;
    free.potential = {{3, 0.0}};
    free.total_time = T;
    free.dyson_order = 2;
    free.fock_cutoff = 16;
    for (std::uint32_t k = 0; k <= 3; ++k)
        require(std::abs(dyson_amplitude(k, k, free) - exact_amplitude(k, k, free)) < 1e-12,
                "V=0 disagreement at k=" + std::to_string(k));
}

void criterion_phased_rig() {
    std::mt19937 rng(team_seed() + 1);
    for (int trial = 0; trial < 500; ++trial) {
        PhasedScalar x = random_phased(rng), y = random_phased(rng), z = random_phased(rng);
        require((x + y) == (y + x), "commutative +");
        require((x * y) == (y * x), "commutative *");
        require(((x + y) + z) == (x + (y + z)), "associative +");
        require(((x * y) * z) == (x * (y * z)), "associative *");
        require((x * (y + z)) == (x * y + x * z), "distributivity");
        require(std::abs(h(x * y) - h(x) * h(y)) < 1e-12, "h multiplicative");
        require(std::abs(h(x + y) - (h(x) + h(y))) < 1e-12, "h additive");
    }
}

}  // namespace

int main() {
    criterion(1, "Catalan numbers from B = Z + B^2", 1.0, criterion_catalan);
    criterion(2, "Fock inner product n! delta up to 8", 1.0, criterion_fock_inner);
    criterion(3, "ladder commutation on 50 random stuff types", 5.0, criterion_commutation);
    criterion(4, "weak quotient law on 100 random actions", 10.0, criterion_weak_quotient);
    criterion(5, "vacuum expectation <1, phi^6//S_6 1> = 1/48", 1.0, criterion_vacuum);
    criterion(6, "diagram/Weyl oracle equivalence k,l<=4, m<=6", 30.0, criterion_diagram_weyl);
    criterion(7, "set partitions compose to Bell numbers; E of E fails", 1.0,
              criterion_composition);
    criterion(8, "destructive interference of opposite phases", 1.0, criterion_interference);
    criterion(9, "Dyson order-2 error scales as g^3 against the exponential", 60.0,
              criterion_evolution);
    criterion(10, "phased-scalar rig laws and the homomorphism h", 5.0, criterion_phased_rig);

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
