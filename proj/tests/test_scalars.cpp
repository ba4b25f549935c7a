#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "fockcat/bigint.hpp"
#include "fockcat/phased.hpp"
#include "fockcat/rational.hpp"

using namespace fockcat;

TEST_CASE("natural arithmetic round-trips through decimal") {
    Natural a = Natural::from_decimal("123456789012345678901234567890");
    CHECK(a.to_decimal() == "123456789012345678901234567890");
    CHECK((a + Natural(1) - Natural(1)) == a);
    Natural sq = a * a;
    Natural rem;
    CHECK(Natural::divmod(sq, a, rem) == a);
    CHECK(rem.is_zero());
    CHECK(Natural::gcd(Natural(48), Natural(36)) == Natural(12));
    CHECK(Natural::gcd(sq, a) == a);
}

TEST_CASE("division identity and gcd laws on random wide values") {
    std::mt19937_64 rng(31337);
    auto random_natural = [&](int limbs) {
        Natural n(1);
        for (int i = 0; i < limbs; ++i)
            n = n * Natural(rng() | 1) + Natural(rng() % 1000);
        return n;
    };
    for (int trial = 0; trial < 200; ++trial) {
        Natural a = random_natural(1 + trial % 4);
        Natural b = random_natural(1 + (trial / 2) % 3);
        if (b.is_zero()) continue;
        Natural rem;
        Natural q = Natural::divmod(a, b, rem);
        CHECK(q * b + rem == a);
        CHECK(rem < b);

        Natural g = Natural::gcd(a, b);
        if (!a.is_zero()) {
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
            CHECK(Natural::gcd(a / g, b / g) == Natural(1));
        }
    }
}

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == Natural(1));
    CHECK(factorial(6) == Natural(720));
    CHECK(factorial(20).to_decimal() == "2432902008176640000");
    CHECK(binomial(6, 2) == Natural(15));
    CHECK(binomial(10, 5) == Natural(252));
    CHECK(binomial(3, 7).is_zero());
}

TEST_CASE("integer sign handling") {
    Integer a(-5), b(3);
    CHECK((a + b) == Integer(-2));
    CHECK((a * b) == Integer(-15));
    CHECK((a - a).is_zero());
    CHECK(Integer::from_decimal("-12").to_i64() == -12);
}

TEST_CASE("rational reduction and comparison") {
    Rational r(Integer(6), Natural(8));
    CHECK(r == Rational(3, 4));
    CHECK(r.to_string() == "3/4");
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(1, 2) - Rational(3, 4)) == Rational(-1, 4));
    CHECK(Rational(-1, 4).to_string() == "-1/4");
    CHECK(Rational::parse("15/720") == Rational(1, 48));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("angle normalization stays in [0,1) and exactness is preserved") {
    Angle t = Angle::turns(Rational(5, 4));
    CHECK(t.exact_turns() == Rational(1, 4));
    CHECK((t + Angle::turns(Rational(3, 4))).is_zero());
    CHECK(Angle::turns(Rational(-1, 4)).exact_turns() == Rational(3, 4));
    CHECK(Angle::half_turn().negated() == Angle::half_turn());
    CHECK(Angle::quarter_turn().scaled(3).exact_turns() == Rational(3, 4));
    CHECK_FALSE((Angle::quarter_turn() + Angle::radians(0.5)).is_exact());
}

TEST_CASE("h maps quarter-turn multiples to exact components") {
    CHECK(h(PhasedScalar(Rational(1))) == std::complex<double>(1.0, 0.0));
    PhasedScalar interference = PhasedScalar(Rational(1)) + PhasedScalar(Rational(1), Angle::half_turn());
    CHECK(h(interference) == std::complex<double>(0.0, 0.0));
    CHECK(h(PhasedScalar(Rational(3, 2), Angle::quarter_turn())) == std::complex<double>(0.0, 1.5));
}

TEST_CASE("phased scalars act as plain rationals when unphased") {
    PhasedScalar a(Rational(2, 3));
    PhasedScalar b(Rational(1, 3));
    CHECK((a + b).to_rational() == Rational(1));
    CHECK((a * b).to_rational() == Rational(2, 9));
    CHECK(a.is_rational());
    CHECK_FALSE(PhasedScalar(Rational(1), Angle::half_turn()).is_rational());
}

TEST_CASE("interference is formal until h is applied") {
    PhasedScalar x = PhasedScalar(Rational(1)) + PhasedScalar(Rational(1), Angle::half_turn());
    CHECK_FALSE(x.is_zero()); // the formal object keeps both terms
    CHECK(x.terms().size() == 2);
    CHECK(h(x) == std::complex<double>(0.0, 0.0));
}

namespace {

PhasedScalar random_phased(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), mag(0, 6), denom(1, 4), numer(0, 7);
    PhasedScalar x;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Rational m(mag(rng), static_cast<std::uint64_t>(denom(rng)));
        int d = denom(rng) * 2;
        Angle a = Angle::turns(Rational(numer(rng) % d, static_cast<std::uint64_t>(d)));
        x += PhasedScalar(m, a);
    }
    return x;
}

}  // namespace

TEST_CASE("phased scalar rig laws and h homomorphism, randomized") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 500; ++trial) {
        PhasedScalar x = random_phased(rng), y = random_phased(rng), z = random_phased(rng);
        CHECK((x + y) == (y + x));
        CHECK((x * y) == (y * x));
        CHECK(((x + y) + z) == (x + (y + z)));
        CHECK(((x * y) * z) == (x * (y * z)));
        CHECK((x * (y + z)) == (x * y + x * z));

        std::complex<double> hx = h(x), hy = h(y);
        CHECK(std::abs(h(x + y) - (hx + hy)) < 1e-12);
        CHECK(std::abs(h(x * y) - (hx * hy)) < 1e-12);
    }
}

TEST_CASE("conjugation negates angles and fixes rationals") {
    PhasedScalar x = PhasedScalar(Rational(2), Angle::quarter_turn()) + PhasedScalar(Rational(1));
    PhasedScalar xc = x.conjugated();
    CHECK(std::abs(h(xc) - std::conj(h(x))) < 1e-15);
    CHECK(xc.conjugated() == x);
}
