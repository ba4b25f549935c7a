#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "fockcat/series.hpp"

using namespace fockcat;

namespace {

using RSeries = PowerSeries<Rational>;

RSeries ones(std::size_t trunc) { // 1/(1-z)
    RSeries s(trunc);
    for (std::size_t n = 0; n <= trunc; ++n) s[n] = Rational(1);
    return s;
}

RSeries exp_series(std::size_t trunc) {
    RSeries s(trunc);
    for (std::size_t n = 0; n <= trunc; ++n) s[n] = Rational(Integer(1), factorial(n));
    return s;
}

/// Independent composition oracle: expand sum_k f_k g(z)^k by repeated
/// convolution, never through Horner.
RSeries compose_oracle(const RSeries& f, const RSeries& g) {
    std::size_t trunc = std::min(f.truncation(), g.truncation());
    RSeries acc = RSeries::constant(f[0], trunc);
    RSeries gpow = RSeries::constant(Rational(1), trunc);
    for (std::size_t k = 1; k <= trunc; ++k) {
        gpow = gpow * g;
        for (std::size_t n = 0; n <= trunc; ++n) acc[n] += f[k] * gpow[n];
    }
    return acc;
}

/// Bell numbers by the Bell triangle recurrence.
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

RSeries random_series(std::mt19937& rng, std::size_t trunc, bool zero_constant) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    RSeries s(trunc);
    for (std::size_t n = zero_constant ? 1 : 0; n <= trunc; ++n)
        s[n] = Rational(num(rng), static_cast<std::uint64_t>(den(rng)));
    return s;
}

}  // namespace

TEST_CASE("multiplication against direct convolution") {
    RSeries g = ones(8);
    RSeries sq = g * g;
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(sq[n] == Rational(static_cast<std::int64_t>(n + 1)));

    RSeries f = RSeries::identity(8);
    RSeries zn = f;
    for (int k = 1; k < 4; ++k) zn = zn * f;
    CHECK(zn[4] == Rational(1));
    CHECK(zn[3] == Rational(0));

    CHECK((g * RSeries::constant(Rational(1), 8)) == g);
}

TEST_CASE("composition: exp(exp(z)-1) gives Bell numbers over factorials") {
    RSeries em1 = exp_series(8);
    em1[0] = Rational(0);
    RSeries bell_gf = compose(exp_series(8), em1);
    auto bell = bell_numbers(9);
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(bell_gf[n] == Rational(Integer(bell[n]), factorial(n)));
}

TEST_CASE("composition hand cases") {
    RSeries f(4);
    f[2] = Rational(1); // z^2
    RSeries g(4);
    g[1] = Rational(1);
    g[2] = Rational(1); // z + z^2
    RSeries c = compose(f, g);
    CHECK(c[2] == Rational(1));
    CHECK(c[3] == Rational(2));
    CHECK(c[4] == Rational(1));
    CHECK(c[0] == Rational(0));
    CHECK(c[1] == Rational(0));

    CHECK(compose(f, RSeries::identity(4)) == f);
}

TEST_CASE("composition requires zero constant term") {
    RSeries f = exp_series(4);
    CHECK_THROWS_AS(compose(f, f), Error);
    try {
        compose(f, f);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ComposeConst);
    }
}

TEST_CASE("composition equals brute-force expansion, randomized") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        RSeries f = random_series(rng, 8, false);
        RSeries g = random_series(rng, 8, true);
        CHECK(compose(f, g) == compose_oracle(f, g));
    }
}

TEST_CASE("derivative and evaluation") {
    RSeries e = exp_series(10);
    RSeries d = e.derivative();
    for (std::size_t n = 0; n <= 9; ++n) CHECK(d[n] == e[n]);

    RSeries p(2);
    p[0] = Rational(1);
    p[1] = Rational(1);
    p[2] = Rational(1);
    CHECK(p.eval(Rational(2)) == Rational(7));

    CHECK(RSeries::constant(Rational(5), 3).derivative() == RSeries(2));
}

TEST_CASE("shift is multiplication by z") {
    RSeries e = exp_series(5);
    RSeries z = e.shifted_up();
    CHECK(z[0] == Rational(0));
    for (std::size_t n = 1; n <= 5; ++n) CHECK(z[n] == e[n - 1]);
}
