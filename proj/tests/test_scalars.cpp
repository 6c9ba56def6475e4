#include "intalg/gaussian.hpp"
#include "intalg/structures.hpp"

#include <doctest.h>

#include <random>

using namespace intalg;

namespace {

GaussianRational random_gaussian(std::mt19937_64& rng) {
    return {random_rational(rng), random_rational(rng)};
}

}  // namespace

TEST_CASE("gaussian rational field arithmetic") {
    GaussianRational i = GaussianRational::i();
    GaussianRational one(1);

    CHECK((one + i) * (one - i) == GaussianRational(2));
    CHECK((GaussianRational(Rational(1, 2), Rational(1)) + GaussianRational(Rational(1, 2), Rational(-1))) ==
          one);

    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
        GaussianRational x = random_gaussian(rng);
        CHECK(x / one == x);
    }

    CHECK_THROWS_AS(one / GaussianRational(0), std::domain_error);
}

TEST_CASE("field axioms on random gaussian rationals") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 100; ++k) {
        GaussianRational a = random_gaussian(rng);
        GaussianRational b = random_gaussian(rng);
        GaussianRational c = random_gaussian(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            GaussianRational inv = GaussianRational(1) / a;
            CHECK(a * inv == GaussianRational(1));
        }
    }
}

TEST_CASE("strip shift examples") {
    auto [b1, n1] = strip_shift(GaussianRational(Rational(5, 2)), Rational(1));
    CHECK(b1 == GaussianRational(Rational(1, 2)));
    CHECK(n1 == 2);

    auto [b2, n2] = strip_shift(GaussianRational(Rational(-3, 2), Rational(1)), Rational(1));
    CHECK(b2 == GaussianRational(Rational(1, 2), Rational(1)));
    CHECK(n2 == -2);

    auto [b3, n3] = strip_shift(GaussianRational(0), Rational(-2));
    CHECK(b3 == GaussianRational(0));
    CHECK(n3 == 0);

    CHECK_THROWS_AS(strip_shift(GaussianRational(1), Rational(0)), std::domain_error);
}

TEST_CASE("strip shift is the unique representative") {
    std::mt19937_64 rng(23);
    const Rational lambdas[] = {Rational(1), Rational(-2), Rational(1, 2), Rational(-5, 3)};
    for (int k = 0; k < 200; ++k) {
        GaussianRational alpha = random_gaussian(rng);
        for (const Rational& lambda : lambdas) {
            auto [beta, n] = strip_shift(alpha, lambda);
            CHECK(alpha == beta + GaussianRational(Rational(n) * lambda));
            CHECK(beta.im == alpha.im);
            CHECK(beta.re >= 0);
            CHECK(beta.re < abs_rational(lambda));
            // neighbours leave the strip
            for (int d : {-1, 1}) {
                Rational other = alpha.re - (Rational(n) + d) * lambda;
                CHECK((other < 0 || other >= abs_rational(lambda)));
            }
        }
    }
}

TEST_CASE("textual round trip") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(Rational(-6, 8)) == "-3/4");
    CHECK(to_string(GaussianRational(Rational(1, 2), Rational(-2, 3))) == "1/2-2/3*I");
    CHECK(to_string(GaussianRational(Rational(0), Rational(1))) == "I");
    CHECK(to_string(GaussianRational(Rational(0), Rational(-1))) == "-I");
    CHECK(to_string(GaussianRational(0)) == "0");
    CHECK_THROWS_AS(parse_rational("zebra"), std::invalid_argument);
}
