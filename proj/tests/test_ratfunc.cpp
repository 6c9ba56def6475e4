#include "intalg/ratfunc.hpp"
#include "intalg/structures.hpp"

#include <doctest.h>

#include <random>

using namespace intalg;

namespace {

const GaussianRational kPoles[] = {
    GaussianRational(0),
    GaussianRational(1),
    GaussianRational(Rational(1, 2)),
    GaussianRational::i(),
    GaussianRational(Rational(1), Rational(1)),
};

GaussianRational random_coeff(std::mt19937_64& rng) {
    return {random_rational(rng), random_rational(rng)};
}

RatFunc random_ratfunc(std::mt19937_64& rng, int max_mult = 3, int max_deg = 4) {
    std::uniform_int_distribution<int> nfrac(0, 3);
    std::uniform_int_distribution<int> pole(0, 4);
    std::uniform_int_distribution<int> mult(1, max_mult);
    std::uniform_int_distribution<int> deg(-1, max_deg);
    RatFunc f;
    int d = deg(rng);
    if (d >= 0) {
        std::vector<GaussianRational> coeffs(static_cast<size_t>(d) + 1, GaussianRational(0));
        for (auto& c : coeffs) c = random_coeff(rng);
        f += RatFunc(GPoly(std::move(coeffs)));
    }
    int n = nfrac(rng);
    for (int i = 0; i < n; ++i) f.add_fraction(kPoles[pole(rng)], mult(rng), random_coeff(rng));
    return f;
}

GPoly linear(const GaussianRational& alpha) { return GPoly({-alpha, GaussianRational(1)}); }

}  // namespace

TEST_CASE("partial fractions") {
    // 1/(x(x-1)) = -1/x + 1/(x-1)
    RatFunc f = to_partial_fractions(GPoly(1), {{GaussianRational(0), 1}, {GaussianRational(1), 1}});
    RatFunc expect = RatFunc::fraction(GaussianRational(0), 1, GaussianRational(-1)) +
                     RatFunc::fraction(GaussianRational(1), 1, GaussianRational(1));
    CHECK(f == expect);

    // polynomial input passes through
    GPoly x2 = GPoly::x() * GPoly::x();
    RatFunc g = to_partial_fractions(x2, {});
    CHECK(g == RatFunc(x2));

    // a basis element stays itself
    RatFunc h = to_partial_fractions(GPoly(1), {{GaussianRational::i(), 2}});
    CHECK(h == RatFunc::fraction(GaussianRational::i(), 2, GaussianRational(1)));

    CHECK_THROWS_AS(to_partial_fractions(GPoly(1), {{GaussianRational(1), 1}, {GaussianRational(1), 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(to_partial_fractions(GPoly(1), {{GaussianRational(1), 0}}), std::invalid_argument);
    CHECK_THROWS_AS(divide_factored(RatFunc(1), GaussianRational(0), {}), std::domain_error);
}

TEST_CASE("partial fractions reconstruct the input") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> deg(0, 5);
    for (int k = 0; k < 40; ++k) {
        // random numerator over a random factored denominator
        int d = deg(rng);
        std::vector<GaussianRational> coeffs(static_cast<size_t>(d) + 1, GaussianRational(0));
        for (auto& c : coeffs) c = random_coeff(rng);
        GPoly num(std::move(coeffs));
        std::vector<std::pair<GaussianRational, int>> den = {{kPoles[k % 5], 1 + k % 3},
                                                             {kPoles[(k + 2) % 5], 1 + (k + 1) % 2}};
        RatFunc f = to_partial_fractions(num, den);
        // clear denominators again and compare numerators
        auto nd = f.to_num_den();
        GPoly lhs = num;
        for (auto& [alpha, m] : nd.den) {
            // num / den == nd.num / nd.den  =>  num * nd.den == nd.num * den
        }
        GPoly denp(GaussianRational(1)), ndenp(GaussianRational(1));
        for (auto& [alpha, m] : den) denp = denp * linear(alpha).pow(static_cast<unsigned>(m));
        for (auto& [alpha, m] : nd.den) ndenp = ndenp * linear(alpha).pow(static_cast<unsigned>(m));
        CHECK(num * ndenp == nd.num * denp);
    }
}

TEST_CASE("derivations") {
    RatFunc x = RatFunc::x();
    GaussianRational alpha(Rational(2), Rational(1));

    CHECK(d_dx(x * x * x) == RatFunc(GPoly({GaussianRational(0), GaussianRational(0), GaussianRational(3)})));
    CHECK(d_dx(RatFunc::fraction(alpha, 1, GaussianRational(1))) ==
          RatFunc::fraction(alpha, 2, GaussianRational(-1)));
    CHECK(d_dx(RatFunc(GaussianRational(7))).is_zero());

    CHECK(d_lambda(x, 1) == RatFunc(1));
    RatFunc f = RatFunc::fraction(GaussianRational(1), 1, GaussianRational(1));
    RatFunc df = d_lambda(f, 1);
    CHECK(df == RatFunc::fraction(GaussianRational(0), 1, GaussianRational(1)) +
                    RatFunc::fraction(GaussianRational(1), 1, GaussianRational(-1)));
    // spot check by evaluation
    for (int p : {2, 3, 5}) {
        GaussianRational point(p);
        CHECK(df.eval(point) == (f.eval(point + GaussianRational(1)) - f.eval(point)));
    }
    CHECK(d_lambda(RatFunc(GaussianRational(3)), 1).is_zero());
    CHECK_THROWS_AS(d_lambda(x, 0), std::domain_error);
}

TEST_CASE("difference quotient is a weighted derivation") {
    std::mt19937_64 rng(9);
    for (const Rational& lambda : {Rational(1), Rational(-2)}) {
        for (int k = 0; k < 30; ++k) {
            RatFunc f = random_ratfunc(rng, 2, 3);
            RatFunc g = random_ratfunc(rng, 2, 3);
            RatFunc lhs = d_lambda(f * g, lambda);
            RatFunc rhs = d_lambda(f, lambda) * g + f * d_lambda(g, lambda) +
                          (d_lambda(f, lambda) * d_lambda(g, lambda)).scaled(GaussianRational(lambda));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("falling factorial basis") {
    // ff(x,1) = x
    CHECK(falling_basis(1, Rational(3)) == GPoly::x());

    // x^2 = 2 ff(x,2) + ff(x,1) at weight 1
    FallingFactorialPoly ff = poly_to_falling(GPoly::x() * GPoly::x(), 1);
    FallingFactorialPoly expect{Rational(1)};
    expect.add(2, GaussianRational(2));
    expect.add(1, GaussianRational(1));
    CHECK(ff == expect);

    // ff(x,3) = x(x-l)(x-2l)/6
    for (const Rational& lambda : {Rational(1), Rational(1, 2), Rational(-2)}) {
        GPoly direct = GPoly::x() * linear(GaussianRational(lambda)) * linear(GaussianRational(lambda * 2));
        CHECK(falling_basis(3, lambda) == direct.scaled(GaussianRational(Rational(1, 6))));
    }

    // conversions are mutually inverse up to degree 8
    std::mt19937_64 rng(13);
    for (const Rational& lambda : {Rational(1), Rational(1, 2)}) {
        for (int k = 0; k < 20; ++k) {
            std::vector<GaussianRational> coeffs(9, GaussianRational(0));
            for (auto& c : coeffs) c = random_coeff(rng);
            GPoly p(std::move(coeffs));
            CHECK(falling_to_poly(poly_to_falling(p, lambda)) == p);
        }
    }

    // the difference quotient shifts the basis index down
    for (const Rational& lambda : {Rational(1), Rational(1, 2)}) {
        for (int n = 1; n <= 8; ++n) {
            RatFunc b(falling_basis(n, lambda));
            CHECK(d_lambda(b, lambda) == RatFunc(falling_basis(n - 1, lambda)));
        }
    }
}

TEST_CASE("quasi-antiderivative for the usual derivation") {
    GaussianRational alpha(Rational(2), Rational(-1));
    auto dec = quasi_antiderivative_0(RatFunc(GPoly::x() * GPoly::x()));
    CHECK(dec.q == RatFunc(GPoly({GaussianRational(0), GaussianRational(0), GaussianRational(0),
                                  GaussianRational(Rational(1, 3))})));
    CHECK(dec.t.is_zero());

    auto simple = quasi_antiderivative_0(RatFunc::fraction(alpha, 1, GaussianRational(1)));
    CHECK(simple.q.is_zero());
    CHECK(simple.t == RatFunc::fraction(alpha, 1, GaussianRational(1)));

    auto dbl = quasi_antiderivative_0(RatFunc::fraction(alpha, 2, GaussianRational(1)));
    CHECK(dbl.q == RatFunc::fraction(alpha, 1, GaussianRational(-1)));
    CHECK(dbl.t.is_zero());

    // Q(x^k) = x^{k+1}/(k+1)
    for (int k = 0; k <= 6; ++k) {
        std::vector<GaussianRational> mono(static_cast<size_t>(k) + 1, GaussianRational(0));
        mono.back() = GaussianRational(1);
        auto d = quasi_antiderivative_0(RatFunc(GPoly(std::move(mono))));
        std::vector<GaussianRational> up(static_cast<size_t>(k) + 2, GaussianRational(0));
        up.back() = GaussianRational(Rational(1, k + 1));
        CHECK(d.q == RatFunc(GPoly(std::move(up))));
        CHECK(d.t.is_zero());
    }
}

TEST_CASE("quasi-antiderivative for the difference quotient") {
    auto one = quasi_antiderivative_lambda(RatFunc(1), 1);
    CHECK(one.q == RatFunc::x());
    CHECK(one.t.is_zero());

    RatFunc g = RatFunc::fraction(GaussianRational(1), 1, GaussianRational(1)) -
                RatFunc::fraction(GaussianRational(0), 1, GaussianRational(1));
    auto tele = quasi_antiderivative_lambda(g, 1);
    CHECK(tele.q == RatFunc::fraction(GaussianRational(1), 1, GaussianRational(-1)));
    CHECK(tele.t.is_zero());

    RatFunc strip = RatFunc::fraction(GaussianRational(Rational(1, 2)), 1, GaussianRational(1));
    auto stay = quasi_antiderivative_lambda(strip, 1);
    CHECK(stay.q.is_zero());
    CHECK(stay.t == strip);

    CHECK_THROWS_AS(quasi_antiderivative_lambda(RatFunc(1), 0), std::domain_error);
}

TEST_CASE("section laws for both quasi-antiderivatives") {
    std::mt19937_64 rng(21);
    auto check_laws = [&](auto D, auto Q, int rounds) {
        for (int k = 0; k < rounds; ++k) {
            RatFunc f = random_ratfunc(rng);
            CHECK(D(Q(D(f))) == D(f));
            CHECK(Q(D(Q(f))) == Q(f));
        }
    };
    check_laws([](const RatFunc& f) { return d_dx(f); },
               [](const RatFunc& f) { return quasi_antiderivative_0(f).q; }, 50);
    for (const Rational& lambda : {Rational(1), Rational(-2)}) {
        check_laws([&](const RatFunc& f) { return d_lambda(f, lambda); },
                   [&](const RatFunc& f) { return quasi_antiderivative_lambda(f, lambda).q; }, 50);
    }
}

TEST_CASE("strip decomposition properties") {
    std::mt19937_64 rng(27);
    for (const Rational& lambda : {Rational(1), Rational(-2)}) {
        for (int k = 0; k < 50; ++k) {
            RatFunc f = random_ratfunc(rng);
            auto [q, t] = quasi_antiderivative_lambda(f, lambda);
            CHECK(f == d_lambda(q, lambda) + t);
            for (auto& [key, c] : t.fracs()) {
                CHECK(key.alpha.re >= 0);
                CHECK(key.alpha.re < abs_rational(lambda));
            }
            CHECK(t.poly().is_zero());
            CHECK(q.poly().coeff(0) == GaussianRational(0));

            // anything already a difference quotient has no transcendental part
            RatFunc g = random_ratfunc(rng, 2, 3);
            auto im = quasi_antiderivative_lambda(d_lambda(g, lambda), lambda);
            CHECK(im.t.is_zero());
        }
    }
}

TEST_CASE("strip fractions multiply into strip fractions") {
    std::mt19937_64 rng(33);
    const Rational lambda(1);
    const GaussianRational strip_poles[] = {GaussianRational(0), GaussianRational(Rational(1, 2)),
                                            GaussianRational(Rational(1, 3), Rational(1)),
                                            GaussianRational(Rational(0), Rational(-2))};
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 4; ++j) {
            if (i == j) continue;
            RatFunc prod = RatFunc::fraction(strip_poles[i], 1, random_coeff(rng)) *
                           RatFunc::fraction(strip_poles[j], 1, random_coeff(rng));
            CHECK(prod.poly().is_zero());
            for (auto& [key, c] : prod.fracs()) {
                CHECK(key.alpha.re >= 0);
                CHECK(key.alpha.re < abs_rational(lambda));
            }
        }
    }
}

TEST_CASE("the evaluation is not multiplicative on rational functions") {
    RatFunc x = RatFunc::x();
    RatFunc invx = RatFunc::fraction(GaussianRational(0), 1, GaussianRational(1));
    auto E = [](const RatFunc& f) {
        RatFunc df = d_dx(f);
        return f - quasi_antiderivative_0(df).q;
    };
    CHECK(E(x * invx) == RatFunc(1));
    CHECK(E(x).is_zero());
    CHECK(E(invx).is_zero());
    CHECK(E(x * invx) != E(x) * E(invx));
}

TEST_CASE("kernel of the difference quotient on the representable fragment") {
    // nonconstant generators have nonzero difference quotient
    for (const Rational& lambda : {Rational(1), Rational(-2)}) {
        CHECK_FALSE(d_lambda(RatFunc::x(), lambda).is_zero());
        for (auto& alpha : kPoles)
            for (int m = 1; m <= 3; ++m)
                CHECK_FALSE(d_lambda(RatFunc::fraction(alpha, m, GaussianRational(1)), lambda).is_zero());
        std::mt19937_64 rng(41);
        for (int k = 0; k < 60; ++k) {
            RatFunc f = random_ratfunc(rng, 3, 3);
            RatFunc nonconst = f - RatFunc(f.poly().coeff(0));
            if (nonconst.is_zero()) continue;
            CHECK_FALSE(d_lambda(nonconst, lambda).is_zero());
        }
        CHECK(d_lambda(RatFunc(GaussianRational(Rational(3, 7), Rational(1))), lambda).is_zero());
    }
}
