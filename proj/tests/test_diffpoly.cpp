#include "intalg/diffpoly.hpp"
#include "intalg/structures.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace intalg;

namespace {

DiffMonomial mono(std::initializer_list<std::pair<const int, int>> exps) {
    return DiffMonomial(std::map<int, int>(exps));
}

// all monomials with order <= max_order and total degree <= max_degree
std::vector<DiffMonomial> enumerate_monomials(int max_order, int max_degree) {
    std::vector<DiffMonomial> out;
    std::vector<int> exps(static_cast<size_t>(max_order) + 1, 0);
    for (;;) {
        int total = 0;
        for (int e : exps) total += e;
        if (total <= max_degree) {
            std::map<int, int> m;
            for (int i = 0; i <= max_order; ++i)
                if (exps[static_cast<size_t>(i)] > 0) m[i] = exps[static_cast<size_t>(i)];
            out.push_back(DiffMonomial(std::move(m)));
        }
        size_t pos = 0;
        while (pos < exps.size() && exps[pos] == max_degree) exps[pos++] = 0;
        if (pos == exps.size()) break;
        ++exps[pos];
    }
    return out;
}

}  // namespace

TEST_CASE("monomial order and functional classification") {
    CHECK(DiffMonomial::one().order() == -1);
    CHECK(DiffMonomial::jet(0).order() == 0);
    CHECK(mono({{0, 2}, {3, 1}}).order() == 3);

    CHECK(DiffMonomial::jet(0).is_functional());
    CHECK_FALSE(mono({{0, 1}, {1, 1}}).is_functional());
    CHECK(mono({{1, 2}}).is_functional());
    CHECK(DiffMonomial::one().is_functional());
}

TEST_CASE("derivation on small examples") {
    DiffPoly u0 = DiffPoly::jet(0);
    DiffPoly u1 = DiffPoly::jet(1);
    DiffPoly u2 = DiffPoly::jet(2);

    CHECK(d_poly(u0, Rational(5, 7)) == u1);
    CHECK(d_poly(u0 * u0, 0) == u0 * u1 + u0 * u1);
    CHECK(d_poly(u0 * u0, 1) == u0 * u1 + u0 * u1 + u1 * u1);
    CHECK(d_poly(DiffPoly(1), 1).is_zero());
    CHECK(d_poly(DiffPoly(Rational(-3, 2)), 0).is_zero());

    // closed form on u u'
    DiffMonomial m01 = mono({{0, 1}, {1, 1}});
    CHECK(d_monomial_closed(DiffMonomial::jet(0), 2) == u1);
    CHECK(d_monomial_closed(m01, 0) == u1 * u1 + u0 * u2);
    CHECK(d_monomial_closed(m01, 1) == u1 * u1 + u0 * u2 + u1 * u2);
}

TEST_CASE("derivation axiom and closed-form oracle") {
    std::mt19937_64 rng(3);
    const Rational lambdas[] = {Rational(0), Rational(1), Rational(-2)};
    for (const Rational& lambda : lambdas) {
        for (int k = 0; k < 60; ++k) {
            DiffPoly p = random_diff_poly(rng, 3, 4, 3);
            DiffPoly q = random_diff_poly(rng, 3, 4, 3);
            DiffPoly lhs = d_poly(p * q, lambda);
            DiffPoly rhs = d_poly(p, lambda) * q + p * d_poly(q, lambda) +
                           (d_poly(p, lambda) * d_poly(q, lambda)).scaled(lambda);
            CHECK(lhs == rhs);
        }
        for (const DiffMonomial& m : enumerate_monomials(3, 4))
            CHECK(d_poly(DiffPoly::monomial(m), lambda) == d_monomial_closed(m, lambda));
    }
}

TEST_CASE("range decomposition examples") {
    DiffPoly u0 = DiffPoly::jet(0);
    DiffPoly u1 = DiffPoly::jet(1);

    auto already = decompose_range(u1 * u1, Rational(4));
    CHECK(already.q.is_zero());
    CHECK(already.t == u1 * u1);

    auto dec0 = decompose_range(u0 * u1, 0);
    CHECK(dec0.q == (u0 * u0).scaled(Rational(1, 2)));
    CHECK(dec0.t.is_zero());

    auto dec1 = decompose_range(u0 * u1, 1);
    CHECK(dec1.q == (u0 * u0).scaled(Rational(1, 2)));
    CHECK(dec1.t == (u1 * u1).scaled(Rational(-1, 2)));
}

TEST_CASE("range decomposition reconstructs and is direct") {
    std::mt19937_64 rng(17);
    const Rational lambdas[] = {Rational(0), Rational(1), Rational(-2)};
    for (const Rational& lambda : lambdas) {
        for (int k = 0; k < 60; ++k) {
            DiffPoly p = random_diff_poly(rng, 3, 4, 3);
            auto [q, t] = decompose_range(p, lambda);
            CHECK(p == d_poly(q, lambda) + t);
            for (auto& [m, c] : t.terms()) CHECK(m.is_functional());
            CHECK(q.constant_term() == 0);

            // t is already reduced, and the image part has no t component
            auto again = decompose_range(t, lambda);
            CHECK(again.q.is_zero());
            CHECK(again.t == t);
            auto image = decompose_range(d_poly(q, lambda), lambda);
            CHECK(image.t.is_zero());
        }
    }
}

TEST_CASE("quasi-antiderivative examples and laws") {
    DiffPoly u0 = DiffPoly::jet(0);
    DiffPoly u1 = DiffPoly::jet(1);

    CHECK(quasi_antiderivative(u0, 0).is_zero());
    CHECK(quasi_antiderivative(u0, 1).is_zero());
    CHECK(quasi_antiderivative(u1, 0) == u0);
    CHECK(quasi_antiderivative(u1, Rational(-2)) == u0);
    CHECK(quasi_antiderivative(DiffPoly(9), 0).is_zero());
    CHECK(quasi_antiderivative(DiffPoly(9), 1).is_zero());

    std::mt19937_64 rng(19);
    for (const Rational& lambda : {Rational(0), Rational(1)}) {
        for (int k = 0; k < 80; ++k) {
            DiffPoly p = random_diff_poly(rng, 3, 4, 3);
            auto D = [&](const DiffPoly& v) { return d_poly(v, lambda); };
            auto Q = [&](const DiffPoly& v) { return quasi_antiderivative(v, lambda); };
            CHECK(D(Q(D(p))) == D(p));
            CHECK(Q(D(Q(p))) == Q(p));
        }
    }
}

TEST_CASE("projectors") {
    DiffPoly u0 = DiffPoly::jet(0);
    DiffPoly u1 = DiffPoly::jet(1);

    for (const Rational& lambda : {Rational(0), Rational(1), Rational(-2)}) {
        auto pc = projectors(DiffPoly(3), lambda);
        CHECK(pc.e == DiffPoly(3));
        CHECK(pc.j.is_zero());
        CHECK(pc.s.is_zero());
        CHECK(pc.t == DiffPoly(3));

        auto pu = projectors(u0, lambda);
        CHECK(pu.e.is_zero());
        CHECK(pu.j == u0);
        CHECK(pu.s.is_zero());
        CHECK(pu.t == u0);

        auto pd = projectors(u1, lambda);
        CHECK(pd.e.is_zero());
        CHECK(pd.j == u1);
        CHECK(pd.s == u1);
        CHECK(pd.t.is_zero());
    }

    std::mt19937_64 rng(29);
    for (int k = 0; k < 50; ++k) {
        DiffPoly p = random_diff_poly(rng, 3, 4, 3);
        auto pr = projectors(p, 1);
        CHECK(pr.e + pr.j == p);
        CHECK(pr.s + pr.t == p);
        CHECK(pr.e == DiffPoly(p.constant_term()));
    }
}

TEST_CASE("functional monomials are closed under products") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 200; ++k) {
        DiffMonomial a = random_functional_monomial(rng, 3, 4);
        DiffMonomial b = random_functional_monomial(rng, 3, 4);
        CHECK(a.times(b).is_functional());
    }
}

TEST_CASE("kernel of the derivation is the constants") {
    for (const Rational& lambda : {Rational(0), Rational(1), Rational(-2)}) {
        for (const DiffMonomial& m : enumerate_monomials(2, 3)) {
            if (m.is_one()) continue;
            CHECK_FALSE(d_poly(DiffPoly::monomial(m), lambda).is_zero());
        }
        // random nonconstant combinations
        std::mt19937_64 rng(37);
        for (int k = 0; k < 50; ++k) {
            DiffPoly p = random_diff_poly(rng, 2, 3, 3);
            DiffPoly nonconst = p - DiffPoly(p.constant_term());
            if (nonconst.is_zero()) continue;
            CHECK_FALSE(d_poly(nonconst, lambda).is_zero());
        }
        CHECK(d_poly(DiffPoly(Rational(5, 3)), lambda).is_zero());
    }
}
