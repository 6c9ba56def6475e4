#include "intalg/eval.hpp"

#include "intalg/structures.hpp"

#include <doctest.h>

#include <random>

using namespace intalg;

TEST_CASE("grammar basics") {
    // u' * u is a product of jets
    DiffPoly p = eval_diffpoly(parse_expr("u' * u"), 0);
    CHECK(p == DiffPoly::jet(1) * DiffPoly::jet(0));

    // juxtaposition multiplies
    CHECK(eval_diffpoly(parse_expr("2u u'"), 0) == (DiffPoly::jet(0) * DiffPoly::jet(1)).scaled(2));

    // jet spellings
    CHECK(eval_diffpoly(parse_expr("u^(3)"), 0) == DiffPoly::jet(3));
    CHECK(eval_diffpoly(parse_expr("u''"), 0) == DiffPoly::jet(2));
    CHECK(eval_diffpoly(parse_expr("u^2"), 0) == DiffPoly::jet(0) * DiffPoly::jet(0));
    CHECK(eval_diffpoly(parse_expr("u^(3)^2"), 0) == DiffPoly::jet(3) * DiffPoly::jet(3));

    // operators nest
    CHECK(eval_diffpoly(parse_expr("Q[D[u]]"), 1) == DiffPoly::jet(0));
    CHECK(eval_diffpoly(parse_expr("E[u + 3]"), 1) == DiffPoly(3));

    // rationals through division
    CHECK(eval_diffpoly(parse_expr("3/4 - 1/4"), 0) == DiffPoly(Rational(1, 2)));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_expr("u +"), ParseError);
    CHECK_THROWS_AS(parse_expr("(u"), ParseError);
    CHECK_THROWS_AS(parse_expr("w"), ParseError);
    CHECK_THROWS_AS(parse_expr("u ^ x"), ParseError);
    try {
        parse_expr("u + zebra");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("evaluation respects the structure") {
    CHECK_THROWS_AS(eval_diffpoly(parse_expr("x"), 0), EvalError);
    CHECK_THROWS_AS(eval_diffpoly(parse_expr("1/u"), 0), EvalError);
    CHECK_THROWS_AS(eval_diffpoly(parse_expr("P[u]"), 0), EvalError);
    CHECK_THROWS_AS(eval_ratfunc(parse_expr("u"), 0), EvalError);
    CHECK_THROWS_AS(eval_ratfunc(parse_expr("1/(x^2-1)"), 0), EvalError);
    CHECK_THROWS_AS(eval_ratfunc(parse_expr("1/(x-x)"), 0), EvalError);
    CHECK_THROWS_AS(eval_ratfunc(parse_expr("x/0"), 0), EvalError);

    IdAlgebra<DiffPolyAlgebra> ida{DiffPolyAlgebra(0)};
    CHECK_THROWS_AS(eval_idalg(parse_expr("Q[u]"), ida), EvalError);
    CHECK_THROWS_AS(eval_idalg(parse_expr("u (*) u*u'"), ida), EvalError);  // tail not functional
}

TEST_CASE("ratfunc expressions") {
    RatFunc f = eval_ratfunc(parse_expr("1/(x-1/2)"), 0);
    CHECK(f == RatFunc::fraction(GaussianRational(Rational(1, 2)), 1, GaussianRational(1)));

    RatFunc g = eval_ratfunc(parse_expr("1/(x-1/2)^2"), 0);
    CHECK(g == RatFunc::fraction(GaussianRational(Rational(1, 2)), 2, GaussianRational(1)));

    RatFunc h = eval_ratfunc(parse_expr("1/((x)(x-1))"), 0);
    CHECK(h == RatFunc::fraction(GaussianRational(0), 1, GaussianRational(-1)) +
                   RatFunc::fraction(GaussianRational(1), 1, GaussianRational(1)));

    // scaled linear factors and Gaussian poles
    RatFunc k = eval_ratfunc(parse_expr("1/(2x-2)"), 0);
    CHECK(k == RatFunc::fraction(GaussianRational(1), 1, GaussianRational(Rational(1, 2))));
    RatFunc m = eval_ratfunc(parse_expr("1/(x-I)"), 0);
    CHECK(m == RatFunc::fraction(GaussianRational::i(), 1, GaussianRational(1)));

    // operators
    CHECK(eval_ratfunc(parse_expr("D[x^3]"), 0) ==
          RatFunc(GPoly({GaussianRational(0), GaussianRational(0), GaussianRational(3)})));
    CHECK(eval_ratfunc(parse_expr("Q[x^2]"), 0) ==
          RatFunc(GPoly({GaussianRational(0), GaussianRational(0), GaussianRational(0),
                         GaussianRational(Rational(1, 3))})));
    CHECK(eval_ratfunc(parse_expr("E[x*1/x]"), 0) == RatFunc(1));
}

TEST_CASE("idalg and shuffle expressions") {
    IdAlgebra<DiffPolyAlgebra> ida{DiffPolyAlgebra(0)};

    auto e1 = eval_idalg(parse_expr("E[u]"), ida);
    CHECK(e1 == ida.eps_embed(DiffPoly::jet(0)));

    auto e2 = eval_idalg(parse_expr("D[P[u (*) u]]"), ida);
    CHECK(e2 == eval_idalg(parse_expr("u (*) u"), ida));

    auto e3 = eval_idalg(parse_expr("eps(u)*u'"), ida);
    IDElement<DiffPolyAlgebra> expect;
    expect.add_term({DiffMonomial::jet(0), DiffMonomial::jet(1), {}}, 1);
    CHECK(e3 == expect);

    DiffPolyAlgebra alg(0);
    auto t = eval_shuffle(parse_expr("P[u] + u (*) u'^2"), alg);
    TensorElement<DiffPolyAlgebra> expect_t;
    expect_t.add_term({DiffMonomial::one(), DiffMonomial::jet(0)}, 1);
    expect_t.add_term({DiffMonomial::jet(0), DiffMonomial::jet(1).pow(2)}, 1);
    CHECK(t == expect_t);
}

TEST_CASE("counterexample expressions") {
    XYPoly p = eval_counterexample(parse_expr("P[1]"));
    CHECK(p == XYPoly::x() + XYPoly::term(0, 2, 1));
    CHECK(eval_counterexample(parse_expr("y^4")).is_zero());
    CHECK(eval_counterexample(parse_expr("E[x*y + 1]")) == XYPoly(1));
    CHECK(eval_counterexample(parse_expr("E[x]")) == -XYPoly::term(0, 2, 1));
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937_64 rng(77);
    const Rational lambda(1);

    for (int k = 0; k < 40; ++k) {
        DiffPoly p = random_diff_poly(rng, 3, 4, 3);
        CHECK(eval_diffpoly(parse_expr(to_string(p)), lambda) == p);
    }

    IdAlgStructure ids(lambda, {2, 2, 2, 2});
    const auto& ida = ids.algebra();
    for (int k = 0; k < 40; ++k) {
        auto x = ids.random(rng);
        CHECK(eval_idalg(parse_expr(ida.to_string(x)), ida) == x);
    }

    ShuffleStructure shs(lambda, {2, 2, 2, 2});
    for (int k = 0; k < 40; ++k) {
        auto x = shs.random(rng);
        CHECK(eval_shuffle(parse_expr(tensor_to_string(shs.algebra(), x)), shs.algebra()) == x);
    }

    CounterexampleStructure cxs;
    for (int k = 0; k < 40; ++k) {
        auto x = cxs.random(rng);
        CHECK(eval_counterexample(parse_expr(to_string(x))) == x);
    }

    // canonical AST serialization is stable under reparsing
    for (const char* text : {"u' * u", "P[D[u]]", "1/(x-1/2)", "eps(u)*u (*) u^2", "-u + 2^3"}) {
        ExprPtr once = parse_expr(text);
        CHECK(print_expr(parse_expr(print_expr(once))) == print_expr(once));
    }
}

TEST_CASE("ratfunc printing round-trips") {
    std::mt19937_64 rng(79);
    const GaussianRational poles[] = {GaussianRational(0), GaussianRational(1),
                                      GaussianRational(Rational(1, 2)), GaussianRational::i(),
                                      GaussianRational(Rational(1), Rational(1))};
    for (int k = 0; k < 40; ++k) {
        RatFunc f;
        std::vector<GaussianRational> coeffs(4);
        for (auto& c : coeffs) c = GaussianRational(random_rational(rng), random_rational(rng));
        f += RatFunc(GPoly(std::move(coeffs)));
        f.add_fraction(poles[k % 5], 1 + k % 3, GaussianRational(random_rational(rng), random_rational(rng)));
        CHECK(eval_ratfunc(parse_expr(to_string(f)), 0) == f);
    }
}
