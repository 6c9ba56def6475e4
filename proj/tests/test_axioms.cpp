#include "intalg/axioms.hpp"

#include "intalg/structures.hpp"

#include <doctest.h>

using namespace intalg;

namespace {

// deliberately broken derivation: D(p) + 1 violates D(1) = 0
struct BrokenDerivation : DiffPolyStructure {
    using DiffPolyStructure::DiffPolyStructure;
    Elem D(const Elem& e) const { return d_poly(e, weight()) + DiffPoly(1); }
};

}  // namespace

TEST_CASE("fixture basics") {
    CounterexampleStructure cx = counterexample_fixture();
    CHECK(to_string(cx.P(cx.one())) == "x + y^2");
    CHECK(cx.P(cx.zero()).is_zero());

    // section, derivation and Rota-Baxter hold
    CHECK(check_derivation(cx, 100, 1).pass());
    CHECK(check_rota_baxter(cx, 100, 1).pass());
    CHECK(check_section(cx, 100, 1).pass());

    // the hybrid identity fails, with the documented witness at (x, y)
    CheckReport hybrid = check_hybrid(cx, 100, 1);
    CHECK_FALSE(hybrid.pass());
    XYPoly gap = hybrid_gap(cx, XYPoly::x(), XYPoly::y());
    CHECK(gap == XYPoly::term(0, 3, 1));
}

TEST_CASE("characterization items co-occur") {
    // all items pass on the free integro-differential algebra
    IdAlgStructure id1(Rational(1), {2, 2, 2, 2});
    for (char item : {'b', 'c', 'd', 'e', 'f', 'g', 'h'})
        CHECK(check_characterization(id1, item, 25, 2).pass());

    // and on the Hurwitz model
    HurwitzStructure hw(Rational(1), 8);
    for (char item : {'b', 'c', 'd', 'e', 'f', 'g', 'h'})
        CHECK(check_characterization(hw, item, 25, 2).pass());

    // the fixture fails the multiplicativity and linearity items
    CounterexampleStructure cx;
    CHECK_FALSE(check_characterization(cx, 'b', 100, 2).pass());
    CHECK_FALSE(check_characterization(cx, 'g', 100, 2).pass());

    CHECK_THROWS_AS(check_characterization(cx, 'z', 5, 2), std::invalid_argument);
}

TEST_CASE("lemma identities") {
    IdAlgStructure id0(Rational(0), {2, 2, 2, 2});
    CHECK(check_lemma_identity(id0, "rba_IJ", 25, 3).pass());
    CHECK(check_lemma_identity(id0, "rba_J", 25, 3).pass());
    CHECK(check_lemma_identity(id0, "proj_lemma", 25, 3).pass());

    // the fixture is a differential Rota-Baxter algebra, so these still hold
    CounterexampleStructure cx;
    CHECK(check_lemma_identity(cx, "rba_IJ", 100, 3).pass());
    CHECK(check_lemma_identity(cx, "rba_J", 100, 3).pass());
    // the projector lemma is an equivalence, so it holds on the fixture too,
    // with both sides failing together
    CHECK(check_lemma_identity(cx, "proj_lemma", 100, 3).pass());

    // the transcendental complement of the derivation on Q{u} is a
    // subalgebra, witnessed through S = DQ
    for (const Rational& lambda : {Rational(0), Rational(1), Rational(-2)}) {
        DiffPolyStructure dp(lambda);
        CHECK(check_lemma_identity(dp, "subalg_lemma", 60, 3).pass());
    }

    CHECK_THROWS_AS(check_lemma_identity(cx, "nonsense", 5, 3), std::invalid_argument);
}

TEST_CASE("shuffle and Hurwitz structures pass their axioms") {
    for (const Rational& lambda : {Rational(0), Rational(1)}) {
        ShuffleStructure sh(lambda, {2, 2, 2, 2});
        CHECK(check_derivation(sh, 25, 4).pass());
        CHECK(check_rota_baxter(sh, 25, 4).pass());
        CHECK(check_section(sh, 25, 4).pass());

        HurwitzStructure hw(lambda, 8);
        CHECK(check_derivation(hw, 50, 4).pass());
        CHECK(check_rota_baxter(hw, 50, 4).pass());
        CHECK(check_section(hw, 50, 4).pass());
        CHECK(check_hybrid(hw, 50, 4).pass());
    }
}

TEST_CASE("a broken operator is reported with a witness") {
    BrokenDerivation broken{Rational(0)};
    CheckReport rep = check_derivation(broken, 20, 5);
    CHECK_FALSE(rep.pass());
    bool d1_failed = false;
    for (auto& f : rep.failures)
        if (f.sample == -1) d1_failed = true;
    CHECK(d1_failed);
    CHECK_FALSE(rep.failures.empty());
    CHECK_FALSE(rep.failures.front().detail.empty());
}

TEST_CASE("named dispatch") {
    CheckReport rep = run_axiom_check("idalg", "hybrid", 10, 9, Rational(1), 12);
    CHECK(rep.pass());
    CHECK(rep.axiom == "hybrid");
    CHECK(rep.samples == 10);
    CHECK(rep.seed == 9);

    CHECK(run_axiom_check("hurwitz", "char_g", 10, 9, Rational(0), 8).pass());
    CHECK_FALSE(run_axiom_check("counterexample", "hybrid", 50, 9, Rational(0), 12).pass());

    CHECK_THROWS_AS(run_axiom_check("idalg", "bogus", 1, 9, Rational(0), 12), std::invalid_argument);
    CHECK_THROWS_AS(run_axiom_check("bogus", "hybrid", 1, 9, Rational(0), 12), std::invalid_argument);
    CHECK_THROWS_AS(run_axiom_check("counterexample", "hybrid", 1, 9, Rational(1), 12),
                    std::invalid_argument);
}
