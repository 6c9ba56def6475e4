#pragma once

#include "intalg/axioms.hpp"
#include "intalg/base_algebra.hpp"
#include "intalg/counterexample.hpp"
#include "intalg/hurwitz.hpp"
#include "intalg/intdiff.hpp"
#include "intalg/shuffle.hpp"

#include <memory>
#include <random>
#include <string>

namespace intalg {

// Random building blocks shared by the samplers. Coefficients are small
// nonzero rationals; monomials have bounded order and degree.
Rational random_rational(std::mt19937_64& rng);
DiffMonomial random_diff_monomial(std::mt19937_64& rng, int max_order, int max_degree);
DiffMonomial random_functional_monomial(std::mt19937_64& rng, int max_order, int max_degree);
DiffPoly random_diff_poly(std::mt19937_64& rng, int max_order, int max_degree, int max_terms);

struct SampleSizes {
    int max_order = 2;
    int max_degree = 3;
    int max_terms = 2;
    int max_tail = 3;
};

// Q{u} with D the weighted derivation and P the quasi-antiderivative.
// P is an inner inverse of D, not a right inverse, so only the identities
// that hold for such a pair (the subalgebra lemma, the quasi-inverse laws)
// are expected to pass here.
class DiffPolyStructure {
  public:
    using Elem = DiffPoly;

    DiffPolyStructure(Rational lambda, SampleSizes sizes = {}) : lambda_(std::move(lambda)), sizes_(sizes) {}

    const Rational& weight() const { return lambda_; }
    Elem zero() const { return DiffPoly(); }
    Elem one() const { return DiffPoly(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem scalar(const Rational& c, const Elem& e) const { return e.scaled(c); }
    Elem D(const Elem& e) const { return d_poly(e, lambda_); }
    Elem P(const Elem& e) const { return quasi_antiderivative(e, lambda_); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    Elem random(std::mt19937_64& rng) const {
        return random_diff_poly(rng, sizes_.max_order, sizes_.max_degree, sizes_.max_terms);
    }
    std::string show(const Elem& e) const { return to_string(e); }

  private:
    Rational lambda_;
    SampleSizes sizes_;
};

// The free differential Rota-Baxter algebra over Q{u}: tensor words with
// the mixable-shuffle product.
class ShuffleStructure {
  public:
    using Elem = TensorElement<DiffPolyAlgebra>;

    ShuffleStructure(Rational lambda, SampleSizes sizes = {})
        : alg_(std::move(lambda)), sizes_(sizes) {}

    const Rational& weight() const { return alg_.weight(); }
    const DiffPolyAlgebra& algebra() const { return alg_; }
    Elem zero() const { return Elem(); }
    Elem one() const { return Elem::unit(alg_); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return mixable_shuffle(alg_, a, b); }
    Elem scalar(const Rational& c, const Elem& e) const { return e.scaled(c); }
    Elem D(const Elem& e) const { return d_shuffle(alg_, e); }
    Elem P(const Elem& e) const { return p_shuffle(alg_, e); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    Elem random(std::mt19937_64& rng) const;
    std::string show(const Elem& e) const { return tensor_to_string(alg_, e); }

  private:
    DiffPolyAlgebra alg_;
    SampleSizes sizes_;
};

// The free integro-differential algebra over Q{u}.
class IdAlgStructure {
  public:
    using Elem = IDElement<DiffPolyAlgebra>;

    IdAlgStructure(Rational lambda, SampleSizes sizes = {})
        : ida_(std::make_shared<IdAlgebra<DiffPolyAlgebra>>(DiffPolyAlgebra(std::move(lambda)))),
          sizes_(sizes) {}

    const Rational& weight() const { return ida_->weight(); }
    const IdAlgebra<DiffPolyAlgebra>& algebra() const { return *ida_; }
    Elem zero() const { return Elem(); }
    Elem one() const { return ida_->one(); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return ida_->mul(a, b); }
    Elem scalar(const Rational& c, const Elem& e) const { return e.scaled(c); }
    Elem D(const Elem& e) const { return ida_->derive(e); }
    Elem P(const Elem& e) const { return ida_->integrate(e); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    Elem random(std::mt19937_64& rng) const;
    std::string show(const Elem& e) const { return ida_->to_string(e); }

  private:
    // shared so the structure stays cheap to copy with its memo intact
    std::shared_ptr<IdAlgebra<DiffPolyAlgebra>> ida_;
    SampleSizes sizes_;
};

// Truncated Hurwitz-series model; equality is agreement on the common
// trusted prefix.
class HurwitzStructure {
  public:
    using Elem = HurwitzSeries;

    HurwitzStructure(Rational lambda, int precision = 12)
        : lambda_(std::move(lambda)), precision_(precision) {}

    const Rational& weight() const { return lambda_; }
    int precision() const { return precision_; }
    Elem zero() const { return HurwitzSeries::constant(0, precision_, lambda_); }
    Elem one() const { return HurwitzSeries::constant(1, precision_, lambda_); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return hproduct(a, b); }
    Elem scalar(const Rational& c, const Elem& e) const { return e.scaled(c); }
    Elem D(const Elem& e) const { return hD(e); }
    Elem P(const Elem& e) const { return hP(e); }
    bool equal(const Elem& a, const Elem& b) const { return agree(a, b); }
    Elem random(std::mt19937_64& rng) const;
    std::string show(const Elem& e) const { return to_string(e); }

  private:
    Rational lambda_;
    int precision_;
};

// Differential Rota-Baxter algebra of weight 0 that is not
// integro-differential: polynomials over Q[y]/(y^4) with the origin
// evaluation folded into the integral.
class CounterexampleStructure {
  public:
    using Elem = XYPoly;

    CounterexampleStructure() = default;

    Rational weight() const { return Rational(0); }
    Elem zero() const { return XYPoly(); }
    Elem one() const { return XYPoly(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem scalar(const Rational& c, const Elem& e) const { return e.scaled(c); }
    Elem D(const Elem& e) const { return e.d_dx(); }
    Elem P(const Elem& e) const { return e.p_op(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    Elem random(std::mt19937_64& rng) const;
    std::string show(const Elem& e) const { return to_string(e); }
};

CounterexampleStructure counterexample_fixture();

// Named dispatch for the command line: structure in {idalg, shuffle,
// hurwitz, counterexample, diffpoly}, axiom in {derivation, rota_baxter,
// section, hybrid, char_b..char_h, rba_IJ, rba_J, proj_lemma,
// subalg_lemma}.
CheckReport run_axiom_check(const std::string& structure, const std::string& axiom, int samples,
                            std::uint64_t seed, const Rational& weight, int precision);

}  // namespace intalg
