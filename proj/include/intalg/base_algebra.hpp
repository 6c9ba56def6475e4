#pragma once

#include "intalg/diffpoly.hpp"
#include "intalg/gaussian.hpp"
#include "intalg/ratfunc.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace intalg {

// Adapters presenting a differential algebra with a quasi-antiderivative
// through a uniform basis-level interface, so tensor constructions can be
// written once. Required surface:
//
//   Scalar, Monomial, Element
//   weight(), unit_monomial(), expand(e), from_monomial(m, c)
//   mul_monomials(m, m) / mul(e, e), add / sub / scale / is_zero
//   derive(e), derive_monomial(m), quasi_antiderivative(e)
//   is_transcendental_basis(m)   -- basis of the complement of im D
//   ker_scalar(e)                -- constants as scalars
//   monomial_str(m)

// The free differential algebra Q{u} of a given weight. Constants are the
// kernel of the derivation; the functional monomials span the complement
// of its image, which is closed under products for every weight.
class DiffPolyAlgebra {
  public:
    using Scalar = Rational;
    using Monomial = DiffMonomial;
    using Element = DiffPoly;

    explicit DiffPolyAlgebra(Rational lambda)
        : lambda_(std::move(lambda)),
          quasi_(std::make_shared<QuasiAntiderivativeCache>(lambda_)) {}

    const Rational& weight() const { return lambda_; }

    Monomial unit_monomial() const { return DiffMonomial::one(); }
    Element one() const { return DiffPoly(1); }
    Element zero() const { return DiffPoly(); }
    Element from_monomial(const Monomial& m, const Scalar& c = Scalar(1)) const {
        return DiffPoly::monomial(m, c);
    }
    std::vector<std::pair<Monomial, Scalar>> expand(const Element& e) const {
        return {e.terms().begin(), e.terms().end()};
    }

    Element mul_monomials(const Monomial& a, const Monomial& b) const {
        return DiffPoly::monomial(a.times(b));
    }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element scale(const Scalar& c, const Element& e) const { return e.scaled(c); }
    bool is_zero(const Element& e) const { return e.is_zero(); }

    Element derive(const Element& e) const { return d_poly(e, lambda_); }
    Element derive_monomial(const Monomial& m) const { return d_poly(from_monomial(m), lambda_); }
    Element quasi_antiderivative_of(const Element& e) const { return quasi_->decompose(e).q; }
    RangeDecomposition decompose(const Element& e) const { return quasi_->decompose(e); }

    bool is_transcendental_basis(const Monomial& m) const { return m.is_functional(); }

    Scalar ker_scalar(const Element& e) const {
        if (!e.is_constant()) throw std::logic_error("DiffPolyAlgebra: element is not a constant");
        return e.constant_term();
    }

    std::string monomial_str(const Monomial& m) const { return to_string(m); }
    std::string element_str(const Element& e) const { return to_string(e); }

  private:
    Rational lambda_;
    // copies share one memo; decompositions at a fixed weight are reused
    // across the tensor constructions and samplers
    std::shared_ptr<QuasiAntiderivativeCache> quasi_;
};

// Basis monomial of the rational-function algebra: either a power of x or
// a single partial fraction 1/(x-alpha)^mult.
struct RatMonomial {
    int xpow = 0;
    GaussianRational alpha;
    int pole_mult = 0;  // 0 means polynomial basis element x^xpow

    static RatMonomial power(int k) {
        RatMonomial m;
        m.xpow = k;
        return m;
    }
    static RatMonomial pole(const GaussianRational& a, int j) {
        RatMonomial m;
        m.alpha = a;
        m.pole_mult = j;
        return m;
    }
    bool is_pole() const { return pole_mult > 0; }

    friend bool operator<(const RatMonomial& a, const RatMonomial& b) {
        if (a.pole_mult != b.pole_mult) return a.pole_mult < b.pole_mult;
        if (a.is_pole()) return a.alpha < b.alpha;
        return a.xpow < b.xpow;
    }
    friend bool operator==(const RatMonomial& a, const RatMonomial& b) {
        return a.xpow == b.xpow && a.pole_mult == b.pole_mult && (!a.is_pole() || a.alpha == b.alpha);
    }
};

// Q(i)(x) under either the usual derivation (weight 0) or the difference
// quotient of nonzero real weight. The transcendental complement consists
// of the simple poles for weight 0, and of the poles whose real part lies
// in [0, |lambda|) for nonzero weight.
class RatFuncAlgebra {
  public:
    using Scalar = GaussianRational;
    using Monomial = RatMonomial;
    using Element = RatFunc;

    explicit RatFuncAlgebra(Rational lambda) : lambda_(std::move(lambda)) {}

    const Rational& weight() const { return lambda_; }

    Monomial unit_monomial() const { return RatMonomial::power(0); }
    Element one() const { return RatFunc(1); }
    Element zero() const { return RatFunc(); }

    Element from_monomial(const Monomial& m, const Scalar& c = Scalar(1)) const;
    std::vector<std::pair<Monomial, Scalar>> expand(const Element& e) const;

    Element mul_monomials(const Monomial& a, const Monomial& b) const {
        return from_monomial(a) * from_monomial(b);
    }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element scale(const Scalar& c, const Element& e) const { return e.scaled(c); }
    bool is_zero(const Element& e) const { return e.is_zero(); }

    Element derive(const Element& e) const { return lambda_ == 0 ? d_dx(e) : d_lambda(e, lambda_); }
    Element derive_monomial(const Monomial& m) const { return derive(from_monomial(m)); }
    Element quasi_antiderivative_of(const Element& e) const {
        return (lambda_ == 0 ? quasi_antiderivative_0(e) : quasi_antiderivative_lambda(e, lambda_)).q;
    }

    bool is_transcendental_basis(const Monomial& m) const;

    Scalar ker_scalar(const Element& e) const {
        if (!e.is_constant()) throw std::logic_error("RatFuncAlgebra: element is not a constant");
        return e.poly().coeff(0);
    }

    std::string monomial_str(const Monomial& m) const;
    std::string element_str(const Element& e) const { return to_string(e); }

  private:
    Rational lambda_;
};

}  // namespace intalg
