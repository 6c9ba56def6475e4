#pragma once

#include "intalg/rational.hpp"

#include <iosfwd>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace intalg {

// Monomial in the jet variables u_0, u_1, u_2, ... (u_i is the i-th
// derivative of the single indeterminate u). Stored as a sparse map from
// jet index to positive exponent; the empty map is the monomial 1.
class DiffMonomial {
  public:
    DiffMonomial() = default;
    explicit DiffMonomial(std::map<int, int> exps);

    // u_i
    static DiffMonomial jet(int i);
    static DiffMonomial one() { return DiffMonomial(); }

    bool is_one() const { return exps_.empty(); }

    // largest stored jet index; -1 for the monomial 1
    int order() const { return exps_.empty() ? -1 : exps_.rbegin()->first; }

    int total_degree() const;

    int exponent(int i) const;

    // order <= 0, or the top jet variable occurs with exponent > 1
    bool is_functional() const;

    const std::map<int, int>& exponents() const { return exps_; }

    DiffMonomial times(const DiffMonomial& other) const;
    DiffMonomial pow(int k) const;

    // monomial with the factor u_i^exponent(i) removed entirely
    DiffMonomial without(int i) const;

    bool operator==(const DiffMonomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const DiffMonomial& o) const { return !(*this == o); }

    // canonical term order: by order, then total degree, then exponents
    // compared from the highest jet index downward
    bool operator<(const DiffMonomial& o) const;

  private:
    std::map<int, int> exps_;
};

// Sparse differential polynomial over Q: finite map from monomials to
// nonzero rational coefficients.
class DiffPoly {
  public:
    DiffPoly() = default;
    DiffPoly(const Rational& c);  // constant
    DiffPoly(int c) : DiffPoly(Rational(c)) {}
    static DiffPoly monomial(const DiffMonomial& m, const Rational& c = Rational(1));
    static DiffPoly jet(int i) { return monomial(DiffMonomial::jet(i)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;

    // -1 for the zero polynomial and for nonzero constants
    int order() const;
    int total_degree() const;

    const std::map<DiffMonomial, Rational>& terms() const { return terms_; }

    void add_term(const DiffMonomial& m, const Rational& c);

    friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    DiffPoly operator-() const;
    DiffPoly scaled(const Rational& c) const;
    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);
    DiffPoly& operator*=(const DiffPoly& o) { return *this = *this * o; }
    void add_scaled(const DiffPoly& o, const Rational& c);

    bool operator==(const DiffPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const DiffPoly& o) const { return !(*this == o); }

  private:
    std::map<DiffMonomial, Rational> terms_;
};

// Weighted derivation on Q{u}: linear, D(u_i) = u_{i+1}, D(1) = 0 and
// D(xy) = D(x)y + xD(y) + lambda D(x)D(y).
DiffPoly d_poly(const DiffPoly& p, const Rational& lambda);

// Closed-form expansion of the derivation on a single monomial: sum over
// all exponent splittings, with a binomial coefficient per variable and a
// power of lambda per extra factor. Serves as an independent cross-check
// of the recursive rule.
DiffPoly d_monomial_closed(const DiffMonomial& m, const Rational& lambda);

// p = d_poly(q) + t with every monomial of t functional and q without
// constant term. The pair is unique: the functional monomials span a
// complement of the derivation's image and the derivation is injective on
// polynomials without constant term.
struct RangeDecomposition {
    DiffPoly q;
    DiffPoly t;
};

RangeDecomposition decompose_range(const DiffPoly& p, const Rational& lambda);

// Memoizing engine behind decompose_range: one decomposition per monomial,
// shared across calls. Worth holding on to wherever many related
// decompositions are taken at the same weight (tensor constructions, the
// axiom samplers). Lookups and inserts are locked; a racing recomputation
// of the same monomial is harmless, the first insert wins.
class QuasiAntiderivativeCache {
  public:
    explicit QuasiAntiderivativeCache(Rational lambda) : lambda_(std::move(lambda)) {}

    const Rational& lambda() const { return lambda_; }
    const RangeDecomposition& monomial(const DiffMonomial& m);
    RangeDecomposition decompose(const DiffPoly& p);

  private:
    Rational lambda_;
    std::mutex mutex_;
    std::map<DiffMonomial, RangeDecomposition> memo_;
};

// Q(p): the q-part of decompose_range. Quasi-inverse of the derivation:
// D Q D = D and Q D Q = Q, with im Q the span of monomials != 1 and
// ker Q the span of functional monomials.
DiffPoly quasi_antiderivative(const DiffPoly& p, const Rational& lambda);

// E = id - QD (projector onto the constants), J = QD, S = DQ (projector
// onto im D), T = id - DQ.
struct DiffProjectors {
    DiffPoly e;
    DiffPoly j;
    DiffPoly s;
    DiffPoly t;
};

DiffProjectors projectors(const DiffPoly& p, const Rational& lambda);

std::string to_string(const DiffMonomial& m);
std::string to_string(const DiffPoly& p);
std::ostream& operator<<(std::ostream& os, const DiffPoly& p);

}  // namespace intalg
