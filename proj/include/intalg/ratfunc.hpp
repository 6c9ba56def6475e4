#pragma once

#include "intalg/gaussian.hpp"
#include "intalg/rational.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace intalg {

// Dense univariate polynomial in x over Q(i). Coefficient k is the
// coefficient of x^k; trailing zeros are trimmed, the zero polynomial has
// an empty coefficient list.
class GPoly {
  public:
    GPoly() = default;
    GPoly(const GaussianRational& c);
    GPoly(int c) : GPoly(GaussianRational(c)) {}
    explicit GPoly(std::vector<GaussianRational> coeffs);

    static GPoly x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    GaussianRational coeff(int k) const;
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    GaussianRational eval(const GaussianRational& point) const;

    // p(x + delta)
    GPoly shifted(const GaussianRational& delta) const;

    friend GPoly operator+(const GPoly& a, const GPoly& b);
    friend GPoly operator-(const GPoly& a, const GPoly& b);
    friend GPoly operator*(const GPoly& a, const GPoly& b);
    GPoly operator-() const;
    GPoly scaled(const GaussianRational& c) const;
    GPoly pow(unsigned n) const;

    bool operator==(const GPoly& o) const { return c_ == o.c_; }
    bool operator!=(const GPoly& o) const { return !(*this == o); }

    // a = q*b + r with deg r < deg b
    static std::pair<GPoly, GPoly> divrem(const GPoly& a, const GPoly& b);

    // p = (x - alpha) * q + p(alpha); returns q
    GPoly deflated(const GaussianRational& alpha) const;

  private:
    void trim();
    std::vector<GaussianRational> c_;
};

// A pole (x - alpha)^mult of a partial-fraction term.
struct PoleKey {
    GaussianRational alpha;
    int mult = 1;

    friend bool operator<(const PoleKey& a, const PoleKey& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.mult < b.mult;
    }
    friend bool operator==(const PoleKey& a, const PoleKey& b) {
        return a.alpha == b.alpha && a.mult == b.mult;
    }
};

// Rational function in canonical partial-fraction form: a polynomial part
// plus finitely many terms gamma/(x-alpha)^j with nonzero gamma. Equality
// is structural. Denominators enter the library already factored over
// Q(i); there is no polynomial factorization here.
class RatFunc {
  public:
    RatFunc() = default;
    RatFunc(const GPoly& p) : poly_(p) {}
    RatFunc(const GaussianRational& c) : poly_(c) {}
    RatFunc(int c) : poly_(GaussianRational(c)) {}

    static RatFunc x() { return RatFunc(GPoly::x()); }
    static RatFunc fraction(const GaussianRational& alpha, int mult, const GaussianRational& gamma);

    const GPoly& poly() const { return poly_; }
    const std::map<PoleKey, GaussianRational>& fracs() const { return fracs_; }

    bool is_zero() const { return poly_.is_zero() && fracs_.empty(); }
    bool is_constant() const { return fracs_.empty() && poly_.is_constant(); }

    void add_fraction(const GaussianRational& alpha, int mult, const GaussianRational& gamma);

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    // products are re-expanded into partial fractions over the combined
    // pole set
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc scaled(const GaussianRational& c) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    bool operator==(const RatFunc& o) const { return poly_ == o.poly_ && fracs_ == o.fracs_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // common-denominator form: numerator and factored denominator
    struct NumDen {
        GPoly num;
        std::vector<std::pair<GaussianRational, int>> den;
    };
    NumDen to_num_den() const;

    GaussianRational eval(const GaussianRational& point) const;

  private:
    GPoly poly_;
    std::map<PoleKey, GaussianRational> fracs_;
};

// num / prod (x - alpha_i)^{n_i} as a canonical RatFunc. The alpha_i must
// be pairwise distinct (a repeated root belongs in its multiplicity).
RatFunc to_partial_fractions(const GPoly& num, const std::vector<std::pair<GaussianRational, int>>& den_factors);

// f / (c * prod (x - alpha_i)^{n_i})
RatFunc divide_factored(const RatFunc& f, const GaussianRational& c,
                        const std::vector<std::pair<GaussianRational, int>>& den_factors);

// usual derivation d/dx, termwise on the canonical form
RatFunc d_dx(const RatFunc& f);

// difference quotient (f(x+lambda) - f(x))/lambda for a nonzero real
// rational shift; a derivation of weight lambda
RatFunc d_lambda(const RatFunc& f, const Rational& lambda);

struct RatDecomposition {
    RatFunc q;
    RatFunc t;
};

// f = d_dx(q) + t with t a combination of simple poles 1/(x-alpha) and q
// without constant term (the simple-pole residues have no rational
// antiderivative; everything else integrates termwise).
RatDecomposition quasi_antiderivative_0(const RatFunc& f);

// f = d_lambda(q) + t with every pole of t shifted into the strip
// Re in [0, |lambda|) and q without constant term. Polynomials are handled
// in the divided-falling-factorial basis, fractions by telescoping the
// pole along integer multiples of lambda.
RatDecomposition quasi_antiderivative_lambda(const RatFunc& f, const Rational& lambda);

// Polynomial written in the basis of lambda-divided falling factorials
//   ff(x, n) = x(x-lambda)...(x-(n-1)lambda)/n!,  ff(x, 0) = 1,
// on which the difference quotient acts as the index shift n -> n-1.
class FallingFactorialPoly {
  public:
    FallingFactorialPoly(Rational lambda) : lambda_(std::move(lambda)) {}

    const Rational& lambda() const { return lambda_; }
    const std::map<int, GaussianRational>& coeffs() const { return coeffs_; }
    void add(int n, const GaussianRational& c);

    bool operator==(const FallingFactorialPoly& o) const {
        return lambda_ == o.lambda_ && coeffs_ == o.coeffs_;
    }

  private:
    std::map<int, GaussianRational> coeffs_;
    Rational lambda_;
};

// ff(x, n) expanded in the monomial basis
GPoly falling_basis(int n, const Rational& lambda);

FallingFactorialPoly poly_to_falling(const GPoly& p, const Rational& lambda);
GPoly falling_to_poly(const FallingFactorialPoly& f);

// signed Stirling numbers of the first kind and Stirling numbers of the
// second kind, via the standard recurrences
BigInt stirling_first(unsigned n, unsigned k);
BigInt stirling_second(unsigned n, unsigned k);

std::string to_string(const GPoly& p);
std::string to_string(const RatFunc& f);
std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace intalg
