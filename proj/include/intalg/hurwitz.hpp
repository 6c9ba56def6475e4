#pragma once

#include "intalg/diffpoly.hpp"
#include "intalg/rational.hpp"

#include <string>
#include <vector>

namespace intalg {

// Truncated lambda-Hurwitz series over Q: the first `precision()` values
// of a sequence, with the weighted binomial-convolution product. The shift
// operators make this an integro-differential structure, used as a
// concrete target for universal-property checks. Operations never claim
// coefficients beyond what the inputs determine, so two series compare
// equal when they agree on the common trusted prefix.
class HurwitzSeries {
  public:
    HurwitzSeries(std::vector<Rational> coeffs, Rational lambda);

    // constant series c, 0, 0, ... at the given precision
    static HurwitzSeries constant(const Rational& c, int precision, const Rational& lambda);

    // delta series: 1 at index n, 0 elsewhere
    static HurwitzSeries delta(int n, int precision, const Rational& lambda);

    int precision() const { return static_cast<int>(coeffs_.size()); }
    const Rational& lambda() const { return lambda_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational at(int n) const;

    bool is_zero() const;

    friend HurwitzSeries operator+(const HurwitzSeries& a, const HurwitzSeries& b);
    friend HurwitzSeries operator-(const HurwitzSeries& a, const HurwitzSeries& b);
    HurwitzSeries operator-() const;
    HurwitzSeries scaled(const Rational& c) const;

    // agreement on the common trusted prefix
    friend bool agree(const HurwitzSeries& a, const HurwitzSeries& b);

  private:
    std::vector<Rational> coeffs_;
    Rational lambda_;
};

// (fg)(n) = sum_{k+j<=n} C(n,k) C(n-k,j) lambda^k f(n-j) g(k+j);
// precision of the product is the smaller input precision.
HurwitzSeries hproduct(const HurwitzSeries& f, const HurwitzSeries& g);

// (D f)(n) = f(n+1); drops one trusted coefficient
HurwitzSeries hD(const HurwitzSeries& f);

// (P f)(n) = f(n-1), (P f)(0) = 0; gains one trusted coefficient
HurwitzSeries hP(const HurwitzSeries& f);

// The differential-algebra map Q{u} -> Hurwitz series sending u to
// image_of_u, jets to iterated shifts, monomials to products. Requires the
// image precision to exceed the highest jet order used.
HurwitzSeries hom_from_u(const HurwitzSeries& image_of_u, const DiffPoly& p);

std::string to_string(const HurwitzSeries& f);

}  // namespace intalg
