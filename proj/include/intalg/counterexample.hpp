#pragma once

#include "intalg/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace intalg {

// Polynomials in x over Q[y]/(y^4): the carrier of a differential
// Rota-Baxter algebra of weight 0 that is not integro-differential. The
// derivation is d/dx; the operator P adds f(0,0) y^2 on top of the
// ordinary integral from 0, which preserves the section and Rota-Baxter
// identities (y^4 = 0 kills the offending square) but breaks the hybrid
// identity with discrepancy y^3 at the inputs (x, y).
class XYPoly {
  public:
    XYPoly() = default;
    XYPoly(const Rational& c);
    XYPoly(int c) : XYPoly(Rational(c)) {}

    static XYPoly x();
    static XYPoly y();
    static XYPoly term(int xdeg, int ydeg, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

    void add_term(int xdeg, int ydeg, const Rational& c);

    friend XYPoly operator+(const XYPoly& a, const XYPoly& b);
    friend XYPoly operator-(const XYPoly& a, const XYPoly& b);
    friend XYPoly operator*(const XYPoly& a, const XYPoly& b);
    XYPoly operator-() const;
    XYPoly scaled(const Rational& c) const;

    bool operator==(const XYPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const XYPoly& o) const { return !(*this == o); }

    // coefficient of x^0 y^0
    Rational eval_origin() const;

    XYPoly d_dx() const;

    // integral from 0 in x, plus the y^2 correction at the origin
    XYPoly p_op() const;

  private:
    std::map<std::pair<int, int>, Rational> terms_;  // (xdeg, ydeg) -> coeff, ydeg < 4
};

std::string to_string(const XYPoly& p);

}  // namespace intalg
