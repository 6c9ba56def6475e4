#include "intalg/gaussian.hpp"

#include <ostream>
#include <sstream>

namespace intalg {

GaussianRational pow_gaussian(const GaussianRational& z, unsigned n) {
    GaussianRational acc(1);
    GaussianRational base = z;
    while (n > 0) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1u;
    }
    return acc;
}

std::pair<GaussianRational, BigInt> strip_shift(const GaussianRational& alpha, const Rational& lambda) {
    if (lambda == 0) throw std::domain_error("strip_shift: lambda must be nonzero");
    // n = floor(Re(alpha)/lambda) for lambda > 0, mirrored for lambda < 0,
    // so that Re(alpha) - n*lambda lands in [0, |lambda|).
    Rational ratio = alpha.re / lambda;
    BigInt n = floor_rational(ratio);
    if (lambda < 0) {
        // floor(re/|l|) with the shift direction reversed
        n = -floor_rational(alpha.re / (-lambda));
    }
    GaussianRational beta(alpha.re - Rational(n) * lambda, alpha.im);
    return {beta, n};
}

std::string to_string(const GaussianRational& z) {
    if (z.is_zero()) return "0";
    std::string out;
    if (z.re != 0) out += z.re.str();
    if (z.im != 0) {
        if (!out.empty() && z.im > 0) out += "+";
        if (z.im == 1)
            out += "I";
        else if (z.im == -1)
            out += "-I";
        else
            out += z.im.str() + "*I";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

}  // namespace intalg
