#include "intalg/base_algebra.hpp"

namespace intalg {

RatFuncAlgebra::Element RatFuncAlgebra::from_monomial(const Monomial& m, const Scalar& c) const {
    if (m.is_pole()) return RatFunc::fraction(m.alpha, m.pole_mult, c);
    std::vector<GaussianRational> coeffs(static_cast<size_t>(m.xpow) + 1, GaussianRational(0));
    coeffs.back() = c;
    return RatFunc(GPoly(std::move(coeffs)));
}

std::vector<std::pair<RatMonomial, GaussianRational>> RatFuncAlgebra::expand(const Element& e) const {
    std::vector<std::pair<RatMonomial, GaussianRational>> out;
    for (int k = 0; k <= e.poly().degree(); ++k) {
        GaussianRational c = e.poly().coeff(k);
        if (!c.is_zero()) out.emplace_back(RatMonomial::power(k), c);
    }
    for (auto& [key, g] : e.fracs()) out.emplace_back(RatMonomial::pole(key.alpha, key.mult), g);
    return out;
}

bool RatFuncAlgebra::is_transcendental_basis(const Monomial& m) const {
    if (!m.is_pole()) return false;  // polynomials are derivatives of polynomials
    if (lambda_ == 0) return m.pole_mult == 1;
    return m.alpha.re >= 0 && m.alpha.re < abs_rational(lambda_);
}

std::string RatFuncAlgebra::monomial_str(const Monomial& m) const {
    if (!m.is_pole()) {
        if (m.xpow == 0) return "1";
        if (m.xpow == 1) return "x";
        return "x^" + std::to_string(m.xpow);
    }
    std::string den = m.alpha.is_zero() ? "x" : "(x-(" + to_string(m.alpha) + "))";
    if (m.pole_mult != 1) den += "^" + std::to_string(m.pole_mult);
    return "1/" + den;
}

}  // namespace intalg
