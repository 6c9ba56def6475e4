#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace intalg {

// Exact arbitrary-precision arithmetic. Rationals are kept in canonical
// form (coprime, positive denominator) by the backing type.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return numerator(r); }
inline BigInt den(const Rational& r) { return denominator(r); }

inline bool is_zero(const Rational& r) { return r == 0; }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Integer division rounding toward minus infinity (cpp_int '/' truncates
// toward zero).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    BigInt q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt floor_rational(const Rational& r) {
    return floor_div(numerator(r), denominator(r));
}

inline Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// r^n for n >= 0, with 0^0 = 1.
inline Rational pow_rational(const Rational& r, unsigned n) {
    Rational acc(1);
    Rational base = r;
    while (n > 0) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1u;
    }
    return acc;
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

// Parses "p", "-p" or "p/q"; q must be nonzero.
inline Rational parse_rational(const std::string& text) {
    try {
        Rational r(text);
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational literal: '" + text + "'");
    }
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace intalg
