#include "intalg/ratfunc.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace intalg {

GPoly::GPoly(const GaussianRational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

GPoly::GPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

GPoly GPoly::x() {
    GPoly p;
    p.c_ = {GaussianRational(0), GaussianRational(1)};
    return p;
}

void GPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational GPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return GaussianRational(0);
    return c_[static_cast<size_t>(k)];
}

GaussianRational GPoly::eval(const GaussianRational& point) const {
    GaussianRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

GPoly GPoly::shifted(const GaussianRational& delta) const {
    // Horner in (x + delta): fold the coefficients from the top
    GPoly acc;
    GPoly lin;
    lin.c_ = {delta, GaussianRational(1)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + GPoly(*it);
    return acc;
}

GPoly operator+(const GPoly& a, const GPoly& b) {
    GPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), GaussianRational(0));
    for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    r.trim();
    return r;
}

GPoly operator-(const GPoly& a, const GPoly& b) { return a + (-b); }

GPoly operator*(const GPoly& a, const GPoly& b) {
    GPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, GaussianRational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

GPoly GPoly::operator-() const {
    GPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

GPoly GPoly::scaled(const GaussianRational& c) const {
    GPoly r;
    if (c.is_zero()) return r;
    r.c_ = c_;
    for (auto& k : r.c_) k *= c;
    return r;
}

GPoly GPoly::pow(unsigned n) const {
    GPoly acc(GaussianRational(1));
    GPoly base = *this;
    while (n > 0) {
        if (n & 1u) acc = acc * base;
        base = base * base;
        n >>= 1u;
    }
    return acc;
}

std::pair<GPoly, GPoly> GPoly::divrem(const GPoly& a, const GPoly& b) {
    if (b.is_zero()) throw std::domain_error("GPoly::divrem: division by zero polynomial");
    GPoly r = a;
    GPoly q;
    int db = b.degree();
    GaussianRational lead = b.c_.back();
    if (r.degree() >= db) q.c_.assign(static_cast<size_t>(r.degree() - db) + 1, GaussianRational(0));
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        GaussianRational f = r.c_.back() / lead;
        q.c_[static_cast<size_t>(k)] = f;
        for (int j = 0; j <= db; ++j) r.c_[static_cast<size_t>(k + j)] -= f * b.coeff(j);
        r.trim();
    }
    q.trim();
    return {q, r};
}

GPoly GPoly::deflated(const GaussianRational& alpha) const {
    if (is_zero()) return GPoly();
    GPoly q;
    q.c_.assign(c_.size() - 1, GaussianRational(0));
    GaussianRational carry(0);
    for (int k = degree(); k >= 1; --k) {
        carry = carry * alpha + c_[static_cast<size_t>(k)];
        q.c_[static_cast<size_t>(k - 1)] = carry;
    }
    q.trim();
    return q;
}

RatFunc RatFunc::fraction(const GaussianRational& alpha, int mult, const GaussianRational& gamma) {
    RatFunc f;
    f.add_fraction(alpha, mult, gamma);
    return f;
}

void RatFunc::add_fraction(const GaussianRational& alpha, int mult, const GaussianRational& gamma) {
    if (mult < 1) throw std::invalid_argument("RatFunc: pole multiplicity must be >= 1");
    if (gamma.is_zero()) return;
    PoleKey key{alpha, mult};
    auto it = fracs_.find(key);
    if (it == fracs_.end()) {
        fracs_[key] = gamma;
    } else {
        it->second += gamma;
        if (it->second.is_zero()) fracs_.erase(it);
    }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    RatFunc r = a;
    r.poly_ = a.poly_ + b.poly_;
    for (auto& [key, g] : b.fracs_) r.add_fraction(key.alpha, key.mult, g);
    return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.poly_ = -poly_;
    for (auto& [key, g] : fracs_) r.fracs_[key] = -g;
    return r;
}

RatFunc RatFunc::scaled(const GaussianRational& c) const {
    RatFunc r;
    if (c.is_zero()) return r;
    r.poly_ = poly_.scaled(c);
    for (auto& [key, g] : fracs_) r.fracs_[key] = g * c;
    return r;
}

RatFunc::NumDen RatFunc::to_num_den() const {
    std::map<GaussianRational, int> mult;
    for (auto& [key, g] : fracs_) mult[key.alpha] = std::max(mult[key.alpha], key.mult);

    GPoly den(GaussianRational(1));
    for (auto& [alpha, m] : mult) {
        GPoly lin({-alpha, GaussianRational(1)});
        den = den * lin.pow(static_cast<unsigned>(m));
    }
    GPoly num = poly_ * den;
    for (auto& [key, g] : fracs_) {
        // gamma * den / (x-alpha)^j
        GPoly part(g);
        for (auto& [alpha, m] : mult) {
            int power = (alpha == key.alpha) ? m - key.mult : m;
            if (power > 0) {
                GPoly lin({-alpha, GaussianRational(1)});
                part = part * lin.pow(static_cast<unsigned>(power));
            }
        }
        num = num + part;
    }
    NumDen nd;
    nd.num = num;
    for (auto& [alpha, m] : mult) nd.den.emplace_back(alpha, m);
    return nd;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.fracs_.empty() && b.fracs_.empty()) return RatFunc(a.poly_ * b.poly_);
    auto na = a.to_num_den();
    auto nb = b.to_num_den();
    std::map<GaussianRational, int> mult;
    for (auto& [alpha, m] : na.den) mult[alpha] += m;
    for (auto& [alpha, m] : nb.den) mult[alpha] += m;
    std::vector<std::pair<GaussianRational, int>> den(mult.begin(), mult.end());
    return to_partial_fractions(na.num * nb.num, den);
}

GaussianRational RatFunc::eval(const GaussianRational& point) const {
    GaussianRational acc = poly_.eval(point);
    for (auto& [key, g] : fracs_) {
        GaussianRational d = point - key.alpha;
        if (d.is_zero()) throw std::domain_error("RatFunc::eval: evaluation at a pole");
        acc += g / pow_gaussian(d, static_cast<unsigned>(key.mult));
    }
    return acc;
}

RatFunc to_partial_fractions(const GPoly& num, const std::vector<std::pair<GaussianRational, int>>& den_factors) {
    for (size_t i = 0; i < den_factors.size(); ++i) {
        if (den_factors[i].second < 1)
            throw std::invalid_argument("to_partial_fractions: multiplicity must be >= 1");
        for (size_t j = i + 1; j < den_factors.size(); ++j)
            if (den_factors[i].first == den_factors[j].first)
                throw std::invalid_argument("to_partial_fractions: repeated root in factor list");
    }

    GPoly den(GaussianRational(1));
    for (auto& [alpha, m] : den_factors) {
        GPoly lin({-alpha, GaussianRational(1)});
        den = den * lin.pow(static_cast<unsigned>(m));
    }

    auto [quo, rem] = GPoly::divrem(num, den);
    RatFunc result(quo);

    // peel one residue at a time: with den = (x-alpha)^m R and
    // c = N(alpha)/R(alpha),  N/((x-alpha)^m R) - c/(x-alpha)^m has a
    // numerator divisible by (x-alpha)
    std::map<GaussianRational, int> live;
    for (auto& [alpha, m] : den_factors) live[alpha] = m;
    GPoly n = rem;
    while (!n.is_zero()) {
        auto it = live.begin();
        if (it == live.end()) throw std::logic_error("to_partial_fractions: nonzero remainder");
        const GaussianRational alpha = it->first;
        int m = it->second;
        GPoly rest(GaussianRational(1));
        for (auto& [beta, mm] : live) {
            if (beta == alpha) continue;
            GPoly lin({-beta, GaussianRational(1)});
            rest = rest * lin.pow(static_cast<unsigned>(mm));
        }
        GaussianRational c = n.eval(alpha) / rest.eval(alpha);
        result.add_fraction(alpha, m, c);
        n = (n - rest.scaled(c)).deflated(alpha);
        if (--it->second == 0) live.erase(it);
    }
    return result;
}

RatFunc divide_factored(const RatFunc& f, const GaussianRational& c,
                        const std::vector<std::pair<GaussianRational, int>>& den_factors) {
    if (c.is_zero()) throw std::domain_error("divide_factored: zero denominator");
    if (den_factors.empty()) return f.scaled(GaussianRational(1) / c);
    auto nd = f.to_num_den();
    std::map<GaussianRational, int> mult;
    for (auto& [alpha, m] : nd.den) mult[alpha] += m;
    for (auto& [alpha, m] : den_factors) {
        if (m < 1) throw std::invalid_argument("divide_factored: multiplicity must be >= 1");
        mult[alpha] += m;
    }
    std::vector<std::pair<GaussianRational, int>> den(mult.begin(), mult.end());
    return to_partial_fractions(nd.num.scaled(GaussianRational(1) / c), den);
}

RatFunc d_dx(const RatFunc& f) {
    RatFunc r;
    std::vector<GaussianRational> dc;
    for (int k = 1; k <= f.poly().degree(); ++k) dc.push_back(f.poly().coeff(k) * GaussianRational(k));
    r += RatFunc(GPoly(std::move(dc)));
    for (auto& [key, g] : f.fracs())
        r.add_fraction(key.alpha, key.mult + 1, g * GaussianRational(-key.mult));
    return r;
}

RatFunc d_lambda(const RatFunc& f, const Rational& lambda) {
    if (lambda == 0) throw std::domain_error("d_lambda: lambda must be nonzero (use d_dx)");
    GaussianRational l(lambda);
    GaussianRational inv = GaussianRational(1) / l;
    RatFunc r((f.poly().shifted(l) - f.poly()).scaled(inv));
    for (auto& [key, g] : f.fracs()) {
        // 1/(x+l-alpha)^j = 1/(x-(alpha-l))^j
        r.add_fraction(key.alpha - l, key.mult, g * inv);
        r.add_fraction(key.alpha, key.mult, -g * inv);
    }
    return r;
}

RatDecomposition quasi_antiderivative_0(const RatFunc& f) {
    RatDecomposition d;
    std::vector<GaussianRational> q(static_cast<size_t>(f.poly().degree()) + 2, GaussianRational(0));
    for (int k = 0; k <= f.poly().degree(); ++k)
        q[static_cast<size_t>(k) + 1] = f.poly().coeff(k) / GaussianRational(k + 1);
    d.q += RatFunc(GPoly(std::move(q)));
    for (auto& [key, g] : f.fracs()) {
        if (key.mult == 1)
            d.t.add_fraction(key.alpha, 1, g);
        else
            d.q.add_fraction(key.alpha, key.mult - 1, g / GaussianRational(1 - key.mult));
    }
    return d;
}

RatDecomposition quasi_antiderivative_lambda(const RatFunc& f, const Rational& lambda) {
    if (lambda == 0) throw std::domain_error("quasi_antiderivative_lambda: lambda must be nonzero");
    RatDecomposition d;

    // polynomial part: shift the falling-factorial index up by one
    if (!f.poly().is_zero()) {
        FallingFactorialPoly ff = poly_to_falling(f.poly(), lambda);
        FallingFactorialPoly up(lambda);
        for (auto& [n, c] : ff.coeffs()) up.add(n + 1, c);
        d.q += RatFunc(falling_to_poly(up));
    }

    // fraction part: move each pole into the strip Re in [0, |lambda|);
    // the telescoping sum along the way is an exact preimage under the
    // difference quotient
    GaussianRational l(lambda);
    for (auto& [key, g] : f.fracs()) {
        auto [beta, n] = strip_shift(key.alpha, lambda);
        d.t.add_fraction(beta, key.mult, g);
        if (n > 0) {
            for (BigInt m = 0; m < n; ++m)
                d.q.add_fraction(key.alpha - l * GaussianRational(Rational(m)), key.mult, -g * l);
        } else if (n < 0) {
            for (BigInt m = n; m < 0; ++m)
                d.q.add_fraction(key.alpha - l * GaussianRational(Rational(m)), key.mult, g * l);
        }
    }
    return d;
}

void FallingFactorialPoly::add(int n, const GaussianRational& c) {
    if (n < 0) throw std::invalid_argument("FallingFactorialPoly: negative index");
    if (c.is_zero()) return;
    auto it = coeffs_.find(n);
    if (it == coeffs_.end()) {
        coeffs_[n] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

GPoly falling_basis(int n, const Rational& lambda) {
    GPoly p(GaussianRational(1));
    for (int k = 0; k < n; ++k) {
        GPoly lin({GaussianRational(-lambda * k), GaussianRational(1)});
        p = p * lin;
    }
    return p.scaled(GaussianRational(Rational(1, factorial(static_cast<unsigned>(n)))));
}

BigInt stirling_first(unsigned n, unsigned k) {
    // signed: s(n+1,k) = s(n,k-1) - n*s(n,k)
    std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, 0));
    s[0][0] = 1;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] - BigInt(i - 1) * s[i - 1][j];
    return k <= n ? s[n][k] : BigInt(0);
}

BigInt stirling_second(unsigned n, unsigned k) {
    std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, 0));
    s[0][0] = 1;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= i; ++j) s[i][j] = BigInt(j) * s[i - 1][j] + s[i - 1][j - 1];
    return k <= n ? s[n][k] : BigInt(0);
}

FallingFactorialPoly poly_to_falling(const GPoly& p, const Rational& lambda) {
    // x^n = sum_k S(n,k) lambda^(n-k) k! ff(x,k)
    FallingFactorialPoly out(lambda);
    for (int n = 0; n <= p.degree(); ++n) {
        GaussianRational cn = p.coeff(n);
        if (cn.is_zero()) continue;
        for (int k = 0; k <= n; ++k) {
            Rational factor = Rational(stirling_second(static_cast<unsigned>(n), static_cast<unsigned>(k))) *
                              pow_rational(lambda, static_cast<unsigned>(n - k)) *
                              Rational(factorial(static_cast<unsigned>(k)));
            out.add(k, cn * GaussianRational(factor));
        }
    }
    return out;
}

GPoly falling_to_poly(const FallingFactorialPoly& f) {
    // ff(x,n) = (1/n!) sum_k s(n,k) lambda^(n-k) x^k
    GPoly out;
    for (auto& [n, c] : f.coeffs()) {
        std::vector<GaussianRational> coeffs(static_cast<size_t>(n) + 1, GaussianRational(0));
        Rational invfact(1, factorial(static_cast<unsigned>(n)));
        for (int k = 0; k <= n; ++k) {
            Rational factor = Rational(stirling_first(static_cast<unsigned>(n), static_cast<unsigned>(k))) *
                              pow_rational(f.lambda(), static_cast<unsigned>(n - k)) * invfact;
            coeffs[static_cast<size_t>(k)] = c * GaussianRational(factor);
        }
        out = out + GPoly(std::move(coeffs));
    }
    return out;
}

std::string to_string(const GPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        GaussianRational c = p.coeff(k);
        if (c.is_zero()) continue;
        std::string coeff = to_string(c);
        bool negated = false;
        if (c.im == 0 && c.re < 0) {
            coeff = to_string(-c);
            negated = true;
        }
        if (out.empty())
            out += negated ? "-" : "";
        else
            out += negated ? " - " : " + ";
        bool needs_parens = (c.re != 0 && c.im != 0);
        std::string cs = needs_parens ? "(" + coeff + ")" : coeff;
        if (k == 0) {
            out += cs;
        } else {
            if (!(coeff == "1")) out += cs + "*";
            out += (k == 1) ? "x" : "x^" + std::to_string(k);
        }
    }
    return out;
}

std::string to_string(const RatFunc& f) {
    if (f.is_zero()) return "0";
    std::string out;
    if (!f.poly().is_zero()) out = to_string(f.poly());
    for (auto& [key, g] : f.fracs()) {
        std::string num = "(" + to_string(g) + ")";
        std::string den;
        if (key.alpha.is_zero())
            den = "x";
        else
            den = "(x-(" + to_string(key.alpha) + "))";
        if (key.mult != 1) den += "^" + std::to_string(key.mult);
        if (!out.empty()) out += " + ";
        out += num + "/" + den;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << to_string(f); }

}  // namespace intalg
