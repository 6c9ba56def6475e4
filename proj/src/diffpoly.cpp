#include "intalg/diffpoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace intalg {

DiffMonomial::DiffMonomial(std::map<int, int> exps) : exps_(std::move(exps)) {
    for (auto it = exps_.begin(); it != exps_.end();) {
        if (it->first < 0) throw std::invalid_argument("DiffMonomial: negative jet index");
        if (it->second < 0) throw std::invalid_argument("DiffMonomial: negative exponent");
        if (it->second == 0)
            it = exps_.erase(it);
        else
            ++it;
    }
}

DiffMonomial DiffMonomial::jet(int i) {
    if (i < 0) throw std::invalid_argument("DiffMonomial::jet: negative index");
    DiffMonomial m;
    m.exps_[i] = 1;
    return m;
}

int DiffMonomial::total_degree() const {
    int d = 0;
    for (auto& [i, e] : exps_) d += e;
    return d;
}

int DiffMonomial::exponent(int i) const {
    auto it = exps_.find(i);
    return it == exps_.end() ? 0 : it->second;
}

bool DiffMonomial::is_functional() const {
    int k = order();
    return k <= 0 || exps_.rbegin()->second > 1;
}

DiffMonomial DiffMonomial::times(const DiffMonomial& other) const {
    DiffMonomial r = *this;
    for (auto& [i, e] : other.exps_) r.exps_[i] += e;
    return r;
}

DiffMonomial DiffMonomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("DiffMonomial::pow: negative power");
    DiffMonomial r;
    if (k == 0) return r;
    for (auto& [i, e] : exps_) r.exps_[i] = e * k;
    return r;
}

DiffMonomial DiffMonomial::without(int i) const {
    DiffMonomial r = *this;
    r.exps_.erase(i);
    return r;
}

bool DiffMonomial::operator<(const DiffMonomial& o) const {
    int ka = order(), kb = o.order();
    if (ka != kb) return ka < kb;
    int da = total_degree(), db = o.total_degree();
    if (da != db) return da < db;
    for (int i = ka; i >= 0; --i) {
        int ea = exponent(i), eb = o.exponent(i);
        if (ea != eb) return ea < eb;
    }
    return false;
}

DiffPoly::DiffPoly(const Rational& c) {
    if (c != 0) terms_[DiffMonomial::one()] = c;
}

DiffPoly DiffPoly::monomial(const DiffMonomial& m, const Rational& c) {
    DiffPoly p;
    if (c != 0) p.terms_[m] = c;
    return p;
}

bool DiffPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational DiffPoly::constant_term() const {
    auto it = terms_.find(DiffMonomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

int DiffPoly::order() const {
    int k = -1;
    for (auto& [m, c] : terms_) k = std::max(k, m.order());
    return k;
}

int DiffPoly::total_degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void DiffPoly::add_term(const DiffMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
    if (this == &o) return *this = *this + o;
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
    if (this == &o) return *this = *this - o;
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

void DiffPoly::add_scaled(const DiffPoly& o, const Rational& c) {
    if (c == 0) return;
    if (this == &o) {
        *this = *this + o.scaled(c);
        return;
    }
    for (auto& [m, k] : o.terms_) add_term(m, k * c);
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

DiffPoly DiffPoly::scaled(const Rational& c) const {
    DiffPoly r;
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

namespace {

// D(u_i * rest) = u_{i+1} rest + u_i D(rest) + lambda u_{i+1} D(rest),
// peeling one variable at a time.
DiffPoly derive_monomial(const DiffMonomial& m, const Rational& lambda) {
    if (m.is_one()) return DiffPoly();
    int i = m.exponents().begin()->first;
    DiffMonomial rest = m;
    {
        std::map<int, int> exps = m.exponents();
        if (--exps[i] == 0) exps.erase(i);
        rest = DiffMonomial(std::move(exps));
    }
    DiffMonomial ui = DiffMonomial::jet(i);
    DiffMonomial ui1 = DiffMonomial::jet(i + 1);
    if (rest.is_one()) return DiffPoly::monomial(ui1);
    DiffPoly drest = derive_monomial(rest, lambda);
    DiffPoly r = DiffPoly::monomial(ui1.times(rest));
    r += DiffPoly::monomial(ui) * drest;
    if (lambda != 0) r += (DiffPoly::monomial(ui1) * drest).scaled(lambda);
    return r;
}

}  // namespace

DiffPoly d_poly(const DiffPoly& p, const Rational& lambda) {
    DiffPoly r;
    for (auto& [m, c] : p.terms()) r += derive_monomial(m, lambda).scaled(c);
    return r;
}

DiffPoly d_monomial_closed(const DiffMonomial& m, const Rational& lambda) {
    if (m.is_one()) return DiffPoly();
    std::vector<std::pair<int, int>> vars(m.exponents().begin(), m.exponents().end());
    std::vector<int> beta(vars.size(), 0);
    DiffPoly result;
    // enumerate all splittings 0 <= beta_i <= alpha_i with sum >= 1
    while (true) {
        size_t pos = 0;
        while (pos < beta.size() && beta[pos] == vars[pos].second) {
            beta[pos] = 0;
            ++pos;
        }
        if (pos == beta.size()) break;
        ++beta[pos];

        int total = 0;
        for (int b : beta) total += b;
        if (total < 1) continue;
        Rational coeff = pow_rational(lambda, static_cast<unsigned>(total - 1));
        if (coeff == 0) continue;
        std::map<int, int> exps;
        for (size_t t = 0; t < vars.size(); ++t) {
            auto [i, alpha] = vars[t];
            coeff *= Rational(binomial(static_cast<unsigned>(alpha), static_cast<unsigned>(beta[t])));
            if (alpha - beta[t] > 0) exps[i] += alpha - beta[t];
            if (beta[t] > 0) exps[i + 1] += beta[t];
        }
        result.add_term(DiffMonomial(std::move(exps)), coeff);
    }
    return result;
}

const RangeDecomposition& QuasiAntiderivativeCache::monomial(const DiffMonomial& m) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto hit = memo_.find(m);
        if (hit != memo_.end()) return hit->second;
    }

    RangeDecomposition result;
    if (m.is_functional()) {
        result.t = DiffPoly::monomial(m);
    } else {
        // m = prefix * u_{k-1}^a * u_k with top exponent 1. With
        // g = u_{k-1}^{a+1} the weighted Leibniz rule gives
        //   (a+1) m = D(prefix * g) - R,
        //   R = D(prefix) g + lambda D(prefix) D(g) + (prefix D(g) - (a+1) m),
        // and every monomial of R is either of lower order or strictly
        // smaller under (order, exponents from the lowest jet index up),
        // which is a well-order, so the recursion bottoms out.
        int k = m.order();
        int a = m.exponent(k - 1);
        DiffMonomial prefix = m.without(k - 1).without(k);
        DiffMonomial g = DiffMonomial::jet(k - 1).pow(a + 1);
        Rational inv(1, a + 1);

        result.q.add_term(prefix.times(g), inv);

        DiffPoly dg = derive_monomial(g, lambda_);
        DiffPoly rem = DiffPoly::monomial(prefix) * dg - DiffPoly::monomial(m).scaled(Rational(a + 1));
        if (!prefix.is_one()) {
            DiffPoly dprefix = derive_monomial(prefix, lambda_);
            rem += dprefix * DiffPoly::monomial(g);
            if (lambda_ != 0) rem += (dprefix * dg).scaled(lambda_);
        }
        for (auto& [rm, rc] : rem.terms()) {
            const RangeDecomposition& sub = monomial(rm);
            result.q.add_scaled(sub.q, -inv * rc);
            result.t.add_scaled(sub.t, -inv * rc);
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto [pos, inserted] = memo_.emplace(m, std::move(result));
    return pos->second;
}

RangeDecomposition QuasiAntiderivativeCache::decompose(const DiffPoly& p) {
    RangeDecomposition out;
    for (auto& [m, c] : p.terms()) {
        const RangeDecomposition& sub = monomial(m);
        out.q.add_scaled(sub.q, c);
        out.t.add_scaled(sub.t, c);
    }
    return out;
}

RangeDecomposition decompose_range(const DiffPoly& p, const Rational& lambda) {
    QuasiAntiderivativeCache cache(lambda);
    return cache.decompose(p);
}

DiffPoly quasi_antiderivative(const DiffPoly& p, const Rational& lambda) {
    return decompose_range(p, lambda).q;
}

DiffProjectors projectors(const DiffPoly& p, const Rational& lambda) {
    DiffPoly j = quasi_antiderivative(d_poly(p, lambda), lambda);
    DiffPoly s = d_poly(quasi_antiderivative(p, lambda), lambda);
    return {p - j, j, s, p - s};
}

std::string to_string(const DiffMonomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (auto& [i, e] : m.exponents()) {
        if (!out.empty()) out += "*";
        if (i == 0)
            out += "u";
        else if (i == 1)
            out += "u'";
        else if (i == 2)
            out += "u''";
        else
            out += "u^(" + std::to_string(i) + ")";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string to_string(const DiffPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // leading (largest) terms first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (m.is_one()) {
            out += a.str();
        } else {
            if (a != 1) out += a.str() + "*";
            out += to_string(m);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const DiffPoly& p) { return os << to_string(p); }

}  // namespace intalg
