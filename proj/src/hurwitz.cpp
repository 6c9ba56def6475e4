#include "intalg/hurwitz.hpp"

#include <algorithm>
#include <stdexcept>

namespace intalg {

HurwitzSeries::HurwitzSeries(std::vector<Rational> coeffs, Rational lambda)
    : coeffs_(std::move(coeffs)), lambda_(std::move(lambda)) {
    if (coeffs_.empty()) throw std::invalid_argument("HurwitzSeries: precision must be >= 1");
}

HurwitzSeries HurwitzSeries::constant(const Rational& c, int precision, const Rational& lambda) {
    if (precision < 1) throw std::invalid_argument("HurwitzSeries: precision must be >= 1");
    std::vector<Rational> v(static_cast<size_t>(precision), Rational(0));
    v[0] = c;
    return HurwitzSeries(std::move(v), lambda);
}

HurwitzSeries HurwitzSeries::delta(int n, int precision, const Rational& lambda) {
    if (precision < 1) throw std::invalid_argument("HurwitzSeries: precision must be >= 1");
    if (n < 0 || n >= precision) throw std::invalid_argument("HurwitzSeries::delta: index out of range");
    std::vector<Rational> v(static_cast<size_t>(precision), Rational(0));
    v[static_cast<size_t>(n)] = 1;
    return HurwitzSeries(std::move(v), lambda);
}

Rational HurwitzSeries::at(int n) const {
    if (n < 0 || n >= precision()) throw std::out_of_range("HurwitzSeries::at: beyond tracked precision");
    return coeffs_[static_cast<size_t>(n)];
}

bool HurwitzSeries::is_zero() const {
    for (auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

HurwitzSeries operator+(const HurwitzSeries& a, const HurwitzSeries& b) {
    if (a.lambda_ != b.lambda_) throw std::invalid_argument("HurwitzSeries: weight mismatch");
    size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Rational> v(n);
    for (size_t k = 0; k < n; ++k) v[k] = a.coeffs_[k] + b.coeffs_[k];
    return HurwitzSeries(std::move(v), a.lambda_);
}

HurwitzSeries operator-(const HurwitzSeries& a, const HurwitzSeries& b) { return a + (-b); }

HurwitzSeries HurwitzSeries::operator-() const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c = -c;
    return HurwitzSeries(std::move(v), lambda_);
}

HurwitzSeries HurwitzSeries::scaled(const Rational& c) const {
    std::vector<Rational> v = coeffs_;
    for (auto& k : v) k *= c;
    return HurwitzSeries(std::move(v), lambda_);
}

bool agree(const HurwitzSeries& a, const HurwitzSeries& b) {
    if (a.lambda_ != b.lambda_) return false;
    size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    for (size_t k = 0; k < n; ++k)
        if (a.coeffs_[k] != b.coeffs_[k]) return false;
    return true;
}

HurwitzSeries hproduct(const HurwitzSeries& f, const HurwitzSeries& g) {
    if (f.lambda() != g.lambda()) throw std::invalid_argument("hproduct: weight mismatch");
    int n = std::min(f.precision(), g.precision());
    std::vector<Rational> v(static_cast<size_t>(n), Rational(0));
    for (int m = 0; m < n; ++m) {
        Rational acc(0);
        for (int k = 0; k <= m; ++k) {
            Rational lk = pow_rational(f.lambda(), static_cast<unsigned>(k));
            if (lk == 0 && k > 0) break;
            for (int j = 0; j <= m - k; ++j) {
                acc += Rational(binomial(static_cast<unsigned>(m), static_cast<unsigned>(k))) *
                       Rational(binomial(static_cast<unsigned>(m - k), static_cast<unsigned>(j))) * lk *
                       f.at(m - j) * g.at(k + j);
            }
        }
        v[static_cast<size_t>(m)] = acc;
    }
    return HurwitzSeries(std::move(v), f.lambda());
}

HurwitzSeries hD(const HurwitzSeries& f) {
    if (f.precision() < 2)
        throw std::domain_error("hD: series of precision 1 has no trusted derivative");
    std::vector<Rational> v(f.coeffs().begin() + 1, f.coeffs().end());
    return HurwitzSeries(std::move(v), f.lambda());
}

HurwitzSeries hP(const HurwitzSeries& f) {
    std::vector<Rational> v;
    v.reserve(f.coeffs().size() + 1);
    v.push_back(0);
    v.insert(v.end(), f.coeffs().begin(), f.coeffs().end());
    return HurwitzSeries(std::move(v), f.lambda());
}

HurwitzSeries hom_from_u(const HurwitzSeries& image_of_u, const DiffPoly& p) {
    int need = std::max(0, p.order());
    if (need >= image_of_u.precision())
        throw std::domain_error("hom_from_u: image precision too small for jet order " + std::to_string(need));
    int out_prec = image_of_u.precision() - need;

    // iterated shifts of the generator image
    std::vector<HurwitzSeries> jets;
    jets.push_back(image_of_u);
    for (int i = 1; i <= need; ++i) jets.push_back(hD(jets.back()));

    HurwitzSeries acc = HurwitzSeries::constant(0, out_prec, image_of_u.lambda());
    for (auto& [m, c] : p.terms()) {
        HurwitzSeries term = HurwitzSeries::constant(c, out_prec, image_of_u.lambda());
        for (auto& [i, e] : m.exponents())
            for (int rep = 0; rep < e; ++rep) term = hproduct(term, jets[static_cast<size_t>(i)]);
        acc = acc + term;
    }
    return acc;
}

std::string to_string(const HurwitzSeries& f) {
    std::string out = "[";
    for (int n = 0; n < f.precision(); ++n) {
        if (n) out += ", ";
        out += f.at(n).str();
    }
    out += "]";
    return out;
}

}  // namespace intalg
