#include "intalg/counterexample.hpp"

namespace intalg {

XYPoly::XYPoly(const Rational& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

XYPoly XYPoly::x() { return term(1, 0, 1); }
XYPoly XYPoly::y() { return term(0, 1, 1); }

XYPoly XYPoly::term(int xdeg, int ydeg, const Rational& c) {
    XYPoly p;
    p.add_term(xdeg, ydeg, c);
    return p;
}

void XYPoly::add_term(int xdeg, int ydeg, const Rational& c) {
    if (ydeg >= 4 || c == 0) return;  // y^4 = 0
    auto key = std::make_pair(xdeg, ydeg);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

XYPoly operator+(const XYPoly& a, const XYPoly& b) {
    XYPoly r = a;
    for (auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
}

XYPoly operator-(const XYPoly& a, const XYPoly& b) {
    XYPoly r = a;
    for (auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

XYPoly operator*(const XYPoly& a, const XYPoly& b) {
    XYPoly r;
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

XYPoly XYPoly::operator-() const {
    XYPoly r;
    for (auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

XYPoly XYPoly::scaled(const Rational& c) const {
    XYPoly r;
    if (c == 0) return r;
    for (auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

Rational XYPoly::eval_origin() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

XYPoly XYPoly::d_dx() const {
    XYPoly r;
    for (auto& [k, c] : terms_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, c * k.first);
    return r;
}

XYPoly XYPoly::p_op() const {
    XYPoly r;
    for (auto& [k, c] : terms_) r.add_term(k.first + 1, k.second, c / Rational(k.first + 1));
    r.add_term(0, 2, eval_origin());
    return r;
}

std::string to_string(const XYPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto& [k, c] = *it;
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
        std::string mono;
        if (k.first > 0) mono += k.first == 1 ? "x" : "x^" + std::to_string(k.first);
        if (k.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += k.second == 1 ? "y" : "y^" + std::to_string(k.second);
        }
        if (mono.empty()) {
            out += a.str();
        } else {
            if (a != 1) out += a.str() + "*";
            out += mono;
        }
    }
    return out;
}

}  // namespace intalg
