#pragma once

#include "intalg/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace intalg {

// Element of the tensor algebra over a base algebra A: a linear
// combination of nonempty words a_0 (x) a_1 (x) ... (x) a_n whose slots
// are basis monomials of A. General slot entries are expanded
// multilinearly, so equality is structural.
template <typename A>
class TensorElement {
  public:
    using Scalar = typename A::Scalar;
    using Monomial = typename A::Monomial;
    using Word = std::vector<Monomial>;

    TensorElement() = default;

    static TensorElement word(Word w, const Scalar& c = Scalar(1)) {
        if (w.empty()) throw std::invalid_argument("TensorElement: empty word");
        TensorElement e;
        e.add_term(std::move(w), c);
        return e;
    }

    static TensorElement unit(const A& alg) { return word({alg.unit_monomial()}); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Scalar>& terms() const { return terms_; }

    void add_term(const Word& w, const Scalar& c) {
        if (c == Scalar(0)) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_[w] = c;
        } else {
            it->second += c;
            if (it->second == Scalar(0)) terms_.erase(it);
        }
    }

    friend TensorElement operator+(const TensorElement& a, const TensorElement& b) {
        TensorElement r = a;
        for (auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend TensorElement operator-(const TensorElement& a, const TensorElement& b) {
        TensorElement r = a;
        for (auto& [w, c] : b.terms_) r.add_term(w, Scalar(0) - c);
        return r;
    }
    TensorElement operator-() const {
        TensorElement r;
        for (auto& [w, c] : terms_) r.terms_[w] = Scalar(0) - c;
        return r;
    }
    TensorElement scaled(const Scalar& c) const {
        TensorElement r;
        if (c == Scalar(0)) return r;
        for (auto& [w, k] : terms_) r.terms_[w] = k * c;
        return r;
    }
    TensorElement& operator+=(const TensorElement& o) { return *this = *this + o; }
    TensorElement& operator-=(const TensorElement& o) { return *this = *this - o; }

    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

  private:
    std::map<Word, Scalar> terms_;
};

namespace detail {

template <typename A>
TensorElement<A> shuffle_words(const A& alg, const typename TensorElement<A>::Word& a,
                               const typename TensorElement<A>::Word& b) {
    using TE = TensorElement<A>;
    using Word = typename TE::Word;
    TE result;
    auto heads = alg.expand(alg.mul_monomials(a[0], b[0]));
    if (a.size() == 1 && b.size() == 1) {
        for (auto& [m, c] : heads) result.add_term({m}, c);
        return result;
    }
    if (b.size() == 1 || a.size() == 1) {
        // merge heads, keep the longer tail unchanged
        const Word& tail_src = (b.size() == 1) ? a : b;
        for (auto& [m, c] : heads) {
            Word w;
            w.reserve(tail_src.size());
            w.push_back(m);
            w.insert(w.end(), tail_src.begin() + 1, tail_src.end());
            result.add_term(w, c);
        }
        return result;
    }
    // both tails nonempty: recurse on strictly smaller total length
    Word ta(a.begin() + 1, a.end());
    Word tb(b.begin() + 1, b.end());
    Word unit_tb, unit_ta;
    unit_tb.reserve(tb.size() + 1);
    unit_tb.push_back(alg.unit_monomial());
    unit_tb.insert(unit_tb.end(), tb.begin(), tb.end());
    unit_ta.reserve(ta.size() + 1);
    unit_ta.push_back(alg.unit_monomial());
    unit_ta.insert(unit_ta.end(), ta.begin(), ta.end());

    TE inner = shuffle_words(alg, ta, unit_tb) + shuffle_words(alg, unit_ta, tb);
    if (alg.weight() != 0) {
        inner += shuffle_words(alg, ta, tb).scaled(typename A::Scalar(alg.weight()));
    }
    for (auto& [m, c] : heads) {
        for (auto& [w, cw] : inner.terms()) {
            Word full;
            full.reserve(w.size() + 1);
            full.push_back(m);
            full.insert(full.end(), w.begin(), w.end());
            result.add_term(full, c * cw);
        }
    }
    return result;
}

}  // namespace detail

// Mixable-shuffle product of weight alg.weight(): heads multiply in A,
// tails interleave with optional merged slots, one factor of the weight
// per merge. Bilinear; the unit word is the multiplicative unit.
template <typename A>
TensorElement<A> mixable_shuffle(const A& alg, const TensorElement<A>& x, const TensorElement<A>& y) {
    TensorElement<A> result;
    for (auto& [wa, ca] : x.terms())
        for (auto& [wb, cb] : y.terms()) result += detail::shuffle_words(alg, wa, wb).scaled(ca * cb);
    return result;
}

// Independent cross-check of the recursive product on pure words: the tail
// of the result is an explicit enumeration of interleavings of the two
// tails where any a-slot may merge with the next b-slot (product in A, one
// weight factor per merge).
template <typename A>
TensorElement<A> shuffle_oracle(const A& alg, const typename TensorElement<A>::Word& a,
                                const typename TensorElement<A>::Word& b) {
    using TE = TensorElement<A>;
    using Word = typename TE::Word;
    using Scalar = typename A::Scalar;

    TE result;
    auto heads = alg.expand(alg.mul_monomials(a[0], b[0]));
    Word ta(a.begin() + 1, a.end());
    Word tb(b.begin() + 1, b.end());

    // enumerate lattice paths: at (i, j) take a_i, take b_j, or merge both
    struct Walker {
        const A& alg;
        const Word& ta;
        const Word& tb;
        TE acc;
        Word slots;
        void walk(size_t i, size_t j, const Scalar& coeff) {
            if (i == ta.size() && j == tb.size()) {
                acc.add_term(slots, coeff);
                return;
            }
            if (i < ta.size()) {
                slots.push_back(ta[i]);
                walk(i + 1, j, coeff);
                slots.pop_back();
            }
            if (j < tb.size()) {
                slots.push_back(tb[j]);
                walk(i, j + 1, coeff);
                slots.pop_back();
            }
            if (i < ta.size() && j < tb.size() && alg.weight() != 0) {
                for (auto& [m, c] : alg.expand(alg.mul_monomials(ta[i], tb[j]))) {
                    slots.push_back(m);
                    walk(i + 1, j + 1, coeff * c * Scalar(alg.weight()));
                    slots.pop_back();
                }
            }
        }
    };

    Walker walker{alg, ta, tb, {}, {}};
    walker.walk(0, 0, Scalar(1));
    for (auto& [m, c] : heads) {
        for (auto& [w, cw] : walker.acc.terms()) {
            Word full;
            full.reserve(w.size() + 1);
            full.push_back(m);
            full.insert(full.end(), w.begin(), w.end());
            result.add_term(full, c * cw);
        }
    }
    return result;
}

// Rota-Baxter operator on the tensor algebra: prepend the unit of A.
template <typename A>
TensorElement<A> p_shuffle(const A& alg, const TensorElement<A>& x) {
    TensorElement<A> result;
    for (auto& [w, c] : x.terms()) {
        typename TensorElement<A>::Word full;
        full.reserve(w.size() + 1);
        full.push_back(alg.unit_monomial());
        full.insert(full.end(), w.begin(), w.end());
        result.add_term(full, c);
    }
    return result;
}

// Derivation on the tensor algebra: differentiate the head, merge the head
// into the next slot, and the weighted cross term; a left inverse of
// p_shuffle and a derivation of the same weight for the shuffle product.
template <typename A>
TensorElement<A> d_shuffle(const A& alg, const TensorElement<A>& x) {
    using TE = TensorElement<A>;
    using Word = typename TE::Word;
    TE result;
    for (auto& [w, c] : x.terms()) {
        auto da = alg.derive_monomial(w[0]);
        if (w.size() == 1) {
            for (auto& [m, cm] : alg.expand(da)) result.add_term({m}, c * cm);
            continue;
        }
        Word rest(w.begin() + 2, w.end());
        for (auto& [m, cm] : alg.expand(da)) {
            Word full;
            full.reserve(w.size());
            full.push_back(m);
            full.insert(full.end(), w.begin() + 1, w.end());
            result.add_term(full, c * cm);
        }
        auto merged = alg.mul_monomials(w[0], w[1]);
        for (auto& [m, cm] : alg.expand(merged)) {
            Word full;
            full.reserve(rest.size() + 1);
            full.push_back(m);
            full.insert(full.end(), rest.begin(), rest.end());
            result.add_term(full, c * cm);
        }
        if (alg.weight() != 0) {
            auto cross = alg.mul(da, alg.from_monomial(w[1]));
            for (auto& [m, cm] : alg.expand(cross)) {
                Word full;
                full.reserve(rest.size() + 1);
                full.push_back(m);
                full.insert(full.end(), rest.begin(), rest.end());
                result.add_term(full, c * cm * typename A::Scalar(alg.weight()));
            }
        }
    }
    return result;
}

template <typename A>
std::string tensor_to_string(const A& alg, const TensorElement<A>& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (auto& [w, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        std::string cs = to_string(c);
        if (!(cs == "1")) out += (cs.find_first_of("+-*") != std::string::npos && cs.size() > 1 ? "(" + cs + ")" : cs) + "*";
        bool first = true;
        for (auto& m : w) {
            if (!first) out += " (*) ";
            out += alg.monomial_str(m);
            first = false;
        }
    }
    return out;
}

}  // namespace intalg
