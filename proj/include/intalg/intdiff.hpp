#pragma once

#include "intalg/rational.hpp"
#include "intalg/shuffle.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace intalg {

// Element of the free commutative integro-differential algebra over a
// regular differential algebra A. Normal form: a linear combination of
// triples
//
//     eps(b) (x) a (x) t_1 (x) ... (x) t_n
//
// where b, a are basis monomials of A and the tail entries t_i are basis
// monomials of the transcendental complement of im D. The eps factor is a
// frozen copy of A (zero derivation, constants of the integral); scalars
// in it are pulled into the coefficient, so equality is structural.
template <typename A>
class IDElement {
  public:
    using Scalar = typename A::Scalar;
    using Monomial = typename A::Monomial;
    using Tail = std::vector<Monomial>;

    struct Key {
        Monomial eps;
        Monomial head;
        Tail tail;

        friend bool operator<(const Key& a, const Key& b) {
            if (a.eps != b.eps) return a.eps < b.eps;
            if (a.head != b.head) return a.head < b.head;
            return a.tail < b.tail;
        }
        friend bool operator==(const Key& a, const Key& b) {
            return a.eps == b.eps && a.head == b.head && a.tail == b.tail;
        }
    };

    IDElement() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }

    void add_term(const Key& k, const Scalar& c) {
        if (c == Scalar(0)) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = c;
        } else {
            it->second += c;
            if (it->second == Scalar(0)) terms_.erase(it);
        }
    }

    friend IDElement operator+(const IDElement& a, const IDElement& b) {
        IDElement r = a;
        for (auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }
    friend IDElement operator-(const IDElement& a, const IDElement& b) {
        IDElement r = a;
        for (auto& [k, c] : b.terms_) r.add_term(k, Scalar(0) - c);
        return r;
    }
    IDElement operator-() const {
        IDElement r;
        for (auto& [k, c] : terms_) r.terms_[k] = Scalar(0) - c;
        return r;
    }
    IDElement scaled(const Scalar& c) const {
        IDElement r;
        if (c == Scalar(0)) return r;
        for (auto& [k, v] : terms_) r.terms_[k] = v * c;
        return r;
    }
    IDElement& operator+=(const IDElement& o) { return *this = *this + o; }
    IDElement& operator-=(const IDElement& o) { return *this = *this - o; }

    bool operator==(const IDElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const IDElement& o) const { return !(*this == o); }

  private:
    std::map<Key, Scalar> terms_;
};

// The integro-differential structure on IDElement<A>. Holds the base
// algebra (which carries the weight and the quasi-antiderivative) plus a
// memo table for the integral's word recursion.
template <typename A>
class IdAlgebra {
  public:
    using Scalar = typename A::Scalar;
    using Monomial = typename A::Monomial;
    using Element = IDElement<A>;
    using Key = typename Element::Key;
    using Tail = typename Element::Tail;

    explicit IdAlgebra(A base) : base_(std::move(base)) {}

    const A& base() const { return base_; }
    const Rational& weight() const { return base_.weight(); }

    Element one() const {
        Element e;
        e.add_term(unit_key(), Scalar(1));
        return e;
    }
    Element zero() const { return Element(); }

    // i_A: embed a into the head slot
    Element embed(const typename A::Element& a) const {
        Element e;
        for (auto& [m, c] : base_.expand(a)) e.add_term({base_.unit_monomial(), m, {}}, c);
        return e;
    }

    // eps(a): embed a into the frozen copy
    Element eps_embed(const typename A::Element& a) const {
        Element e;
        for (auto& [m, c] : base_.expand(a)) e.add_term({m, base_.unit_monomial(), {}}, c);
        return e;
    }

    Element mul(const Element& x, const Element& y) const {
        Element r;
        for (auto& [ka, ca] : x.terms()) {
            for (auto& [kb, cb] : y.terms()) {
                auto eps_prod = base_.expand(base_.mul_monomials(ka.eps, kb.eps));
                auto word_prod = detail::shuffle_words(base_, to_word(ka), to_word(kb));
                Scalar c = ca * cb;
                for (auto& [em, ec] : eps_prod)
                    for (auto& [w, wc] : word_prod.terms()) r.add_term(from_word(em, w), c * ec * wc);
            }
        }
        return r;
    }

    // derivation: zero on the eps factor, head rule on the word
    Element derive(const Element& x) const {
        Element r;
        for (auto& [k, c] : x.terms()) {
            auto dw = d_shuffle(base_, TensorElement<A>::word(to_word(k)));
            for (auto& [w, wc] : dw.terms()) r.add_term(from_word(k.eps, w), c * wc);
        }
        return r;
    }

    // integral: linear over the eps factor, word recursion on length
    Element integrate(const Element& x) const {
        Element r;
        for (auto& [k, c] : x.terms()) {
            const Element& base_case = integrate_word(k.head, k.tail);
            for (auto& [kk, cc] : base_case.terms()) {
                auto eps_prod = base_.expand(base_.mul_monomials(k.eps, kk.eps));
                for (auto& [em, ec] : eps_prod) r.add_term({em, kk.head, kk.tail}, c * cc * ec);
            }
        }
        return r;
    }

    // evaluation E = id - integrate . derive; lands in the eps factor
    Element evaluate(const Element& x) const { return x - integrate(derive(x)); }

    // initialization J = integrate . derive
    Element initialize(const Element& x) const { return integrate(derive(x)); }

    std::string to_string(const Element& x) const {
        if (x.is_zero()) return "0";
        std::string out;
        for (auto& [k, c] : x.terms()) {
            if (!out.empty()) out += " + ";
            std::string cs = ::intalg::to_string(c);
            if (!(cs == "1"))
                out += (cs.find_first_of("+-*/") != std::string::npos && cs.size() > 1 ? "(" + cs + ")" : cs) + "*";
            std::string body;
            bool unit_eps = k.eps == base_.unit_monomial();
            if (!unit_eps) body += "eps(" + base_.monomial_str(k.eps) + ")";
            std::string word = base_.monomial_str(k.head);
            for (auto& t : k.tail) word += " (*) " + base_.monomial_str(t);
            bool unit_word = k.head == base_.unit_monomial() && k.tail.empty();
            if (!unit_word) {
                if (!body.empty()) body += "*";
                body += word;
            }
            if (body.empty()) body = "1";
            out += body;
        }
        return out;
    }

  private:
    Key unit_key() const { return {base_.unit_monomial(), base_.unit_monomial(), {}}; }

    typename TensorElement<A>::Word to_word(const Key& k) const {
        typename TensorElement<A>::Word w;
        w.reserve(k.tail.size() + 1);
        w.push_back(k.head);
        w.insert(w.end(), k.tail.begin(), k.tail.end());
        return w;
    }

    Key from_word(const Monomial& eps, const typename TensorElement<A>::Word& w) const {
        Key k;
        k.eps = eps;
        k.head = w[0];
        k.tail.assign(w.begin() + 1, w.end());
        for (auto& t : k.tail)
            if (!base_.is_transcendental_basis(t))
                throw std::logic_error("IdAlgebra: tail slot left the transcendental complement");
        return k;
    }

    // integral of the pure word a (x) t_1 (x) ... (x) t_n (unit eps):
    //   n = 0:  Q(a) - eps(Q(a)) + 1 (x) T(a)
    //   n > 0:  Q(a) (x) tail - Int((Q(a) + weight*D(Q(a))) * tail)
    //           + 1 (x) T(a) (x) tail
    // The product absorbs into the first tail slot, so the recursion
    // shortens the word by one each step; the two recursive terms of the
    // length rule are folded into one by linearity. Memoized per
    // (head, tail).
    const Element& integrate_word(const Monomial& head, const Tail& tail) const {
        auto memo_key = std::make_pair(head, tail);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = memo_.find(memo_key);
            if (it != memo_.end()) return it->second;
        }
        Element r = integrate_element(base_.from_monomial(head), tail);
        std::lock_guard<std::mutex> lock(mutex_);
        auto [pos, inserted] = memo_.emplace(std::move(memo_key), std::move(r));
        return pos->second;
    }

    Element integrate_element(const typename A::Element& e, const Tail& tail) const {
        typename A::Element qa = q_of(e);
        typename A::Element dqa = d_of(qa);
        typename A::Element ta = base_.sub(e, dqa);

        Element r;
        if (tail.empty()) {
            r += embed(qa);
            r -= eps_embed(qa);
            for (auto& [m, c] : base_.expand(ta)) {
                if (!base_.is_transcendental_basis(m))
                    throw std::logic_error("IdAlgebra: T-part outside the transcendental complement");
                r.add_term({base_.unit_monomial(), base_.unit_monomial(), {m}}, c);
            }
            return r;
        }
        for (auto& [m, c] : base_.expand(qa)) r.add_term({base_.unit_monomial(), m, tail}, c);
        typename A::Element absorb = qa;
        if (base_.weight() != 0) absorb = base_.add(absorb, base_.scale(Scalar(base_.weight()), dqa));
        absorb = base_.mul(absorb, base_.from_monomial(tail[0]));
        Tail rest(tail.begin() + 1, tail.end());
        r -= integrate_element(absorb, rest);
        for (auto& [m, c] : base_.expand(ta)) {
            if (!base_.is_transcendental_basis(m))
                throw std::logic_error("IdAlgebra: T-part outside the transcendental complement");
            Tail longer;
            longer.reserve(tail.size() + 1);
            longer.push_back(m);
            longer.insert(longer.end(), tail.begin(), tail.end());
            r.add_term({base_.unit_monomial(), base_.unit_monomial(), longer}, c);
        }
        return r;
    }

    // per-monomial caches for the quasi-antiderivative and the derivation,
    // extended linearly
    typename A::Element q_of(const typename A::Element& e) const {
        return cached_linear(q_memo_, e, [&](const Monomial& m) {
            return base_.quasi_antiderivative_of(base_.from_monomial(m));
        });
    }

    typename A::Element d_of(const typename A::Element& e) const {
        return cached_linear(d_memo_, e, [&](const Monomial& m) { return base_.derive_monomial(m); });
    }

    template <typename F>
    typename A::Element cached_linear(std::map<Monomial, typename A::Element>& memo,
                                      const typename A::Element& e, F&& per_monomial) const {
        typename A::Element acc = base_.zero();
        for (auto& [m, c] : base_.expand(e)) {
            const typename A::Element* entry = nullptr;
            {
                std::lock_guard<std::mutex> lock(mutex_);
                auto it = memo.find(m);
                if (it != memo.end()) entry = &it->second;
            }
            if (!entry) {
                typename A::Element fresh = per_monomial(m);
                std::lock_guard<std::mutex> lock(mutex_);
                entry = &memo.emplace(m, std::move(fresh)).first->second;
            }
            acc = base_.add(acc, base_.scale(c, *entry));
        }
        return acc;
    }

    A base_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Monomial, Tail>, Element> memo_;
    mutable std::map<Monomial, typename A::Element> q_memo_;
    mutable std::map<Monomial, typename A::Element> d_memo_;
};

// Extension of a differential-algebra map f: A -> R to the free
// integro-differential algebra over A, where R is any integro-differential
// structure (duck-typed: Elem, add/mul/scalar via the target adapter, D,
// P). Words map to nested integrals, the eps factor to the target's
// evaluation of f; this is the unique extension compatible with the
// operators.
template <typename A, typename Target>
typename Target::Elem extend_hom(
    const IdAlgebra<A>& ida, Target& target,
    const std::function<typename Target::Elem(const typename A::Element&)>& f,
    const IDElement<A>& x) {
    using TElem = typename Target::Elem;
    const A& base = ida.base();
    TElem acc = target.zero();
    for (auto& [k, c] : x.terms()) {
        // nested integral over the tail, inside out
        TElem word = target.one();
        for (auto it = k.tail.rbegin(); it != k.tail.rend(); ++it) {
            TElem fi = f(base.from_monomial(*it));
            word = target.P(target.mul(fi, word));
        }
        word = target.mul(f(base.from_monomial(k.head)), word);
        if (!(k.eps == base.unit_monomial())) {
            TElem fb = f(base.from_monomial(k.eps));
            TElem eps_img = target.sub(fb, target.P(target.D(fb)));
            word = target.mul(eps_img, word);
        }
        acc = target.add(acc, target.scalar(c, word));
    }
    return acc;
}

// Refuses a base map that fails to commute with the derivations on the
// supplied generators, then extends.
template <typename A, typename Target>
typename Target::Elem extend_hom_checked(
    const IdAlgebra<A>& ida, Target& target,
    const std::function<typename Target::Elem(const typename A::Element&)>& f,
    const std::vector<typename A::Element>& generators, const IDElement<A>& x) {
    for (auto& g : generators) {
        auto lhs = f(ida.base().derive(g));
        auto rhs = target.D(f(g));
        if (!target.equal(lhs, rhs))
            throw std::invalid_argument("extend_hom: base map does not commute with the derivations");
    }
    return extend_hom(ida, target, f, x);
}

}  // namespace intalg
