#include "intalg/structures.hpp"

#include <stdexcept>

namespace intalg {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    int n = num(rng);
    if (n == 0) n = 1;
    return Rational(n, den(rng));
}

DiffMonomial random_diff_monomial(std::mt19937_64& rng, int max_order, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> idx(0, max_order);
    int d = deg(rng);
    std::map<int, int> exps;
    for (int k = 0; k < d; ++k) exps[idx(rng)] += 1;
    return DiffMonomial(std::move(exps));
}

DiffMonomial random_functional_monomial(std::mt19937_64& rng, int max_order, int max_degree) {
    for (;;) {
        DiffMonomial m = random_diff_monomial(rng, max_order, max_degree);
        if (m.is_functional()) return m;
        // square the top variable to push it into the complement
        int k = m.order();
        std::map<int, int> exps = m.exponents();
        exps[k] += 1;
        DiffMonomial fixed(std::move(exps));
        if (fixed.total_degree() <= max_degree) return fixed;
    }
}

DiffPoly random_diff_poly(std::mt19937_64& rng, int max_order, int max_degree, int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    DiffPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        p.add_term(random_diff_monomial(rng, max_order, max_degree), random_rational(rng));
    return p;
}

ShuffleStructure::Elem ShuffleStructure::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> nterms(1, sizes_.max_terms);
    std::uniform_int_distribution<int> taillen(0, sizes_.max_tail);
    Elem e;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        typename Elem::Word w;
        int len = taillen(rng);
        for (int k = 0; k <= len; ++k)
            w.push_back(random_diff_monomial(rng, sizes_.max_order, sizes_.max_degree));
        e.add_term(w, random_rational(rng));
    }
    return e;
}

IdAlgStructure::Elem IdAlgStructure::random(std::mt19937_64& rng) const {
    // max_degree bounds the grading of each generated word: the degrees of
    // the eps part, the head and the tail slots add up to at most that
    std::uniform_int_distribution<int> nterms(1, sizes_.max_terms);
    std::uniform_int_distribution<int> taillen(0, sizes_.max_tail);
    std::uniform_int_distribution<int> eps_case(0, 2);
    Elem e;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        typename Elem::Key key;
        int budget = sizes_.max_degree;
        int len = taillen(rng);
        for (int k = 0; k < len; ++k) {
            std::uniform_int_distribution<int> part(0, budget);
            int d = part(rng);
            DiffMonomial t;
            for (int tries = 0; tries < 16; ++tries) {
                t = random_functional_monomial(rng, sizes_.max_order, d);
                if (t.total_degree() <= d) break;
                t = DiffMonomial::one();
            }
            budget -= t.total_degree();
            key.tail.push_back(t);
        }
        if (eps_case(rng) == 0) {
            std::uniform_int_distribution<int> part(0, budget);
            key.eps = random_diff_monomial(rng, sizes_.max_order, part(rng));
            budget -= key.eps.total_degree();
        } else {
            key.eps = DiffMonomial::one();
        }
        key.head = random_diff_monomial(rng, sizes_.max_order, budget);
        e.add_term(key, random_rational(rng));
    }
    return e;
}

HurwitzStructure::Elem HurwitzStructure::random(std::mt19937_64& rng) const {
    std::vector<Rational> v(static_cast<size_t>(precision_));
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    for (auto& c : v) c = Rational(num(rng), den(rng));
    return HurwitzSeries(std::move(v), lambda_);
}

CounterexampleStructure::Elem CounterexampleStructure::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> xdeg(0, 3);
    std::uniform_int_distribution<int> ydeg(0, 3);
    Elem e;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) e.add_term(xdeg(rng), ydeg(rng), random_rational(rng));
    return e;
}

CounterexampleStructure counterexample_fixture() { return CounterexampleStructure(); }

namespace {

template <typename S>
CheckReport dispatch_axiom(const S& s, const std::string& axiom, int samples, std::uint64_t seed) {
    if (axiom == "derivation") return check_derivation(s, samples, seed);
    if (axiom == "rota_baxter") return check_rota_baxter(s, samples, seed);
    if (axiom == "section") return check_section(s, samples, seed);
    if (axiom == "hybrid") return check_hybrid(s, samples, seed);
    if (axiom.size() == 6 && axiom.rfind("char_", 0) == 0)
        return check_characterization(s, axiom[5], samples, seed);
    if (axiom == "rba_IJ" || axiom == "rba_J" || axiom == "proj_lemma" || axiom == "subalg_lemma")
        return check_lemma_identity(s, axiom, samples, seed);
    throw std::invalid_argument("unknown axiom id '" + axiom + "'");
}

}  // namespace

CheckReport run_axiom_check(const std::string& structure, const std::string& axiom, int samples,
                            std::uint64_t seed, const Rational& weight, int precision) {
    if (structure == "idalg") return dispatch_axiom(IdAlgStructure(weight), axiom, samples, seed);
    if (structure == "shuffle") return dispatch_axiom(ShuffleStructure(weight), axiom, samples, seed);
    if (structure == "hurwitz")
        return dispatch_axiom(HurwitzStructure(weight, precision), axiom, samples, seed);
    if (structure == "counterexample") {
        if (weight != 0)
            throw std::invalid_argument("the counterexample fixture has weight 0");
        return dispatch_axiom(counterexample_fixture(), axiom, samples, seed);
    }
    if (structure == "diffpoly") return dispatch_axiom(DiffPolyStructure(weight), axiom, samples, seed);
    throw std::invalid_argument("unknown structure '" + structure + "'");
}

}  // namespace intalg
