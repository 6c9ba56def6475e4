#include "intalg/eval.hpp"

#include "intalg/diffpoly.hpp"

namespace intalg {

namespace {

[[noreturn]] void unsupported(const char* what, const char* structure) {
    throw EvalError(std::string(what) + " is not available in the " + structure + " structure");
}

DiffPoly pow_diffpoly(const DiffPoly& base, int k) {
    if (k < 0) throw EvalError("negative powers are not available for differential polynomials");
    DiffPoly acc(1);
    for (int i = 0; i < k; ++i) acc *= base;
    return acc;
}

}  // namespace

DiffPoly eval_diffpoly(const ExprPtr& e, const Rational& lambda) {
    switch (e->kind) {
        case ExprKind::Number: return DiffPoly(e->number);
        case ExprKind::ImagUnit: unsupported("I", "diffpoly");
        case ExprKind::VarX: unsupported("x", "diffpoly");
        case ExprKind::VarY: unsupported("y", "diffpoly");
        case ExprKind::Jet: return DiffPoly::jet(e->index);
        case ExprKind::Neg: return -eval_diffpoly(e->args[0], lambda);
        case ExprKind::Add: return eval_diffpoly(e->args[0], lambda) + eval_diffpoly(e->args[1], lambda);
        case ExprKind::Sub: return eval_diffpoly(e->args[0], lambda) - eval_diffpoly(e->args[1], lambda);
        case ExprKind::Mul: return eval_diffpoly(e->args[0], lambda) * eval_diffpoly(e->args[1], lambda);
        case ExprKind::Div: {
            DiffPoly num = eval_diffpoly(e->args[0], lambda);
            DiffPoly den = eval_diffpoly(e->args[1], lambda);
            if (!den.is_constant() || den.is_zero())
                throw EvalError("division in diffpoly requires a nonzero constant divisor");
            return num.scaled(Rational(1) / den.constant_term());
        }
        case ExprKind::Pow: return pow_diffpoly(eval_diffpoly(e->args[0], lambda), e->index);
        case ExprKind::Tensor: unsupported("(*)", "diffpoly");
        case ExprKind::OpD: return d_poly(eval_diffpoly(e->args[0], lambda), lambda);
        case ExprKind::OpP: throw EvalError("P[...] is not available in diffpoly; use Q[...]");
        case ExprKind::OpQ: return quasi_antiderivative(eval_diffpoly(e->args[0], lambda), lambda);
        case ExprKind::OpE: {
            DiffPoly p = eval_diffpoly(e->args[0], lambda);
            return p - quasi_antiderivative(d_poly(p, lambda), lambda);
        }
        case ExprKind::Eps: unsupported("eps(...)", "diffpoly");
    }
    throw EvalError("unreachable expression kind");
}

namespace {

// Denominators must arrive factored: a product of constants and powers of
// linear polynomials. Collects scale * prod (x - alpha_i)^{n_i}.
struct FactoredDen {
    GaussianRational scale{1};
    std::vector<std::pair<GaussianRational, int>> factors;
};

void collect_den_factors(const ExprPtr& e, const Rational& lambda, int power, FactoredDen& out) {
    if (power < 0) throw EvalError("negative powers are not allowed in denominators");
    switch (e->kind) {
        case ExprKind::Mul:
            collect_den_factors(e->args[0], lambda, power, out);
            collect_den_factors(e->args[1], lambda, power, out);
            return;
        case ExprKind::Pow:
            collect_den_factors(e->args[0], lambda, power * e->index, out);
            return;
        case ExprKind::Neg: {
            collect_den_factors(e->args[0], lambda, power, out);
            out.scale = out.scale * pow_gaussian(GaussianRational(-1), static_cast<unsigned>(power));
            return;
        }
        default: {
            RatFunc leaf = eval_ratfunc(e, lambda);
            if (!leaf.fracs().empty())
                throw EvalError("denominator factors must be polynomials");
            const GPoly& p = leaf.poly();
            if (p.is_zero()) throw EvalError("division by zero");
            if (p.degree() == 0) {
                out.scale = out.scale * pow_gaussian(p.coeff(0), static_cast<unsigned>(power));
                return;
            }
            if (p.degree() != 1)
                throw EvalError("denominators must be given as products of linear factors (x - a)^n");
            GaussianRational lead = p.coeff(1);
            GaussianRational root = -p.coeff(0) / lead;
            out.scale = out.scale * pow_gaussian(lead, static_cast<unsigned>(power));
            for (auto& [alpha, m] : out.factors) {
                if (alpha == root) {
                    m += power;
                    return;
                }
            }
            if (power > 0) out.factors.emplace_back(root, power);
            return;
        }
    }
}

}  // namespace

RatFunc eval_ratfunc(const ExprPtr& e, const Rational& lambda) {
    switch (e->kind) {
        case ExprKind::Number: return RatFunc(GaussianRational(e->number));
        case ExprKind::ImagUnit: return RatFunc(GaussianRational::i());
        case ExprKind::VarX: return RatFunc::x();
        case ExprKind::VarY: unsupported("y", "ratfunc");
        case ExprKind::Jet: unsupported("u", "ratfunc");
        case ExprKind::Neg: return -eval_ratfunc(e->args[0], lambda);
        case ExprKind::Add: return eval_ratfunc(e->args[0], lambda) + eval_ratfunc(e->args[1], lambda);
        case ExprKind::Sub: return eval_ratfunc(e->args[0], lambda) - eval_ratfunc(e->args[1], lambda);
        case ExprKind::Mul: return eval_ratfunc(e->args[0], lambda) * eval_ratfunc(e->args[1], lambda);
        case ExprKind::Div: {
            RatFunc num = eval_ratfunc(e->args[0], lambda);
            FactoredDen den;
            collect_den_factors(e->args[1], lambda, 1, den);
            return divide_factored(num, den.scale, den.factors);
        }
        case ExprKind::Pow: {
            if (e->index < 0) throw EvalError("negative powers: write an explicit fraction 1/(...)^n");
            RatFunc base = eval_ratfunc(e->args[0], lambda);
            RatFunc acc(1);
            for (int i = 0; i < e->index; ++i) acc *= base;
            return acc;
        }
        case ExprKind::Tensor: unsupported("(*)", "ratfunc");
        case ExprKind::OpD: {
            RatFunc f = eval_ratfunc(e->args[0], lambda);
            return lambda == 0 ? d_dx(f) : d_lambda(f, lambda);
        }
        case ExprKind::OpP: throw EvalError("P[...] is not available in ratfunc; use Q[...]");
        case ExprKind::OpQ: {
            RatFunc f = eval_ratfunc(e->args[0], lambda);
            return (lambda == 0 ? quasi_antiderivative_0(f) : quasi_antiderivative_lambda(f, lambda)).q;
        }
        case ExprKind::OpE: {
            RatFunc f = eval_ratfunc(e->args[0], lambda);
            RatFunc df = lambda == 0 ? d_dx(f) : d_lambda(f, lambda);
            RatFunc qdf = (lambda == 0 ? quasi_antiderivative_0(df) : quasi_antiderivative_lambda(df, lambda)).q;
            return f - qdf;
        }
        case ExprKind::Eps: unsupported("eps(...)", "ratfunc");
    }
    throw EvalError("unreachable expression kind");
}

TensorElement<DiffPolyAlgebra> eval_shuffle(const ExprPtr& e, const DiffPolyAlgebra& alg) {
    using TE = TensorElement<DiffPolyAlgebra>;
    switch (e->kind) {
        case ExprKind::Number: return TE::unit(alg).scaled(e->number);
        case ExprKind::Neg: return -eval_shuffle(e->args[0], alg);
        case ExprKind::Add: return eval_shuffle(e->args[0], alg) + eval_shuffle(e->args[1], alg);
        case ExprKind::Sub: return eval_shuffle(e->args[0], alg) - eval_shuffle(e->args[1], alg);
        case ExprKind::Mul:
            return mixable_shuffle(alg, eval_shuffle(e->args[0], alg), eval_shuffle(e->args[1], alg));
        case ExprKind::Div: {
            DiffPoly den = eval_diffpoly(e->args[1], alg.weight());
            if (!den.is_constant() || den.is_zero())
                throw EvalError("division in shuffle requires a nonzero constant divisor");
            return eval_shuffle(e->args[0], alg).scaled(Rational(1) / den.constant_term());
        }
        case ExprKind::Pow: {
            if (e->index < 0) throw EvalError("negative powers are not available in shuffle");
            TE acc = TE::unit(alg);
            TE base = eval_shuffle(e->args[0], alg);
            for (int i = 0; i < e->index; ++i) acc = mixable_shuffle(alg, acc, base);
            return acc;
        }
        case ExprKind::Tensor: {
            TE left = eval_shuffle(e->args[0], alg);
            DiffPoly slot = eval_diffpoly(e->args[1], alg.weight());
            TE out;
            for (auto& [w, c] : left.terms()) {
                for (auto& [m, cm] : slot.terms()) {
                    auto longer = w;
                    longer.push_back(m);
                    out.add_term(longer, c * cm);
                }
            }
            return out;
        }
        case ExprKind::OpD: return d_shuffle(alg, eval_shuffle(e->args[0], alg));
        case ExprKind::OpP: return p_shuffle(alg, eval_shuffle(e->args[0], alg));
        case ExprKind::OpQ: unsupported("Q[...]", "shuffle");
        case ExprKind::OpE: unsupported("E[...]", "shuffle");
        case ExprKind::Eps: unsupported("eps(...)", "shuffle");
        default: {
            // bare jets and other base-algebra atoms are length-one words
            DiffPoly p = eval_diffpoly(e, alg.weight());
            TE out;
            for (auto& [m, c] : p.terms()) out.add_term({m}, c);
            return out;
        }
    }
}

IDElement<DiffPolyAlgebra> eval_idalg(const ExprPtr& e, const IdAlgebra<DiffPolyAlgebra>& ida) {
    using Elem = IDElement<DiffPolyAlgebra>;
    const DiffPolyAlgebra& base = ida.base();
    switch (e->kind) {
        case ExprKind::Number: return ida.one().scaled(e->number);
        case ExprKind::ImagUnit: unsupported("I", "idalg");
        case ExprKind::VarX: unsupported("x", "idalg");
        case ExprKind::VarY: unsupported("y", "idalg");
        case ExprKind::Jet: return ida.embed(DiffPoly::jet(e->index));
        case ExprKind::Neg: return -eval_idalg(e->args[0], ida);
        case ExprKind::Add: return eval_idalg(e->args[0], ida) + eval_idalg(e->args[1], ida);
        case ExprKind::Sub: return eval_idalg(e->args[0], ida) - eval_idalg(e->args[1], ida);
        case ExprKind::Mul: return ida.mul(eval_idalg(e->args[0], ida), eval_idalg(e->args[1], ida));
        case ExprKind::Div: {
            DiffPoly den = eval_diffpoly(e->args[1], ida.weight());
            if (!den.is_constant() || den.is_zero())
                throw EvalError("division in idalg requires a nonzero constant divisor");
            return eval_idalg(e->args[0], ida).scaled(Rational(1) / den.constant_term());
        }
        case ExprKind::Pow: {
            if (e->index < 0) throw EvalError("negative powers are not available in idalg");
            Elem acc = ida.one();
            Elem base_el = eval_idalg(e->args[0], ida);
            for (int i = 0; i < e->index; ++i) acc = ida.mul(acc, base_el);
            return acc;
        }
        case ExprKind::Tensor: {
            Elem left = eval_idalg(e->args[0], ida);
            DiffPoly slot = eval_diffpoly(e->args[1], ida.weight());
            Elem out;
            for (auto& [k, c] : left.terms()) {
                for (auto& [m, cm] : slot.terms()) {
                    if (!base.is_transcendental_basis(m))
                        throw EvalError("tail slot '" + to_string(m) + "' is not a functional monomial");
                    auto key = k;
                    key.tail.push_back(m);
                    out.add_term(key, c * cm);
                }
            }
            return out;
        }
        case ExprKind::OpD: return ida.derive(eval_idalg(e->args[0], ida));
        case ExprKind::OpP: return ida.integrate(eval_idalg(e->args[0], ida));
        case ExprKind::OpQ: throw EvalError("Q[...] is not available in idalg; use P[...]");
        case ExprKind::OpE: return ida.evaluate(eval_idalg(e->args[0], ida));
        case ExprKind::Eps: return ida.eps_embed(eval_diffpoly(e->args[0], ida.weight()));
    }
    throw EvalError("unreachable expression kind");
}

XYPoly eval_counterexample(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::Number: return XYPoly(e->number);
        case ExprKind::ImagUnit: unsupported("I", "counterexample");
        case ExprKind::VarX: return XYPoly::x();
        case ExprKind::VarY: return XYPoly::y();
        case ExprKind::Jet: unsupported("u", "counterexample");
        case ExprKind::Neg: return -eval_counterexample(e->args[0]);
        case ExprKind::Add: return eval_counterexample(e->args[0]) + eval_counterexample(e->args[1]);
        case ExprKind::Sub: return eval_counterexample(e->args[0]) - eval_counterexample(e->args[1]);
        case ExprKind::Mul: return eval_counterexample(e->args[0]) * eval_counterexample(e->args[1]);
        case ExprKind::Div: {
            XYPoly den = eval_counterexample(e->args[1]);
            if (den.terms().size() != 1 || den.terms().begin()->first != std::make_pair(0, 0))
                throw EvalError("division in counterexample requires a nonzero constant divisor");
            return eval_counterexample(e->args[0]).scaled(Rational(1) / den.terms().begin()->second);
        }
        case ExprKind::Pow: {
            if (e->index < 0) throw EvalError("negative powers are not available in counterexample");
            XYPoly acc(1);
            XYPoly base = eval_counterexample(e->args[0]);
            for (int i = 0; i < e->index; ++i) acc = acc * base;
            return acc;
        }
        case ExprKind::Tensor: unsupported("(*)", "counterexample");
        case ExprKind::OpD: return eval_counterexample(e->args[0]).d_dx();
        case ExprKind::OpP: return eval_counterexample(e->args[0]).p_op();
        case ExprKind::OpQ: unsupported("Q[...]", "counterexample");
        case ExprKind::OpE: {
            XYPoly p = eval_counterexample(e->args[0]);
            return p - p.d_dx().p_op();
        }
        case ExprKind::Eps: unsupported("eps(...)", "counterexample");
    }
    throw EvalError("unreachable expression kind");
}

nlohmann::json json_of(const Rational& r) { return r.str(); }

nlohmann::json json_of(const GaussianRational& z) { return to_string(z); }

nlohmann::json json_of(const DiffMonomial& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [i, e] : m.exponents()) arr.push_back({i, e});
    return arr;
}

nlohmann::json json_of(const DiffPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [m, c] : p.terms()) arr.push_back({{"coeff", json_of(c)}, {"monomial", json_of(m)}});
    return arr;
}

nlohmann::json json_of(const RatFunc& f) {
    nlohmann::json poly = nlohmann::json::array();
    for (int k = 0; k <= f.poly().degree(); ++k) poly.push_back(json_of(f.poly().coeff(k)));
    nlohmann::json fracs = nlohmann::json::array();
    for (auto& [key, g] : f.fracs())
        fracs.push_back({{"pole", json_of(key.alpha)}, {"mult", key.mult}, {"coeff", json_of(g)}});
    return {{"poly", poly}, {"fracs", fracs}};
}

nlohmann::json json_of(const TensorElement<DiffPolyAlgebra>& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [w, c] : t.terms()) {
        nlohmann::json word = nlohmann::json::array();
        for (auto& m : w) word.push_back(json_of(m));
        arr.push_back({{"coeff", json_of(c)}, {"word", word}});
    }
    return arr;
}

nlohmann::json json_of(const IDElement<DiffPolyAlgebra>& x) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [k, c] : x.terms()) {
        nlohmann::json tail = nlohmann::json::array();
        for (auto& m : k.tail) tail.push_back(json_of(m));
        arr.push_back({{"coeff", json_of(c)},
                       {"eps", json_of(k.eps)},
                       {"head", json_of(k.head)},
                       {"tail", tail}});
    }
    return arr;
}

nlohmann::json json_of(const HurwitzSeries& h) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int n = 0; n < h.precision(); ++n) coeffs.push_back(json_of(h.at(n)));
    return {{"lambda", json_of(h.lambda())}, {"prec", h.precision()}, {"coeffs", coeffs}};
}

nlohmann::json json_of(const XYPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [k, c] : p.terms())
        arr.push_back({{"coeff", json_of(c)}, {"xdeg", k.first}, {"ydeg", k.second}});
    return arr;
}

}  // namespace intalg
