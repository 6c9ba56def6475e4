#include "intalg/eval.hpp"
#include "intalg/structures.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace intalg;
using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string weight = "0";
    bool emit_json = false;
    std::uint64_t seed = 12345;
    int prec = 12;
};

Rational weight_of(const GlobalOpts& g) { return parse_rational(g.weight); }

void print_result(const GlobalOpts& g, const std::string& text, const json& machine) {
    if (g.emit_json) {
        json out = {{"result", machine}, {"text", text}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
}

// evaluate an expression in the named structure and print it
int eval_and_print(const GlobalOpts& g, const std::string& structure, const std::string& text) {
    ExprPtr ast = parse_expr(text);
    Rational lambda = weight_of(g);
    if (structure == "diffpoly") {
        DiffPoly p = eval_diffpoly(ast, lambda);
        print_result(g, to_string(p), json_of(p));
    } else if (structure == "ratfunc") {
        RatFunc f = eval_ratfunc(ast, lambda);
        print_result(g, to_string(f), json_of(f));
    } else if (structure == "shuffle") {
        DiffPolyAlgebra alg(lambda);
        auto t = eval_shuffle(ast, alg);
        print_result(g, tensor_to_string(alg, t), json_of(t));
    } else if (structure == "idalg") {
        IdAlgebra<DiffPolyAlgebra> ida{DiffPolyAlgebra(lambda)};
        auto x = eval_idalg(ast, ida);
        print_result(g, ida.to_string(x), json_of(x));
    } else if (structure == "counterexample") {
        XYPoly p = eval_counterexample(ast);
        print_result(g, to_string(p), json_of(p));
    } else {
        throw EvalError("unknown structure '" + structure + "'");
    }
    return 0;
}

std::vector<Rational> coeffs_from_json(const std::string& text) {
    json arr = json::parse(text);
    if (!arr.is_array() || arr.empty())
        throw EvalError("expected a nonempty JSON array of rationals");
    std::vector<Rational> out;
    for (auto& v : arr) {
        if (v.is_number_integer())
            out.emplace_back(v.get<long long>());
        else
            out.push_back(parse_rational(v.get<std::string>()));
    }
    return out;
}

json report_to_json(const CheckReport& rep) {
    json fails = json::array();
    for (auto& f : rep.failures) fails.push_back({{"sample", f.sample}, {"detail", f.detail}});
    return {{"axiom", rep.axiom},
            {"samples", rep.samples},
            {"seed", rep.seed},
            {"pass", rep.pass()},
            {"failures", fails}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weighted differential / Rota-Baxter / integro-differential algebra calculator"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--weight", g.weight, "weight of the derivation, a rational (default 0)");
    app.add_flag("--json", g.emit_json, "emit machine-readable JSON");
    app.add_option("--seed", g.seed, "seed for sampled checks");
    app.add_option("--prec", g.prec, "Hurwitz series precision (default 12)");

    std::string structure = "diffpoly";
    std::string expr_text;

    auto* cmd_parse = app.add_subcommand("parse", "parse an expression and echo its canonical form");
    cmd_parse->add_option("--structure", structure, "diffpoly|ratfunc|shuffle|idalg|counterexample");
    cmd_parse->add_option("expr", expr_text, "expression")->required();

    auto* cmd_eval = app.add_subcommand("eval", "evaluate an expression to its normal form");
    cmd_eval->add_option("--structure", structure, "diffpoly|ratfunc|shuffle|idalg|counterexample");
    cmd_eval->add_option("expr", expr_text, "expression")->required();

    auto* cmd_deriv = app.add_subcommand("deriv", "apply the weighted derivation");
    cmd_deriv->add_option("--structure", structure, "diffpoly|ratfunc|shuffle|idalg|counterexample");
    cmd_deriv->add_option("expr", expr_text, "expression")->required();

    auto* cmd_quasiint = app.add_subcommand("quasiint", "quasi-antiderivative decomposition f = D(q) + t");
    cmd_quasiint->add_option("--structure", structure, "diffpoly|ratfunc");
    cmd_quasiint->add_option("expr", expr_text, "expression")->required();

    auto* cmd_integrate = app.add_subcommand("integrate", "apply the integral operator");
    cmd_integrate->add_option("--structure", structure, "idalg|shuffle|counterexample");
    cmd_integrate->add_option("expr", expr_text, "expression")->required();

    std::string expr_text2;
    auto* cmd_shuffle = app.add_subcommand("shuffle", "mixable-shuffle product of two tensor expressions");
    cmd_shuffle->add_option("lhs", expr_text, "left factor")->required();
    cmd_shuffle->add_option("rhs", expr_text2, "right factor")->required();

    std::string pf_num, pf_factors;
    auto* cmd_pf = app.add_subcommand("pf", "partial fractions of num / [(x-a)^n, ...]");
    cmd_pf->add_option("num", pf_num, "numerator polynomial in x")->required();
    cmd_pf->add_option("den", pf_factors, "factored denominator, e.g. \"[(x-1)^2, (x-I)]\"")->required();

    std::string hmode, hcoeffs, hcoeffs2, hexpr;
    auto* cmd_hurwitz = app.add_subcommand("hurwitz", "Hurwitz series: prod|D|P|hom");
    cmd_hurwitz->add_option("mode", hmode, "prod|D|P|hom")->required();
    cmd_hurwitz->add_option("coeffs", hcoeffs, "JSON array of rationals")->required();
    cmd_hurwitz->add_option("arg", hcoeffs2, "second array (prod) or diffpoly expression (hom)");

    std::string ax_structure = "idalg", ax_axiom = "section";
    int ax_samples = 50;
    auto* cmd_axioms = app.add_subcommand("axioms", "sampled identity checks");
    auto* cmd_check = cmd_axioms->add_subcommand("check", "run one identity check");
    cmd_check->add_option("--structure", ax_structure, "idalg|shuffle|hurwitz|counterexample|diffpoly");
    cmd_check->add_option("--axiom", ax_axiom,
                          "derivation|rota_baxter|section|hybrid|char_b..char_h|rba_IJ|rba_J|proj_lemma|subalg_lemma");
    cmd_check->add_option("--samples", ax_samples, "sample count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_parse->parsed()) {
            ExprPtr ast = parse_expr(expr_text);
            // context check: the expression must evaluate in the chosen structure
            (void)eval_and_print(g, structure, expr_text);
            if (!g.emit_json) std::cout << "ast: " << print_expr(ast) << "\n";
            return 0;
        }
        if (cmd_eval->parsed()) return eval_and_print(g, structure, expr_text);
        if (cmd_deriv->parsed()) return eval_and_print(g, structure, "D[" + expr_text + "]");
        if (cmd_quasiint->parsed()) {
            Rational lambda = weight_of(g);
            if (structure == "diffpoly") {
                auto dec = decompose_range(eval_diffpoly(parse_expr(expr_text), lambda), lambda);
                print_result(g, "q: " + to_string(dec.q) + "\nt: " + to_string(dec.t),
                             json{{"q", json_of(dec.q)}, {"t", json_of(dec.t)}});
            } else if (structure == "ratfunc") {
                RatFunc f = eval_ratfunc(parse_expr(expr_text), lambda);
                auto dec = lambda == 0 ? quasi_antiderivative_0(f) : quasi_antiderivative_lambda(f, lambda);
                print_result(g, "q: " + to_string(dec.q) + "\nt: " + to_string(dec.t),
                             json{{"q", json_of(dec.q)}, {"t", json_of(dec.t)}});
            } else {
                throw EvalError("quasiint expects --structure diffpoly or ratfunc");
            }
            return 0;
        }
        if (cmd_integrate->parsed()) {
            if (structure != "idalg" && structure != "shuffle" && structure != "counterexample")
                throw EvalError("integrate expects --structure idalg, shuffle or counterexample");
            return eval_and_print(g, structure, "P[" + expr_text + "]");
        }
        if (cmd_shuffle->parsed()) {
            DiffPolyAlgebra alg(weight_of(g));
            auto a = eval_shuffle(parse_expr(expr_text), alg);
            auto b = eval_shuffle(parse_expr(expr_text2), alg);
            auto prod = mixable_shuffle(alg, a, b);
            print_result(g, tensor_to_string(alg, prod), json_of(prod));
            return 0;
        }
        if (cmd_pf->parsed()) {
            Rational lambda = weight_of(g);
            RatFunc num = eval_ratfunc(parse_expr(pf_num), lambda);
            if (!num.fracs().empty()) throw EvalError("pf numerator must be a polynomial");
            std::string factors = pf_factors;
            for (char& c : factors)
                if (c == '[' || c == ']' || c == ',') c = ' ';
            // the factor list becomes a product once the brackets go
            std::string product;
            {
                std::istringstream iss(factors);
                std::string piece;
                while (iss >> piece) product += "(" + piece + ")";
            }
            if (product.empty()) throw EvalError("pf: empty factor list");
            RatFunc result = eval_ratfunc(parse_expr("(" + pf_num + ") / (" + product + ")"), lambda);
            print_result(g, to_string(result), json_of(result));
            return 0;
        }
        if (cmd_hurwitz->parsed()) {
            Rational lambda = weight_of(g);
            if (hmode == "prod") {
                if (hcoeffs2.empty()) throw EvalError("hurwitz prod needs two coefficient arrays");
                HurwitzSeries f(coeffs_from_json(hcoeffs), lambda);
                HurwitzSeries h2(coeffs_from_json(hcoeffs2), lambda);
                auto p = hproduct(f, h2);
                print_result(g, to_string(p), json_of(p));
            } else if (hmode == "D") {
                HurwitzSeries f(coeffs_from_json(hcoeffs), lambda);
                auto d = hD(f);
                print_result(g, to_string(d), json_of(d));
            } else if (hmode == "P") {
                HurwitzSeries f(coeffs_from_json(hcoeffs), lambda);
                auto p = hP(f);
                print_result(g, to_string(p), json_of(p));
            } else if (hmode == "hom") {
                if (hcoeffs2.empty()) throw EvalError("hurwitz hom needs the image of u and an expression");
                HurwitzSeries image(coeffs_from_json(hcoeffs), lambda);
                DiffPoly p = eval_diffpoly(parse_expr(hcoeffs2), lambda);
                auto h = hom_from_u(image, p);
                print_result(g, to_string(h), json_of(h));
            } else {
                throw EvalError("hurwitz mode must be prod, D, P or hom");
            }
            return 0;
        }
        if (cmd_check->parsed()) {
            CheckReport rep = run_axiom_check(ax_structure, ax_axiom, ax_samples, g.seed, weight_of(g), g.prec);
            if (g.emit_json) {
                std::cout << report_to_json(rep).dump() << "\n";
            } else {
                std::cout << rep.axiom << " on " << ax_structure << ": "
                          << (rep.pass() ? "pass" : "FAIL") << " (" << rep.samples << " samples, seed "
                          << rep.seed << ")\n";
                for (auto& f : rep.failures)
                    std::cout << "  sample " << f.sample << ": " << f.detail << "\n";
            }
            return rep.pass() ? 0 : 1;
        }
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const std::exception& ex) {
        if (g.emit_json) {
            std::cout << json{{"error", ex.what()}}.dump() << "\n";
        } else {
            std::cerr << "error: " << ex.what() << "\n";
        }
        return 2;
    }
}
