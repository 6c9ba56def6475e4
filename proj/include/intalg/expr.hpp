#pragma once

#include "intalg/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace intalg {

// Abstract syntax for the command-line expression language. ASCII only:
// (*) is the tensor slot separator, eps(...) the frozen-copy embedding,
// D[...], P[...], Q[...], E[...] the operator applications.
enum class ExprKind {
    Number,    // rational literal (integer text; fractions arise via Div)
    ImagUnit,  // I
    VarX,
    VarY,
    Jet,    // u, u', u'', u^(k)
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,    // integer exponent
    Tensor,
    OpD,
    OpP,
    OpQ,
    OpE,
    Eps,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    Rational number;            // Number
    int index = 0;              // Jet: jet index; Pow: exponent
    std::vector<ExprPtr> args;  // operands
};

ExprPtr make_number(Rational value);
ExprPtr make_jet(int index);
ExprPtr make_unary(ExprKind kind, ExprPtr a);
ExprPtr make_binary(ExprKind kind, ExprPtr a, ExprPtr b);
ExprPtr make_pow(ExprPtr base, int exponent);

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& message, size_t pos)
        : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Parses the expression grammar. Binding, loosest to tightest:
// +,- < (*) < *,/ (also by juxtaposition) < unary - < ^.
// u^(k) directly after a bare u is the k-th jet variable.
ExprPtr parse_expr(const std::string& text);

// Canonical re-serialization of the syntax tree; parse(print(e)) has the
// same tree shape.
std::string print_expr(const ExprPtr& e);

}  // namespace intalg
