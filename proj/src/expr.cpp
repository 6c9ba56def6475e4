#include "intalg/expr.hpp"

#include <cctype>
#include <optional>

namespace intalg {

ExprPtr make_number(Rational value) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Number;
    e->number = std::move(value);
    return e;
}

ExprPtr make_jet(int index) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Jet;
    e->index = index;
    return e;
}

ExprPtr make_unary(ExprKind kind, ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = {std::move(a)};
    return e;
}

ExprPtr make_binary(ExprKind kind, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = {std::move(a), std::move(b)};
    return e;
}

ExprPtr make_pow(ExprPtr base, int exponent) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Pow;
    e->index = exponent;
    e->args = {std::move(base)};
    return e;
}

namespace {

enum class Tok {
    Number,
    U,      // with value = prime count
    X,
    Y,
    Imag,
    OpName,  // D, P, Q, E
    Eps,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Tensor,
    LParen,
    RParen,
    LBracket,
    RBracket,
    End,
};

struct Token {
    Tok kind;
    size_t pos;
    std::string text;  // number digits or operator letter
    int value = 0;     // prime count for U
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Number, start, s.substr(i, j - i), 0});
            i = j;
            continue;
        }
        if (c == '(') {
            if (i + 2 < s.size() && s[i + 1] == '*' && s[i + 2] == ')') {
                out.push_back({Tok::Tensor, start, "(*)", 0});
                i += 3;
                continue;
            }
            out.push_back({Tok::LParen, start, "(", 0});
            ++i;
            continue;
        }
        switch (c) {
            case ')': out.push_back({Tok::RParen, start, ")", 0}); ++i; continue;
            case '[': out.push_back({Tok::LBracket, start, "[", 0}); ++i; continue;
            case ']': out.push_back({Tok::RBracket, start, "]", 0}); ++i; continue;
            case '+': out.push_back({Tok::Plus, start, "+", 0}); ++i; continue;
            case '-': out.push_back({Tok::Minus, start, "-", 0}); ++i; continue;
            case '*': out.push_back({Tok::Star, start, "*", 0}); ++i; continue;
            case '/': out.push_back({Tok::Slash, start, "/", 0}); ++i; continue;
            case '^': out.push_back({Tok::Caret, start, "^", 0}); ++i; continue;
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
            std::string word = s.substr(i, j - i);
            i = j;
            if (word == "u") {
                int primes = 0;
                while (i < s.size() && s[i] == '\'') {
                    ++primes;
                    ++i;
                }
                out.push_back({Tok::U, start, "u", primes});
            } else if (word == "x") {
                out.push_back({Tok::X, start, "x", 0});
            } else if (word == "y") {
                out.push_back({Tok::Y, start, "y", 0});
            } else if (word == "I") {
                out.push_back({Tok::Imag, start, "I", 0});
            } else if (word == "eps") {
                out.push_back({Tok::Eps, start, "eps", 0});
            } else if (word == "D" || word == "P" || word == "Q" || word == "E") {
                out.push_back({Tok::OpName, start, word, 0});
            } else {
                throw ParseError("unknown symbol '" + word + "'", start);
            }
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({Tok::End, s.size(), "", 0});
    return out;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    ExprPtr parse() {
        ExprPtr e = parse_add();
        expect(Tok::End, "end of input");
        return e;
    }

  private:
    const Token& peek(size_t ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    void expect(Tok kind, const char* what) {
        if (peek().kind != kind) throw ParseError(std::string("expected ") + what, peek().pos);
        take();
    }

    ExprPtr parse_add() {
        ExprPtr e = parse_tensor();
        for (;;) {
            if (peek().kind == Tok::Plus) {
                take();
                e = make_binary(ExprKind::Add, e, parse_tensor());
            } else if (peek().kind == Tok::Minus) {
                take();
                e = make_binary(ExprKind::Sub, e, parse_tensor());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_tensor() {
        ExprPtr e = parse_mul();
        while (peek().kind == Tok::Tensor) {
            take();
            e = make_binary(ExprKind::Tensor, e, parse_mul());
        }
        return e;
    }

    bool starts_atom(const Token& t) const {
        switch (t.kind) {
            case Tok::Number:
            case Tok::U:
            case Tok::X:
            case Tok::Y:
            case Tok::Imag:
            case Tok::OpName:
            case Tok::Eps:
            case Tok::LParen:
                return true;
            default:
                return false;
        }
    }

    ExprPtr parse_mul() {
        ExprPtr e = parse_unary();
        for (;;) {
            if (peek().kind == Tok::Star) {
                take();
                e = make_binary(ExprKind::Mul, e, parse_unary());
            } else if (peek().kind == Tok::Slash) {
                take();
                e = make_binary(ExprKind::Div, e, parse_unary());
            } else if (starts_atom(peek())) {
                // juxtaposition
                e = make_binary(ExprKind::Mul, e, parse_unary());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_unary() {
        if (peek().kind == Tok::Minus) {
            take();
            return make_unary(ExprKind::Neg, parse_unary());
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_atom();
        while (peek().kind == Tok::Caret) {
            take();
            e = make_pow(e, parse_exponent());
        }
        return e;
    }

    int parse_exponent() {
        bool parens = false;
        if (peek().kind == Tok::LParen) {
            parens = true;
            take();
        }
        bool negative = false;
        if (parens && peek().kind == Tok::Minus) {
            negative = true;
            take();
        }
        if (peek().kind != Tok::Number) throw ParseError("expected integer exponent", peek().pos);
        Token t = take();
        if (parens) expect(Tok::RParen, "')'");
        long v = std::stol(t.text);
        return static_cast<int>(negative ? -v : v);
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: {
                Token tok = take();
                return make_number(Rational(tok.text));
            }
            case Tok::Imag: {
                take();
                auto e = std::make_shared<Expr>();
                e->kind = ExprKind::ImagUnit;
                return e;
            }
            case Tok::X: {
                take();
                auto e = std::make_shared<Expr>();
                e->kind = ExprKind::VarX;
                return e;
            }
            case Tok::Y: {
                take();
                auto e = std::make_shared<Expr>();
                e->kind = ExprKind::VarY;
                return e;
            }
            case Tok::U: {
                Token tok = take();
                int jet = tok.value;
                // u^(k) with a bare u spells the k-th jet variable
                if (jet == 0 && peek().kind == Tok::Caret && peek(1).kind == Tok::LParen &&
                    peek(2).kind == Tok::Number && peek(3).kind == Tok::RParen) {
                    take();
                    take();
                    Token k = take();
                    take();
                    jet = static_cast<int>(std::stol(k.text));
                }
                return make_jet(jet);
            }
            case Tok::OpName: {
                Token op = take();
                expect(Tok::LBracket, "'['");
                ExprPtr inner = parse_add();
                expect(Tok::RBracket, "']'");
                ExprKind kind = op.text == "D"   ? ExprKind::OpD
                                : op.text == "P" ? ExprKind::OpP
                                : op.text == "Q" ? ExprKind::OpQ
                                                 : ExprKind::OpE;
                return make_unary(kind, inner);
            }
            case Tok::Eps: {
                take();
                expect(Tok::LParen, "'('");
                ExprPtr inner = parse_add();
                expect(Tok::RParen, "')'");
                return make_unary(ExprKind::Eps, inner);
            }
            case Tok::LParen: {
                take();
                ExprPtr inner = parse_add();
                expect(Tok::RParen, "')'");
                return inner;
            }
            default:
                throw ParseError("expected an expression", t.pos);
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

int precedence(ExprKind k) {
    switch (k) {
        case ExprKind::Add:
        case ExprKind::Sub: return 1;
        case ExprKind::Tensor: return 2;
        case ExprKind::Mul:
        case ExprKind::Div: return 3;
        case ExprKind::Neg: return 4;
        case ExprKind::Pow: return 5;
        default: return 6;
    }
}

std::string print_at(const ExprPtr& e, int parent_prec) {
    int prec = precedence(e->kind);
    std::string body;
    switch (e->kind) {
        case ExprKind::Number: body = e->number.str(); break;
        case ExprKind::ImagUnit: body = "I"; break;
        case ExprKind::VarX: body = "x"; break;
        case ExprKind::VarY: body = "y"; break;
        case ExprKind::Jet:
            if (e->index == 0) body = "u";
            else if (e->index == 1) body = "u'";
            else if (e->index == 2) body = "u''";
            else body = "u^(" + std::to_string(e->index) + ")";
            break;
        case ExprKind::Neg: body = "-" + print_at(e->args[0], prec); break;
        case ExprKind::Add: body = print_at(e->args[0], prec) + " + " + print_at(e->args[1], prec + 1); break;
        case ExprKind::Sub: body = print_at(e->args[0], prec) + " - " + print_at(e->args[1], prec + 1); break;
        case ExprKind::Mul: body = print_at(e->args[0], prec) + "*" + print_at(e->args[1], prec + 1); break;
        case ExprKind::Div: body = print_at(e->args[0], prec) + "/" + print_at(e->args[1], prec + 1); break;
        case ExprKind::Tensor:
            body = print_at(e->args[0], prec) + " (*) " + print_at(e->args[1], prec + 1);
            break;
        case ExprKind::Pow: {
            std::string exp = std::to_string(e->index);
            if (e->index < 0) exp = "(" + exp + ")";
            body = print_at(e->args[0], prec + 1) + "^" + exp;
            break;
        }
        case ExprKind::OpD: body = "D[" + print_at(e->args[0], 0) + "]"; break;
        case ExprKind::OpP: body = "P[" + print_at(e->args[0], 0) + "]"; break;
        case ExprKind::OpQ: body = "Q[" + print_at(e->args[0], 0) + "]"; break;
        case ExprKind::OpE: body = "E[" + print_at(e->args[0], 0) + "]"; break;
        case ExprKind::Eps: body = "eps(" + print_at(e->args[0], 0) + ")"; break;
    }
    if (prec < parent_prec) return "(" + body + ")";
    return body;
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const ExprPtr& e) { return print_at(e, 0); }

}  // namespace intalg
