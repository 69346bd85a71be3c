#pragma once

// Recursive-descent parser.  Precedence, loosest first:
//
//   sum      := tensor { ('+' | '-') tensor }
//   tensor   := product { 'x' product }
//   product  := unary { ('*' | '/') unary | <'(' starts an implicit product> }
//   unary    := '-' unary | power
//   power    := primary [ '^' ['-'] NUMBER ]
//   primary  := NUMBER | STRING | NAME [ '(' [ sum { ',' sum } ] ')' ] | '(' sum ')'

#include <memory>

#include "../scalar.hpp"
#include "lexer.hpp"

namespace lfac::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { number, name, string, call, neg, binary, power };
    Kind kind;
    std::string text;  // name, string contents, or operator ("+", "-", "*", "/", "x")
    Rational number;
    int exponent = 0;
    std::vector<ExprPtr> args;
    int line = 1, col = 1;
};

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        if (peek().kind != Tok::end) fail(peek(), "unexpected " + what(peek()));
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool is_tensor_op(const Token& t) const { return t.kind == Tok::ident && t.text == "x"; }

    [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw DslError("syntax", t.line, t.col, msg); }
    static std::string what(const Token& t) {
        return t.kind == Tok::end ? "end of input" : std::string(describe(t.kind)) + " '" + t.text + "'";
    }
    const Token& expect(Tok k) {
        if (peek().kind != k) fail(peek(), std::string("expected ") + describe(k) + ", got " + what(peek()));
        return take();
    }

    static ExprPtr node(Expr::Kind k, const Token& at, std::string text = {}, std::vector<ExprPtr> args = {}) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->text = std::move(text);
        e->args = std::move(args);
        e->line = at.line;
        e->col = at.col;
        return e;
    }

    ExprPtr sum() {
        ExprPtr lhs = tensor();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token op = take();
            lhs = node(Expr::Kind::binary, op, op.text, {lhs, tensor()});
        }
        return lhs;
    }
    ExprPtr tensor() {
        ExprPtr lhs = product();
        while (is_tensor_op(peek())) {
            const Token op = take();
            lhs = node(Expr::Kind::binary, op, "x", {lhs, product()});
        }
        return lhs;
    }
    ExprPtr product() {
        ExprPtr lhs = unary();
        for (;;) {
            if (peek().kind == Tok::star || peek().kind == Tok::slash) {
                const Token op = take();
                lhs = node(Expr::Kind::binary, op, op.text, {lhs, unary()});
            } else if (peek().kind == Tok::lparen) {
                lhs = node(Expr::Kind::binary, peek(), "*", {lhs, unary()});
            } else {
                return lhs;
            }
        }
    }
    ExprPtr unary() {
        if (peek().kind == Tok::minus) {
            const Token op = take();
            return node(Expr::Kind::neg, op, "-", {unary()});
        }
        return power();
    }
    ExprPtr power() {
        ExprPtr base = primary();
        if (peek().kind != Tok::caret) return base;
        const Token op = take();
        bool neg = false;
        if (peek().kind == Tok::minus) {
            take();
            neg = true;
        }
        const Token& n = peek();
        if (n.kind != Tok::number) fail(n, "exponent must be an integer literal, got " + what(n));
        take();
        if (n.text.size() > 6) fail(n, "exponent too large");
        auto e = std::make_shared<Expr>(*node(Expr::Kind::power, op, "^", {base}));
        e->exponent = std::stoi(n.text) * (neg ? -1 : 1);
        return e;
    }
    ExprPtr primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: {
                take();
                auto e = std::make_shared<Expr>(*node(Expr::Kind::number, t, t.text));
                e->number = Rational(t.text);
                return e;
            }
            case Tok::string: take(); return node(Expr::Kind::string, t, t.text);
            case Tok::ident: {
                if (is_tensor_op(t)) fail(t, "'x' is the tensor operator and needs a left operand");
                const Token name = take();
                if (peek().kind != Tok::lparen) return node(Expr::Kind::name, name, name.text);
                take();
                std::vector<ExprPtr> args;
                if (peek().kind != Tok::rparen) {
                    args.push_back(sum());
                    while (peek().kind == Tok::comma) {
                        take();
                        args.push_back(sum());
                    }
                }
                expect(Tok::rparen);
                return node(Expr::Kind::call, name, name.text, std::move(args));
            }
            case Tok::lparen: {
                take();
                ExprPtr e = sum();
                expect(Tok::rparen);
                return e;
            }
            default: fail(t, "expected an expression, got " + what(t));
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

inline ExprPtr parse(const std::string& src) { return Parser(src).parse(); }

}  // namespace lfac::dsl
