#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "../errors.hpp"

namespace lfac::dsl {

/// Syntax, name, arity and type errors, located at line:column (1-based).
class DslError : public Error {
public:
    DslError(std::string code, int line, int col, const std::string& msg)
        : Error(std::move(code), std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line_(line), col_(col), message_(msg) {}
    int line() const { return line_; }
    int column() const { return col_; }
    const std::string& message() const { return message_; }

private:
    int line_, col_;
    std::string message_;
};

enum class Tok { number, ident, string, lparen, rparen, comma, plus, minus, star, slash, caret, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    int line = 1, col = 1;
};

inline const char* describe(Tok t) {
    switch (t) {
        case Tok::number: return "number";
        case Tok::ident: return "name";
        case Tok::string: return "string";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::comma: return "','";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::slash: return "'/'";
        case Tok::caret: return "'^'";
        case Tok::end: return "end of input";
    }
    return "?";
}

/// Identifiers may contain dots between name parts (`gsp4.IVa`).
inline std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto is_word = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; };
    while (i < src.size()) {
        const char ch = src[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        std::size_t j = i;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = Tok::number;
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (j < src.size() && (is_word(src[j]) || (src[j] == '.' && j + 1 < src.size() &&
                                                          std::isalpha(static_cast<unsigned char>(src[j + 1])))))
                ++j;
            t.kind = Tok::ident;
        } else if (ch == '"') {
            ++j;
            while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
            if (j >= src.size() || src[j] != '"') throw DslError("syntax", line, col, "unterminated string");
            ++j;
            t.kind = Tok::string;
            t.text = src.substr(i + 1, j - i - 2);
            out.push_back(t);
            advance(j - i);
            continue;
        } else {
            switch (ch) {
                case '(': t.kind = Tok::lparen; break;
                case ')': t.kind = Tok::rparen; break;
                case ',': t.kind = Tok::comma; break;
                case '+': t.kind = Tok::plus; break;
                case '-': t.kind = Tok::minus; break;
                case '*': t.kind = Tok::star; break;
                case '/': t.kind = Tok::slash; break;
                case '^': t.kind = Tok::caret; break;
                default: throw DslError("syntax", line, col, std::string("unexpected character '") + ch + "'");
            }
            ++j;
        }
        t.text = src.substr(i, j - i);
        out.push_back(t);
        advance(j - i);
    }
    Token e;
    e.line = line;
    e.col = col;
    out.push_back(e);
    return out;
}

}  // namespace lfac::dsl
