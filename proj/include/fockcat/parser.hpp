#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fockcat/error.hpp"
#include "fockcat/expr.hpp"

namespace fockcat {

namespace detail {

enum class TokKind { Ident, Number, Plus, Star, Caret, Compose, LParen, RParen, Comma, Equals, Slash, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t offset;
};

inline const char* tok_name(TokKind k) {
    switch (k) {
        case TokKind::Ident: return "identifier";
        case TokKind::Number: return "number";
        case TokKind::Plus: return "'+'";
        case TokKind::Star: return "'*'";
        case TokKind::Caret: return "'^'";
        case TokKind::Compose: return "'of'";
        case TokKind::LParen: return "'('";
        case TokKind::RParen: return "')'";
        case TokKind::Comma: return "','";
        case TokKind::Equals: return "'='";
        case TokKind::Slash: return "'/'";
        case TokKind::End: return "end of input";
    }
    return "?";
}

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t at = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({TokKind::Number, std::string(text.substr(i, j - i)), at});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && is_ident(text[j])) ++j;
            std::string word(text.substr(i, j - i));
            out.push_back({word == "of" ? TokKind::Compose : TokKind::Ident, std::move(word), at});
            i = j;
            continue;
        }
        // UTF-8 ring operator U+2218
        if (text.substr(i).starts_with("\xe2\x88\x98")) {
            out.push_back({TokKind::Compose, "\xe2\x88\x98", at});
            i += 3;
            continue;
        }
        switch (c) {
            case '+': out.push_back({TokKind::Plus, "+", at}); break;
            case '*': out.push_back({TokKind::Star, "*", at}); break;
            case '^': out.push_back({TokKind::Caret, "^", at}); break;
            case '(': out.push_back({TokKind::LParen, "(", at}); break;
            case ')': out.push_back({TokKind::RParen, ")", at}); break;
            case ',': out.push_back({TokKind::Comma, ",", at}); break;
            case '=': out.push_back({TokKind::Equals, "=", at}); break;
            case '/': out.push_back({TokKind::Slash, "/", at}); break;
            default:
                throw Error(ErrorCode::Parse,
                            "unexpected character '" + std::string(1, c) + "' at byte " +
                                std::to_string(at),
                            at);
        }
        ++i;
    }
    out.push_back({TokKind::End, "", text.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    ExprPtr parse_expression() {
        ExprPtr e = parse_sum();
        expect(TokKind::End);
        return e;
    }

    /// "VAR = expr" for the fixed-point solver.
    std::pair<std::string, ExprPtr> parse_equation() {
        Token var = expect(TokKind::Ident);
        if (is_reserved(var.text))
            throw Error(ErrorCode::Parse, "'" + var.text + "' is reserved and cannot be solved for",
                        var.offset);
        expect(TokKind::Equals);
        ExprPtr rhs = parse_sum();
        expect(TokKind::End);
        return {var.text, rhs};
    }

private:
    static bool is_reserved(const std::string& w) {
        return w == "Z" || w == "E" || w == "Eplus" || w == "O" || w == "En" || w == "D" ||
               w == "Astar" || w == "Conj" || w == "Phase" || w == "A" || w == "ASTAR" ||
               w == "PHI" || w == "N" || w == "of";
    }

    const Token& peek() const { return tokens_[pos_]; }
    Token advance() { return tokens_[pos_++]; }
    bool match(TokKind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    Token expect(TokKind k) {
        if (peek().kind != k)
            throw Error(ErrorCode::Parse,
                        std::string("expected ") + tok_name(k) + " but found " +
                            tok_name(peek().kind) + " at byte " + std::to_string(peek().offset),
                        peek().offset);
        return advance();
    }

    ExprPtr parse_sum() {
        ExprPtr e = parse_product();
        while (match(TokKind::Plus)) e = make_expr<BinaryExpr>(BinaryKind::Add, e, parse_product());
        return e;
    }
    ExprPtr parse_product() {
        ExprPtr e = parse_power();
        while (match(TokKind::Star)) e = make_expr<BinaryExpr>(BinaryKind::Mul, e, parse_power());
        return e;
    }
    ExprPtr parse_power() {
        ExprPtr e = parse_compose();
        while (match(TokKind::Caret)) {
            Token n = expect(TokKind::Number);
            e = make_expr<BinaryExpr>(BinaryKind::Pow, e,
                                      make_expr<NatExpr>(Natural::from_decimal(n.text)));
        }
        return e;
    }
    ExprPtr parse_compose() {
        ExprPtr e = parse_primary();
        while (match(TokKind::Compose))
            e = make_expr<BinaryExpr>(BinaryKind::Compose, e, parse_primary());
        return e;
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case TokKind::LParen: {
                advance();
                ExprPtr e = parse_sum();
                expect(TokKind::RParen);
                return e;
            }
            case TokKind::Number: {
                advance();
                return make_expr<NatExpr>(Natural::from_decimal(t.text));
            }
            case TokKind::Ident: {
                Token name = advance();
                if (name.text == "Z") return make_expr<AtomExpr>(TypeAtom::Z);
                if (name.text == "E") return make_expr<AtomExpr>(TypeAtom::E);
                if (name.text == "Eplus") return make_expr<AtomExpr>(TypeAtom::Eplus);
                if (name.text == "O") return make_expr<AtomExpr>(TypeAtom::O);
                if (name.text == "A") return make_expr<OpAtomExpr>(OpAtom::A);
                if (name.text == "ASTAR") return make_expr<OpAtomExpr>(OpAtom::AStar);
                if (name.text == "PHI") return make_expr<OpAtomExpr>(OpAtom::Phi);
                if (name.text == "N") return make_expr<OpAtomExpr>(OpAtom::N);
                if (name.text == "En") {
                    expect(TokKind::LParen);
                    Token n = expect(TokKind::Number);
                    expect(TokKind::RParen);
                    Natural size = Natural::from_decimal(n.text);
                    if (!size.fits_u64())
                        throw Error(ErrorCode::Size, "En size out of range", n.offset);
                    return make_expr<EnExpr>(size.to_u64());
                }
                if (name.text == "D" || name.text == "Astar" || name.text == "Conj") {
                    UnaryKind kind = name.text == "D"       ? UnaryKind::Derivative
                                     : name.text == "Astar" ? UnaryKind::Shift
                                                            : UnaryKind::Conjugate;
                    expect(TokKind::LParen);
                    ExprPtr child = parse_sum();
                    expect(TokKind::RParen);
                    return make_expr<UnaryExpr>(kind, child);
                }
                if (name.text == "Phase") {
                    expect(TokKind::LParen);
                    ExprPtr child = parse_sum();
                    expect(TokKind::Comma);
                    Rational turns = parse_fraction();
                    expect(TokKind::RParen);
                    return make_expr<PhaseExpr>(child, turns);
                }
                return make_expr<VarExpr>(name.text);
            }
            default:
                throw Error(ErrorCode::Parse,
                            std::string("expected identifier, number, or '(' but found ") +
                                tok_name(t.kind) + " at byte " + std::to_string(t.offset),
                            t.offset);
        }
    }

    Rational parse_fraction() {
        Token num = expect(TokKind::Number);
        if (match(TokKind::Slash)) {
            Token den = expect(TokKind::Number);
            return Rational(Integer(Natural::from_decimal(num.text)),
                            Natural::from_decimal(den.text));
        }
        return Rational(Integer(Natural::from_decimal(num.text)), Natural(1));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expr(std::string_view text) {
    return detail::Parser(text).parse_expression();
}

inline std::pair<std::string, ExprPtr> parse_equation(std::string_view text) {
    return detail::Parser(text).parse_equation();
}

}  // namespace fockcat
