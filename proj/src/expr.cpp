#include "hcns/expr.hpp"

#include <cctype>
#include <charconv>

namespace hcns {

namespace {

enum class Tok { Integer, Decimal, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto digits = [&](std::size_t j) {
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            bool decimal = false;
            i = digits(i);
            if (i < s.size() && s[i] == '.') {
                decimal = true;
                i = digits(i + 1);
            }
            if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
                if (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                    decimal = true;
                    i = digits(j);
                }
            }
            if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                throw ParseError("implicit multiplication is not allowed; write '*'", i);
            std::string text(s.substr(start, i - start));
            if (text == ".") throw ParseError("stray '.'", start);
            out.push_back({decimal ? Tok::Decimal : Tok::Integer, start, std::move(text)});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::Ident, start, std::string(s.substr(start, i - start))});
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({kind, i, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::End, s.size(), ""});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Expr parse() {
        if (peek().kind == Tok::End) throw ParseError("empty expression", 0);
        Expr e = expr();
        if (peek().kind != Tok::End) {
            const auto& t = peek();
            if (t.kind == Tok::Ident || t.kind == Tok::Integer || t.kind == Tok::Decimal ||
                t.kind == Tok::LParen)
                throw ParseError("implicit multiplication is not allowed; write '*'", t.pos);
            throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
        return e;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_++]; }

    Expr expr() {
        Expr lhs = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token& op = next();
            Expr rhs = term();
            lhs = Expr{op.kind == Tok::Plus ? Expr::Op::Add : Expr::Op::Sub, op.pos, "", 0,
                       {std::move(lhs), std::move(rhs)}};
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const Token& op = next();
            Expr rhs = unary();
            lhs = Expr{op.kind == Tok::Star ? Expr::Op::Mul : Expr::Op::Div, op.pos, "", 0,
                       {std::move(lhs), std::move(rhs)}};
        }
        return lhs;
    }

    Expr unary() {
        if (peek().kind == Tok::Minus) {
            const Token& op = next();
            return Expr{Expr::Op::Neg, op.pos, "", 0, {unary()}};
        }
        if (peek().kind == Tok::Plus) {
            next();
            return unary();
        }
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (peek().kind == Tok::Caret) {
            const Token& op = next();
            const Token& exp = next();
            if (exp.kind != Tok::Integer)
                throw ParseError("exponent must be a nonnegative integer literal", exp.pos);
            unsigned value = 0;
            auto [p, ec] = std::from_chars(exp.text.data(), exp.text.data() + exp.text.size(), value);
            if (ec != std::errc{} || p != exp.text.data() + exp.text.size())
                throw ParseError("exponent out of range", exp.pos);
            if (peek().kind == Tok::Caret) throw ParseError("chained '^' is ambiguous; use parentheses", peek().pos);
            return Expr{Expr::Op::Pow, op.pos, "", value, {std::move(base)}};
        }
        return base;
    }

    Expr primary() {
        const Token& t = next();
        switch (t.kind) {
        case Tok::Integer: return Expr{Expr::Op::Integer, t.pos, t.text, 0, {}};
        case Tok::Decimal: return Expr{Expr::Op::Decimal, t.pos, t.text, 0, {}};
        case Tok::Ident: {
            if (peek().kind != Tok::LParen) return Expr{Expr::Op::Ident, t.pos, t.text, 0, {}};
            next();
            Expr call{Expr::Op::Call, t.pos, t.text, 0, {}};
            if (peek().kind != Tok::RParen) {
                call.args.push_back(expr());
                while (peek().kind == Tok::Comma) {
                    next();
                    call.args.push_back(expr());
                }
            }
            expect(Tok::RParen, "')'");
            return call;
        }
        case Tok::LParen: {
            Expr inner = expr();
            expect(Tok::RParen, "')'");
            return inner;
        }
        case Tok::End: throw ParseError("unexpected end of input", t.pos);
        default: throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    void expect(Tok kind, const char* what) {
        const Token& t = next();
        if (t.kind != kind) throw ParseError(std::string("expected ") + what, t.pos);
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(tokenize(text)).parse(); }

Scalar evaluate_scalar(const Expr& e) {
    switch (e.op) {
    case Expr::Op::Integer: return Scalar(Rational(Integer(e.text)));
    case Expr::Op::Decimal: {
        double v = 0;
        auto [p, ec] = std::from_chars(e.text.data(), e.text.data() + e.text.size(), v);
        if (ec != std::errc{}) throw ParseError("bad decimal literal", e.pos);
        return Scalar::from_double(v);
    }
    case Expr::Op::Ident: return Scalar::symbol(e.text);
    case Expr::Op::Call: throw ParseError("function calls are not part of the scalar grammar", e.pos);
    case Expr::Op::Neg: return -evaluate_scalar(e.args[0]);
    case Expr::Op::Add: return evaluate_scalar(e.args[0]) + evaluate_scalar(e.args[1]);
    case Expr::Op::Sub: return evaluate_scalar(e.args[0]) - evaluate_scalar(e.args[1]);
    case Expr::Op::Mul: return evaluate_scalar(e.args[0]) * evaluate_scalar(e.args[1]);
    case Expr::Op::Div: return evaluate_scalar(e.args[0]) / evaluate_scalar(e.args[1]);
    case Expr::Op::Pow: return evaluate_scalar(e.args[0]).pow(e.exponent);
    }
    throw ParseError("unsupported expression", e.pos);
}

}  // namespace hcns
