#include "bisum/parse.hpp"

#include <cctype>

namespace bisum {

namespace {

struct Token {
    enum class Kind { Int, X, Y, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    size_t offset;
    Int value;  // Int tokens
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const size_t at = pos_;
        if (pos_ >= s_.size()) return {Token::Kind::End, at, Int(0)};
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return {Token::Kind::Int, at, Int(digits)};
        }
        ++pos_;
        switch (c) {
            case 'x': return {Token::Kind::X, at, Int(0)};
            case 'y': return {Token::Kind::Y, at, Int(0)};
            case '+': return {Token::Kind::Plus, at, Int(0)};
            case '-': return {Token::Kind::Minus, at, Int(0)};
            case '*': return {Token::Kind::Star, at, Int(0)};
            case '/': return {Token::Kind::Slash, at, Int(0)};
            case '^': return {Token::Kind::Caret, at, Int(0)};
            case '(': return {Token::Kind::LParen, at, Int(0)};
            case ')': return {Token::Kind::RParen, at, Int(0)};
            default: break;
        }
        throw ParseError(at, std::string("unexpected character '") + c + "'");
    }

private:
    std::string_view s_;
    size_t pos_ = 0;
};

ExprPtr make(Expr::Kind k, ExprPtr l = nullptr, ExprPtr r = nullptr, Int value = Int(0),
             unsigned exponent = 0) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->value = std::move(value);
    e->exponent = exponent;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

class Parser {
public:
    explicit Parser(std::string_view s) : lex_(s) { advance(); }

    ExprPtr parse_all() {
        ExprPtr e = expr();
        expect(Token::Kind::End, "end of input");
        return e;
    }

private:
    void advance() { tok_ = lex_.next(); }
    void expect(Token::Kind k, const char* what) {
        if (tok_.kind != k) throw ParseError(tok_.offset, std::string("expected ") + what);
        advance();
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (tok_.kind == Token::Kind::Plus || tok_.kind == Token::Kind::Minus) {
            const bool plus = tok_.kind == Token::Kind::Plus;
            advance();
            e = make(plus ? Expr::Kind::Add : Expr::Kind::Sub, e, term());
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = unary();
        while (tok_.kind == Token::Kind::Star || tok_.kind == Token::Kind::Slash) {
            const bool mul = tok_.kind == Token::Kind::Star;
            advance();
            e = make(mul ? Expr::Kind::Mul : Expr::Kind::Div, e, unary());
        }
        return e;
    }

    ExprPtr unary() {
        if (tok_.kind == Token::Kind::Minus) {
            advance();
            return make(Expr::Kind::Neg, unary());
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (tok_.kind != Token::Kind::Caret) return base;
        advance();
        // exponent: a (possibly parenthesized, possibly signed) integer literal
        const size_t at = tok_.offset;
        bool neg = false;
        int parens = 0;
        while (tok_.kind == Token::Kind::LParen) {
            ++parens;
            advance();
        }
        if (tok_.kind == Token::Kind::Minus) {
            neg = true;
            advance();
        }
        if (tok_.kind != Token::Kind::Int)
            throw ParseError(at, "exponent must be a nonnegative integer literal");
        Int v = tok_.value;
        advance();
        for (; parens > 0; --parens) expect(Token::Kind::RParen, "')'");
        if (neg && sgn(v) != 0)
            throw ParseError(at, "negative exponent; write 1/expr instead");
        if (!v.fits_uint_p()) throw ParseError(at, "exponent too large");
        return make(Expr::Kind::Pow, base, nullptr, Int(0), static_cast<unsigned>(v.get_ui()));
    }

    ExprPtr atom() {
        switch (tok_.kind) {
            case Token::Kind::Int: {
                auto e = make(Expr::Kind::Num, nullptr, nullptr, tok_.value);
                advance();
                return e;
            }
            case Token::Kind::X: advance(); return make(Expr::Kind::VarX);
            case Token::Kind::Y: advance(); return make(Expr::Kind::VarY);
            case Token::Kind::LParen: {
                advance();
                ExprPtr e = expr();
                expect(Token::Kind::RParen, "')'");
                return e;
            }
            default:
                throw ParseError(tok_.offset, "expected integer, 'x', 'y', or '('");
        }
    }

    Lexer lex_;
    Token tok_{Token::Kind::End, 0, Int(0)};
};

}  // namespace

ExprPtr parse(std::string_view input) { return Parser(input).parse_all(); }

RatFunc lower(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Num: return RatFunc(Rat(e->value));
        case Expr::Kind::VarX: return RatFunc(BPoly::var_x());
        case Expr::Kind::VarY: return RatFunc(BPoly::var_y());
        case Expr::Kind::Neg: return -lower(e->lhs);
        case Expr::Kind::Add: return lower(e->lhs) + lower(e->rhs);
        case Expr::Kind::Sub: return lower(e->lhs) - lower(e->rhs);
        case Expr::Kind::Mul: return lower(e->lhs) * lower(e->rhs);
        case Expr::Kind::Div: {
            const RatFunc d = lower(e->rhs);
            if (d.is_zero()) throw std::domain_error("division by zero");
            return lower(e->lhs) / d;
        }
        case Expr::Kind::Pow: {
            const RatFunc b = lower(e->lhs);
            RatFunc r(Rat(1));
            for (unsigned i = 0; i < e->exponent; ++i) r *= b;
            return r;
        }
    }
    throw std::logic_error("lower: bad expression node");
}

BPoly parse_bpoly(std::string_view input) {
    const RatFunc f = parse_ratfunc(input);
    if (!f.den().is_constant()) throw std::domain_error("expected a polynomial");
    return f.num() * f.den().coeff(0, 0).inv();
}

UPoly parse_upoly_x(std::string_view input) {
    const BPoly p = parse_bpoly(input);
    if (p.deg_y_or0() != 0) throw std::domain_error("expected a polynomial in x only");
    return p.y_view()[0];
}

UPoly parse_upoly_y(std::string_view input) {
    const BPoly p = parse_bpoly(input);
    if (p.deg_x_or0() != 0) throw std::domain_error("expected a polynomial in y only");
    return p.x_view()[0];
}

}  // namespace bisum
