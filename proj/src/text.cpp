#include "skewnorm/text.hpp"

#include "skewnorm/error.hpp"

#include <cctype>

namespace skewnorm {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next()
    {
        skip_space();
        const std::size_t line = line_;
        const std::size_t col = col_;
        if (pos_ >= src_.size()) return {Tok::End, "", line, col};
        const char ch = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string digits;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits += advance();
            return {Tok::Number, digits, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string ident;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ident += advance();
            return {Tok::Ident, ident, line, col};
        }
        advance();
        switch (ch) {
        case '+': return {Tok::Plus, "+", line, col};
        case '-': return {Tok::Minus, "-", line, col};
        case '*': return {Tok::Star, "*", line, col};
        case '/': return {Tok::Slash, "/", line, col};
        case '^': return {Tok::Caret, "^", line, col};
        case '(': return {Tok::LParen, "(", line, col};
        case ')': return {Tok::RParen, ")", line, col};
        default: throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
        }
    }

private:
    char advance()
    {
        const char ch = src_[pos_++];
        if (ch == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return ch;
    }

    void skip_space()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    Parser(std::string_view src, RingPtr ring) : lexer_(src), ring_(std::move(ring)) { cur_ = lexer_.next(); }

    SkewPoly parse()
    {
        SkewPoly value = expr();
        if (cur_.kind != Tok::End) error("unexpected '" + cur_.text + "'");
        return value;
    }

private:
    static constexpr unsigned kMaxExponent = 10000;

    [[noreturn]] void error(const std::string &msg) const { throw ParseError(msg, cur_.line, cur_.column); }

    void bump() { cur_ = lexer_.next(); }

    SkewPoly expr()
    {
        SkewPoly value = term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const bool minus = cur_.kind == Tok::Minus;
            bump();
            SkewPoly rhs = term();
            value = minus ? value - rhs : value + rhs;
        }
        return value;
    }

    SkewPoly term()
    {
        SkewPoly value = unary();
        while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
            const bool divide = cur_.kind == Tok::Slash;
            const Token op = cur_;
            bump();
            SkewPoly rhs = unary();
            if (divide) {
                if (!rhs.is_constant())
                    throw ParseError("division by a non-scalar expression", op.line, op.column);
                rhs = SkewPoly::constant(ring_, rhs.constant_term().inverse());
            }
            value = value * rhs;
        }
        return value;
    }

    SkewPoly unary()
    {
        if (cur_.kind == Tok::Minus) {
            bump();
            return -unary();
        }
        return factor();
    }

    SkewPoly factor()
    {
        SkewPoly b = base();
        if (cur_.kind == Tok::Caret) {
            bump();
            if (cur_.kind != Tok::Number) error("expected a natural exponent after '^'");
            if (cur_.text.size() > 5 || std::stoul(cur_.text) > kMaxExponent) error("exponent too large");
            const auto k = static_cast<unsigned>(std::stoul(cur_.text));
            bump();
            return power(b, k);
        }
        return b;
    }

    SkewPoly base()
    {
        const Token tok = cur_;
        switch (tok.kind) {
        case Tok::Number: {
            bump();
            return SkewPoly::constant(ring_, Scalar::from_rational(ring_->kind(), Rational(mpz_class(tok.text))));
        }
        case Tok::Ident: {
            bump();
            return identifier(tok);
        }
        case Tok::LParen: {
            bump();
            SkewPoly inner = expr();
            if (cur_.kind != Tok::RParen) error("expected ')'");
            bump();
            return inner;
        }
        case Tok::End: error("unexpected end of input");
        default: error("unexpected '" + tok.text + "'");
        }
    }

    SkewPoly identifier(const Token &tok)
    {
        if (auto idx = ring_->index_of(tok.text)) return SkewPoly::variable(ring_, *idx);
        const RingKind kind = ring_->kind();
        if (kind == RingKind::Qx && tok.text == "x") return SkewPoly::constant(ring_, Scalar::indeterminate());
        if (kind == RingKind::HQ) {
            if (tok.text == "i") return SkewPoly::constant(ring_, Scalar::unit_i());
            if (tok.text == "j") return SkewPoly::constant(ring_, Scalar::unit_j());
            if (tok.text == "k") return SkewPoly::constant(ring_, Scalar::unit_k());
        }
        const std::string where =
            " (line " + std::to_string(tok.line) + ", column " + std::to_string(tok.column) + ")";
        if (is_reserved_name(tok.text))
            fail(ErrorCode::UnknownScalarLiteral,
                 "'" + tok.text + "' is not a scalar of " + ring_kind_name(kind) + where);
        fail(ErrorCode::UnknownVariable, "unknown variable '" + tok.text + "'" + where);
    }

    Lexer lexer_;
    RingPtr ring_;
    Token cur_;
};

} // namespace

SkewPoly parse_expr(std::string_view src, const RingPtr &ring) { return Parser(src, ring).parse(); }

Scalar parse_scalar(std::string_view src, RingKind kind)
{
    const SkewPoly p = Parser(src, plain_ring(kind, {})).parse();
    return p.constant_term();
}

std::string monomial_string(const OreRing &ring, const Exponents &e)
{
    std::string out;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.variable(v).name;
        if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
    return out;
}

std::string to_string(const SkewPoly &f)
{
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto &[e, c] : f.terms()) {
        const std::string mono = monomial_string(*f.ring(), e);
        std::string cs = c.to_string();
        // The constant term comes last, so a sum can stand bare there.
        if (!mono.empty() && needs_parentheses(cs)) cs = "(" + cs + ")";
        std::string body;
        if (mono.empty())
            body = cs;
        else if (c.is_one())
            body = mono;
        else if ((-c).is_one())
            body = "-" + mono;
        else
            body = cs + "*" + mono;
        const bool negative = body.front() == '-';
        if (negative) body.erase(0, 1);
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

nlohmann::ordered_json to_json(const SkewPoly &f)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto &[e, c] : f.terms()) {
        nlohmann::ordered_json term;
        term["exponents"] = e;
        term["coeff"] = c.to_string();
        arr.push_back(std::move(term));
    }
    return arr;
}

SkewPoly poly_from_json(const nlohmann::json &j, const RingPtr &ring)
{
    if (!j.is_array()) fail(ErrorCode::ConfigError, "polynomial must be a JSON array of terms");
    SkewPoly out(ring);
    for (const auto &term : j) {
        if (!term.contains("exponents") || !term.contains("coeff"))
            fail(ErrorCode::ConfigError, "term needs 'exponents' and 'coeff'");
        const auto e = term.at("exponents").get<Exponents>();
        out += SkewPoly::monomial(ring, e, parse_scalar(term.at("coeff").get<std::string>(), ring->kind()));
    }
    return out;
}

} // namespace skewnorm
