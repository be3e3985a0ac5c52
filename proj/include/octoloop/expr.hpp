#pragma once

/**
 * @file expr.hpp
 * @brief Tokenizer, parser, evaluator and printer for octonion expressions.
 *
 * Grammar:
 *     expr   := term (('+' | '-') term)*
 *     term   := factor ('*' factor)*
 *     factor := rational | basis | '-' factor | 'conj' '(' expr ')' | '(' expr ')'
 *     rational := integer ('/' positive-integer)?
 *
 * Basis tokens are the exact names 1, i, j, k, L, Li, Lj, Lk with longest
 * match ("Li" is one token; the product of L and i is spelled "L*i").
 * Bracketing is semantic: a chained product groups left-nested by default and
 * is rejected outright in strict-parens mode. No parse ever reassociates.
 */

#include "loop16.hpp"
#include "octonion.hpp"
#include "rational.hpp"

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace octoloop {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct ExprAst;
using ExprPtr = std::shared_ptr<const ExprAst>;

struct ExprAst {
    enum class Kind { rational, basis, negate, conjugate, sum, difference, product };

    Kind kind = Kind::rational;
    Rational value;                 // rational
    BasisIndex basis = BasisIndex::one; // basis
    ExprPtr lhs;                    // unary child or left operand
    ExprPtr rhs;                    // right operand
};

namespace detail {

inline ExprPtr make_node(ExprAst::Kind kind, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
    auto n = std::make_shared<ExprAst>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

} // namespace detail

inline ExprPtr make_rational(Rational r) {
    auto n = std::make_shared<ExprAst>();
    n->value = std::move(r);
    return n;
}
inline ExprPtr make_basis(BasisIndex b) {
    auto n = std::make_shared<ExprAst>();
    n->kind = ExprAst::Kind::basis;
    n->basis = b;
    return n;
}
inline ExprPtr make_negate(ExprPtr child) {
    return detail::make_node(ExprAst::Kind::negate, std::move(child));
}
inline ExprPtr make_conj(ExprPtr child) {
    return detail::make_node(ExprAst::Kind::conjugate, std::move(child));
}
inline ExprPtr make_sum(ExprPtr l, ExprPtr r) {
    return detail::make_node(ExprAst::Kind::sum, std::move(l), std::move(r));
}
inline ExprPtr make_difference(ExprPtr l, ExprPtr r) {
    return detail::make_node(ExprAst::Kind::difference, std::move(l), std::move(r));
}
inline ExprPtr make_product(ExprPtr l, ExprPtr r) {
    return detail::make_node(ExprAst::Kind::product, std::move(l), std::move(r));
}

inline bool ast_equal(const ExprAst& a, const ExprAst& b) {
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case ExprAst::Kind::rational: return a.value == b.value;
    case ExprAst::Kind::basis: return a.basis == b.basis;
    case ExprAst::Kind::negate:
    case ExprAst::Kind::conjugate: return ast_equal(*a.lhs, *b.lhs);
    case ExprAst::Kind::sum:
    case ExprAst::Kind::difference:
    case ExprAst::Kind::product:
        return ast_equal(*a.lhs, *b.lhs) && ast_equal(*a.rhs, *b.rhs);
    }
    return false;
}

namespace detail {

struct Token {
    enum class Kind { number, basis, conj_kw, plus, minus, star, slash, lparen, rparen, end };
    Kind kind = Kind::end;
    std::size_t pos = 0;
    BigInt number{};
    BasisIndex basis = BasisIndex::one;
};

inline std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    const auto push = [&out](Token::Kind kind, std::size_t pos) -> Token& {
        Token t;
        t.kind = kind;
        t.pos = pos;
        out.push_back(std::move(t));
        return out.back();
    };
    std::size_t p = 0;
    while (p < src.size()) {
        const char ch = src[p];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++p;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = p;
            while (p < src.size() && std::isdigit(static_cast<unsigned char>(src[p])))
                ++p;
            if (p < src.size() && std::isalpha(static_cast<unsigned char>(src[p])))
                throw ParseError("lexical error: coefficient products require '*'", p);
            push(Token::Kind::number, start).number =
                BigInt(std::string(src.substr(start, p - start)));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            if (src.substr(p, 4) == "conj") {
                push(Token::Kind::conj_kw, p);
                p += 4;
                continue;
            }
            // longest match over the basis names
            BasisIndex idx{};
            std::size_t len = 0;
            for (std::size_t slot = 1; slot < 8; ++slot) {
                const std::string_view nm = kBasisNames[slot];
                if (src.substr(p, nm.size()) == nm && nm.size() > len) {
                    idx = static_cast<BasisIndex>(slot);
                    len = nm.size();
                }
            }
            if (len == 0)
                throw ParseError(std::string("lexical error: unknown token '") + ch + "'", p);
            push(Token::Kind::basis, p).basis = idx;
            p += len;
            continue;
        }
        Token::Kind kind;
        switch (ch) {
        case '+': kind = Token::Kind::plus; break;
        case '-': kind = Token::Kind::minus; break;
        case '*': kind = Token::Kind::star; break;
        case '/': kind = Token::Kind::slash; break;
        case '(': kind = Token::Kind::lparen; break;
        case ')': kind = Token::Kind::rparen; break;
        default:
            throw ParseError(std::string("lexical error: unknown character '") + ch + "'", p);
        }
        push(kind, p);
        ++p;
    }
    push(Token::Kind::end, src.size());
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, bool strict) : tokens_(std::move(tokens)), strict_(strict) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        if (peek().kind != Token::Kind::end)
            throw ParseError("syntax error: unexpected trailing input", peek().pos);
        return e;
    }

private:
    const Token& peek() const { return tokens_[cursor_]; }
    const Token& advance() { return tokens_[cursor_++]; }

    ExprPtr parse_expr() {
        ExprPtr node = parse_term();
        while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
            const bool plus = advance().kind == Token::Kind::plus;
            ExprPtr rhs = parse_term();
            node = plus ? make_sum(std::move(node), std::move(rhs))
                        : make_difference(std::move(node), std::move(rhs));
        }
        return node;
    }

    ExprPtr parse_term() {
        ExprPtr node = parse_factor();
        std::size_t factors = 1;
        while (peek().kind == Token::Kind::star) {
            const std::size_t star_pos = peek().pos;
            advance();
            if (strict_ && factors >= 2)
                throw ParseError(
                    "strict-parens violation: a product of three or more factors needs "
                    "explicit parentheses",
                    star_pos);
            node = make_product(std::move(node), parse_factor());
            ++factors;
        }
        return node;
    }

    ExprPtr parse_factor() {
        const Token& tok = peek();
        switch (tok.kind) {
        case Token::Kind::minus:
            advance();
            return make_negate(parse_factor());
        case Token::Kind::number: {
            const BigInt num = advance().number;
            if (peek().kind == Token::Kind::slash) {
                advance();
                if (peek().kind != Token::Kind::number)
                    throw ParseError("syntax error: expected a denominator", peek().pos);
                const Token& den = advance();
                if (den.number == 0)
                    throw ParseError("zero denominator in a rational literal", den.pos);
                return make_rational(Rational(num, den.number));
            }
            // the bare literal 1 is the basis element
            if (num == 1)
                return make_basis(BasisIndex::one);
            return make_rational(Rational(num));
        }
        case Token::Kind::basis:
            return make_basis(advance().basis);
        case Token::Kind::conj_kw: {
            advance();
            expect(Token::Kind::lparen, "expected '(' after conj");
            ExprPtr inner = parse_expr();
            expect(Token::Kind::rparen, "expected ')'");
            return make_conj(std::move(inner));
        }
        case Token::Kind::lparen: {
            advance();
            ExprPtr inner = parse_expr();
            expect(Token::Kind::rparen, "expected ')'");
            return inner;
        }
        default:
            throw ParseError("syntax error: expected a factor", tok.pos);
        }
    }

    void expect(Token::Kind kind, const char* message) {
        if (peek().kind != kind)
            throw ParseError(std::string("syntax error: ") + message, peek().pos);
        advance();
    }

    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
    bool strict_;
};

} // namespace detail

/// In strict mode any unparenthesized product of three or more factors is an
/// error; in the default mode it groups left-nested.
inline ExprPtr parse(std::string_view src, bool strict_parens = false) {
    return detail::Parser(detail::tokenize(src), strict_parens).run();
}

inline Octonion eval_ast(const ExprAst& t) {
    switch (t.kind) {
    case ExprAst::Kind::rational: return Octonion::scalar(t.value);
    case ExprAst::Kind::basis: return embed(SignedBasis{t.basis, false});
    case ExprAst::Kind::negate: return -eval_ast(*t.lhs);
    case ExprAst::Kind::conjugate: return conj(eval_ast(*t.lhs));
    case ExprAst::Kind::sum: return eval_ast(*t.lhs) + eval_ast(*t.rhs);
    case ExprAst::Kind::difference: return eval_ast(*t.lhs) - eval_ast(*t.rhs);
    case ExprAst::Kind::product: return eval_ast(*t.lhs) * eval_ast(*t.rhs);
    }
    throw std::logic_error("unreachable expression kind");
}

/// Canonical printing with full parenthesization; parse(format_ast(t), strict)
/// reproduces t. A rational node holding exactly 1 prints as "1/1" because a
/// bare "1" parses as the basis literal.
inline std::string format_ast(const ExprAst& t) {
    switch (t.kind) {
    case ExprAst::Kind::rational:
        if (t.value.is_one())
            return "1/1";
        return t.value.str();
    case ExprAst::Kind::basis: return std::string(basis_name(t.basis));
    case ExprAst::Kind::negate: return "(-" + format_ast(*t.lhs) + ")";
    case ExprAst::Kind::conjugate: return "conj(" + format_ast(*t.lhs) + ")";
    case ExprAst::Kind::sum: return "(" + format_ast(*t.lhs) + "+" + format_ast(*t.rhs) + ")";
    case ExprAst::Kind::difference:
        return "(" + format_ast(*t.lhs) + "-" + format_ast(*t.rhs) + ")";
    case ExprAst::Kind::product:
        return "(" + format_ast(*t.lhs) + "*" + format_ast(*t.rhs) + ")";
    }
    throw std::logic_error("unreachable expression kind");
}

} // namespace octoloop
