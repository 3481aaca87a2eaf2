#include "tqmzv/expr.hpp"

#include "tqmzv/cyclic.hpp"
#include "tqmzv/maps.hpp"
#include "tqmzv/products.hpp"
#include "tqmzv/rational.hpp"
#include "tqmzv/word.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace tqmzv {

namespace {

enum class TokKind { End, Number, Ident, Plus, Minus, Times, Slash, LParen, RParen, LBrack, RBrack, Comma };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto n = src.size();
    while (i < n) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({TokKind::Number, src.substr(i, j - i), start});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < n && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({TokKind::Ident, src.substr(i, j - i), start});
            i = j;
            continue;
        }
        // UTF-8 middle dot acts as multiplication.
        if (static_cast<unsigned char>(c) == 0xC2 && i + 1 < n &&
            static_cast<unsigned char>(src[i + 1]) == 0xB7) {
            out.push_back({TokKind::Times, "*", start});
            i += 2;
            continue;
        }
        TokKind kind;
        switch (c) {
            case '+': kind = TokKind::Plus; break;
            case '-': kind = TokKind::Minus; break;
            case '*': kind = TokKind::Times; break;
            case '/': kind = TokKind::Slash; break;
            case '(': kind = TokKind::LParen; break;
            case ')': kind = TokKind::RParen; break;
            case '[': kind = TokKind::LBrack; break;
            case ']': kind = TokKind::RBrack; break;
            case ',': kind = TokKind::Comma; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({TokKind::End, "", n});
    return out;
}

bool is_word_text(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return c == 'x' || c == 'y'; });
}

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    NcPoly run() {
        NcPoly e = parse_expr();
        expect(TokKind::End, "trailing input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }
    bool accept(TokKind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    void expect(TokKind k, const char* what) {
        if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().pos);
    }

    NcPoly parse_expr() {
        NcPoly acc = parse_term();
        while (true) {
            if (accept(TokKind::Plus))
                acc += parse_term();
            else if (accept(TokKind::Minus))
                acc -= parse_term();
            else
                return acc;
        }
    }

    NcPoly parse_term() {
        NcPoly acc = parse_factor();
        while (accept(TokKind::Times)) acc *= parse_factor();
        return acc;
    }

    NcPoly parse_factor() {
        if (accept(TokKind::Minus)) return -parse_factor();
        return parse_atom();
    }

    long parse_int() {
        const Token tok = next();
        if (tok.kind != TokKind::Number) throw ParseError("expected an integer", tok.pos);
        return std::stol(tok.text);
    }

    NcPoly parse_atom() {
        const Token tok = next();
        switch (tok.kind) {
            case TokKind::Number: {
                Rational value(std::stol(tok.text));
                if (accept(TokKind::Slash)) {
                    const Token den = next();
                    if (den.kind != TokKind::Number)
                        throw ParseError("expected a denominator", den.pos);
                    const Rational d(std::stol(den.text));
                    if (d.is_zero()) throw ParseError("zero denominator", den.pos);
                    value /= d;
                }
                return NcPoly::scalar(CoefPoly(value));
            }
            case TokKind::LParen: {
                NcPoly inner = parse_expr();
                expect(TokKind::RParen, "')'");
                return inner;
            }
            case TokKind::Ident:
                return parse_named(tok);
            default:
                throw ParseError("expected a value", tok.pos);
        }
    }

    NcPoly parse_named(const Token& tok) {
        const std::string& name = tok.text;
        if (name == "h") return NcPoly::scalar(CoefPoly::h());
        if (name == "t") return NcPoly::scalar(CoefPoly::t());
        if (name == "z" && peek().kind == TokKind::LBrack) {
            next();
            Index idx;
            idx.push_back(static_cast<int>(parse_int()));
            while (accept(TokKind::Comma)) idx.push_back(static_cast<int>(parse_int()));
            expect(TokKind::RBrack, "']'");
            for (int k : idx)
                if (k < 1) throw ParseError("index parts must be >= 1", tok.pos);
            return NcPoly::from_index(idx);
        }
        if (is_word_text(name)) return NcPoly::from_word(name);

        if (name == "rho") {
            expect(TokKind::LParen, "'('");
            const long n = parse_int();
            if (n < 1) throw ParseError("rho needs n >= 1", tok.pos);
            expect(TokKind::Comma, "','");
            NcPoly arg = parse_expr();
            expect(TokKind::RParen, "')'");
            return rho_map(static_cast<int>(n), arg);
        }

        using Unary = NcPoly (*)(const NcPoly&);
        static const std::pair<const char*, Unary> unary[] = {
            {"phi", [](const NcPoly& p) { return phi_map(p); }},
            {"d1", [](const NcPoly& p) { return d1_derivation(p); }},
        };
        for (const auto& [fname, fn] : unary) {
            if (name == fname) {
                expect(TokKind::LParen, "'('");
                NcPoly arg = parse_expr();
                expect(TokKind::RParen, "')'");
                return fn(arg);
            }
        }
        // Maps that carry the interpolation parameter default to s = t.
        using UnaryS = NcPoly (*)(const NcPoly&, const CoefPoly&);
        static const std::pair<const char*, UnaryS> unary_s[] = {
            {"S", s_map},           {"Sinv", s_inverse},
            {"gamma", gamma_map},   {"gammainv", gamma_inverse},
            {"phit", phi_t_map},
        };
        for (const auto& [fname, fn] : unary_s) {
            if (name == fname) {
                expect(TokKind::LParen, "'('");
                NcPoly arg = parse_expr();
                expect(TokKind::RParen, "')'");
                return fn(arg, CoefPoly::t());
            }
        }
        using Binary = NcPoly (*)(const NcPoly&, const NcPoly&);
        static const std::pair<const char*, Binary> binary[] = {
            {"star", harmonic_star}, {"starplus", harmonic_star_plus},
            {"tstar", t_harmonic},   {"cast", circledast},
            {"tcast", t_circledast},
        };
        for (const auto& [fname, fn] : binary) {
            if (name == fname) {
                expect(TokKind::LParen, "'('");
                NcPoly a = parse_expr();
                expect(TokKind::Comma, "','");
                NcPoly b = parse_expr();
                expect(TokKind::RParen, "')'");
                return fn(a, b);
            }
        }
        throw ParseError("unknown name '" + name + "'", tok.pos);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

NcPoly parse_expression(const std::string& src) { return Parser(src).run(); }

}  // namespace tqmzv
