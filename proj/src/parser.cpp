#include "weylforge/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace weylforge {

namespace {

enum class TokKind { Rational, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            tok_ = {TokKind::End, "", start};
            return;
        }
        char c = src_[i_];
        auto single = [&](TokKind k) {
            ++i_;
            tok_ = {k, std::string(1, c), start};
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            tok_ = {TokKind::Rational, src_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isalnum(static_cast<unsigned char>(src_[j]))) ++j;
            tok_ = {TokKind::Ident, src_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        switch (c) {
            case '+': single(TokKind::Plus); return;
            case '-': single(TokKind::Minus); return;
            case '*': single(TokKind::Star); return;
            case '/': single(TokKind::Slash); return;
            case '^': single(TokKind::Caret); return;
            case '(': single(TokKind::LParen); return;
            case ')': single(TokKind::RParen); return;
            default: throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
        }
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& src, SignaturePtr sig) : lex_(src), sig_(std::move(sig)) {}

    NCPoly parse() {
        NCPoly out = expr();
        if (lex_.peek().kind != TokKind::End)
            throw ParseError("trailing input", lex_.peek().pos);
        return out;
    }

private:
    NCPoly expr() {
        bool negate = false;
        if (lex_.peek().kind == TokKind::Minus) {
            lex_.take();
            negate = true;
        }
        NCPoly acc = term();
        if (negate) acc = -acc;
        while (lex_.peek().kind == TokKind::Plus || lex_.peek().kind == TokKind::Minus) {
            bool minus = lex_.take().kind == TokKind::Minus;
            NCPoly rhs = term();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

    static bool starts_factor(TokKind k) {
        return k == TokKind::Rational || k == TokKind::Ident || k == TokKind::LParen;
    }

    NCPoly term() {
        NCPoly acc = factor();
        for (;;) {
            TokKind k = lex_.peek().kind;
            if (k == TokKind::Star) {
                lex_.take();
                acc = nc_mul(acc, factor());
            } else if (k == TokKind::Slash) {
                std::size_t pos = lex_.take().pos;
                NCPoly divisor = factor();
                if (!divisor.is_scalar() || divisor.is_zero())
                    throw ParseError("divisor must be a nonzero constant", pos);
                acc = acc.scaled(divisor.scalar_value().inverse());
            } else if (starts_factor(k)) {
                acc = nc_mul(acc, factor());  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    NCPoly factor() {
        NCPoly base = atom();
        if (lex_.peek().kind == TokKind::Caret) {
            std::size_t pos = lex_.take().pos;
            Token e = lex_.take();
            if (e.kind != TokKind::Rational || e.text.find('/') != std::string::npos)
                throw ParseError("expected natural exponent", pos);
            unsigned long exp = 0;
            try {
                exp = std::stoul(e.text);
            } catch (const std::exception&) {
                throw ParseError("exponent overflow", e.pos);
            }
            if (exp > 64) throw ParseError("exponent overflow (limit 64)", e.pos);
            base = nc_pow(base, static_cast<unsigned>(exp));
        }
        return base;
    }

    NCPoly atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case TokKind::Rational: {
                // "int" already lexed; a following "/" binds as term-level
                // division, which agrees with the rational literal value.
                auto r = Rational::parse(t.text);
                if (!r) throw ParseError("malformed rational", t.pos);
                return NCPoly::scalar(sig_, FracElem(*r));
            }
            case TokKind::Ident: {
                int vi = sig_->var_index(t.text);
                if (vi >= 0) return NCPoly::generator(sig_, vi);
                return NCPoly::scalar(sig_, FracElem::parameter(t.text));
            }
            case TokKind::LParen: {
                NCPoly inner = expr();
                Token close = lex_.take();
                if (close.kind != TokKind::RParen) throw ParseError("expected ')'", close.pos);
                return inner;
            }
            case TokKind::End: throw ParseError("unexpected end of input", t.pos);
            default: throw ParseError("unexpected token '" + t.text + "'", t.pos);
        }
    }

    Lexer lex_;
    SignaturePtr sig_;
};

std::string format_monomial(const Signature& sig, const ExpVec& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << sig.var_name(static_cast<int>(i));
        if (e[i] > 1) os << "^" << e[i];
        first = false;
    }
    return os.str();
}

/// Print a FracElem coefficient in front of a monomial text.
void format_coefficient(std::ostream& os, const FracElem& c, const std::string& mono,
                        bool leading) {
    bool negative = false;
    FracElem mag = c;
    if (c.is_rational()) {
        negative = c.rational_value().sign() < 0;
        if (negative) mag = -c;
    } else if (c.is_polynomial()) {
        CPoly p = c.polynomial_value();
        negative = p.content().sign() < 0;
        if (negative) mag = -c;
    }
    if (leading) {
        if (negative) os << "-";
    } else {
        os << (negative ? " - " : " + ");
    }
    bool mag_is_one = mag.is_rational() && mag.rational_value().is_one();
    std::string ctext;
    if (!mag_is_one || mono.empty()) {
        if (mag.is_rational()) {
            ctext = mag.rational_value().str();
        } else if (mag.is_polynomial() && mag.polynomial_value().terms().size() == 1 &&
                   mag.polynomial_value().content().is_one()) {
            ctext = mag.polynomial_value().str();  // single monic monomial like l0*l1
        } else {
            ctext = "(" + mag.num().str() + ")";
            if (!(mag.den().is_constant() && mag.den().constant_value().is_one()))
                ctext += "/(" + mag.den().str() + ")";
        }
        if (leading && negative && !ctext.empty() && ctext[0] == '-') {
            // shouldn't happen: mag is sign-normalized
        }
        os << ctext;
        if (!mono.empty()) os << "*";
    }
    os << mono;
}

}  // namespace

NCPoly parse_expression(const std::string& src, const SignaturePtr& sig) {
    return Parser(src, sig).parse();
}

std::string format_canonical(const NCPoly& f) {
    if (f.is_zero()) return "0";
    std::vector<const std::pair<const ExpVec, FracElem>*> ordered;
    for (const auto& t : f.terms()) ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(),
              [](auto* a, auto* b) { return deglex_compare(a->first, b->first) > 0; });
    std::ostringstream os;
    bool leading = true;
    for (auto* t : ordered) {
        format_coefficient(os, t->second, format_monomial(*f.sig(), t->first), leading);
        leading = false;
    }
    return os.str();
}

}  // namespace weylforge
