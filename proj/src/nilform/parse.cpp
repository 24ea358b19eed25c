#include "parse.hpp"

#include <cctype>
#include <optional>

namespace nilform {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }

    std::optional<std::string> ident() {
        skip_ws();
        if (pos >= s.size()) return std::nullopt;
        char c = s[pos];
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') return std::nullopt;
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    std::optional<unsigned long> digits() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return std::nullopt;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return std::stoul(s.substr(start, pos - start));
    }

    // number := digits ('/' digits)? 'i'?   (the '/'-branch only when digits follow)
    std::optional<GaussianRational> number() {
        skip_ws();
        auto n = digits();
        if (!n) return std::nullopt;
        Rational value(static_cast<long>(*n));
        std::size_t save = pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            auto d = digits();
            if (d && *d != 0) {
                value /= Rational(static_cast<long>(*d));
            } else {
                pos = save;  // not a literal fraction; leave '/' to the parser
            }
        }
        if (pos < s.size() && s[pos] == 'i' &&
            (pos + 1 >= s.size() || (!std::isalnum(static_cast<unsigned char>(s[pos + 1])) && s[pos + 1] != '_'))) {
            ++pos;
            return GaussianRational(Rational(0), value);
        }
        return GaussianRational(value);
    }
};

struct Parser {
    Lexer lex;
    RegistryPtr reg;
    int n;

    InvariantForm scalar_form(ParamScalar c) const { return InvariantForm::scalar(n, std::move(c)); }

    InvariantForm expr() {
        InvariantForm acc = term();
        while (true) {
            if (lex.accept('+')) {
                acc += term();
            } else if (lex.accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    InvariantForm term() {
        InvariantForm acc = unary();
        while (true) {
            if (lex.accept('*')) {
                acc = wedge(acc, unary());
            } else if (lex.peek() == '/') {
                // only consume when this is a scalar division
                std::size_t save = lex.pos;
                lex.accept('/');
                InvariantForm d = unary();
                if (!d.homogeneous(0, 0))
                    throw ParseError("division by a form of positive degree", save);
                ParamScalar dc = d.is_zero() ? ParamScalar(reg) : d.terms().begin()->second;
                if (dc.is_zero()) throw ParseError("division by zero", save);
                ParamScalar inv = ParamScalar::constant(reg, GaussianRational(1)) / dc;
                acc = acc.scaled(inv);
            } else {
                return acc;
            }
        }
    }

    InvariantForm unary() {
        if (lex.accept('-')) return -unary();
        InvariantForm base = primary();
        if (lex.peek() == '^') {
            std::size_t save = lex.pos;
            lex.accept('^');
            auto d = lex.digits();
            if (!d) throw ParseError("expected integer exponent", lex.pos);
            if (!base.homogeneous(0, 0))
                throw ParseError("'^' applies to scalars only", save);
            ParamScalar b = base.is_zero() ? ParamScalar(reg) : base.terms().begin()->second;
            ParamScalar acc = ParamScalar::constant(reg, GaussianRational(1));
            for (unsigned long k = 0; k < *d; ++k) acc *= b;
            return scalar_form(acc);
        }
        return base;
    }

    InvariantForm primary() {
        if (auto num = lex.number()) return scalar_form(ParamScalar::constant(reg, *num));
        if (lex.accept('(')) {
            InvariantForm inner = expr();
            lex.expect(')');
            return inner;
        }
        std::size_t start = lex.pos;
        auto id = lex.ident();
        if (!id) throw ParseError("expected expression", lex.pos);
        if (*id == "i") return scalar_form(ParamScalar::constant(reg, GaussianRational::i()));
        if (*id == "conj") {
            lex.expect('(');
            InvariantForm inner = expr();
            lex.expect(')');
            return inner.conj();
        }
        if (*id == "e" && lex.peek() == '[') return monomial(start);
        int k = reg ? reg->find(*id) : -1;
        if (k < 0) throw ParseError("unknown identifier '" + *id + "'", start);
        return scalar_form(ParamScalar::parameter(reg, k));
    }

    InvariantForm monomial(std::size_t start) {
        lex.expect('[');
        uint32_t holo = indices(start);
        lex.expect('|');
        uint32_t anti = indices(start);
        lex.expect(']');
        return InvariantForm::monomial(n, FormMonomial{holo, anti},
                                       ParamScalar::constant(reg, GaussianRational(1)));
    }

    uint32_t indices(std::size_t start) {
        uint32_t mask = 0;
        int prev = 0;
        while (true) {
            char c = lex.peek();
            if (c == '|' || c == ']') return mask;
            auto d = lex.digits();
            if (!d) throw ParseError("expected coframe index", lex.pos);
            int idx = static_cast<int>(*d);
            if (idx < 1 || idx > n)
                throw ParseError("coframe index " + std::to_string(idx) + " out of range 1.." + std::to_string(n), start);
            if (idx <= prev) throw ParseError("coframe indices must be strictly ascending", start);
            prev = idx;
            mask |= 1u << (idx - 1);
            if (!lex.accept(',')) {
                char c2 = lex.peek();
                if (c2 != '|' && c2 != ']') throw ParseError("expected ',', '|' or ']'", lex.pos);
            }
        }
    }
};

}  // namespace

InvariantForm parse_form(const std::string& text, const RegistryPtr& reg, int n) {
    Parser p{Lexer{text}, reg, n};
    InvariantForm f = p.expr();
    if (!p.lex.eof()) throw ParseError("trailing input", p.lex.pos);
    return f;
}

ParamScalar parse_scalar(const std::string& text, const RegistryPtr& reg) {
    InvariantForm f = parse_form(text, reg, 1);
    if (f.is_zero()) return ParamScalar(reg);
    if (!f.homogeneous(0, 0)) throw ParseError("expected a scalar expression", 0);
    return f.terms().begin()->second;
}

GaussianRational parse_gaussian(const std::string& text) {
    auto reg = std::make_shared<ParamRegistry>();
    ParamScalar s = parse_scalar(text, reg);
    if (!s.is_constant()) throw ParseError("expected a Gaussian rational literal", 0);
    return s.constant_value();
}

}  // namespace nilform
