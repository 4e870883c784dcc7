#include "cpchart/parser.hpp"

#include <cctype>

namespace cpchart {

namespace {

struct Parser {
    const std::string& text;
    const VarSetPtr& vars;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected ") + what, pos);
    }

    Expr parse() {
        Expr e = expr();
        if (!eof()) throw ParseError("unexpected trailing input", pos);
        return e;
    }

    Expr expr() {
        Expr e = term();
        while (true) {
            if (accept('+'))
                e += term();
            else if (accept('-'))
                e -= term();
            else
                return e;
        }
    }

    Expr term() {
        Expr e = factor();
        while (true) {
            if (accept('*')) {
                e *= factor();
            } else if (accept('/')) {
                size_t at = pos;
                bool literal = false;
                Expr d = factor(&literal);
                if (d.is_zero()) {
                    if (literal) throw ParseError("division by zero", at);
                    throw std::domain_error("division by zero expression");
                }
                e /= d;
            } else {
                return e;
            }
        }
    }

    // literal_zero reports whether the factor was the literal number 0,
    // which the grammar rejects as a divisor at parse time.
    Expr factor(bool* literal_zero = nullptr) {
        if (accept('-')) {
            Expr e = factor(literal_zero);
            return -e;
        }
        Expr e = atom(literal_zero);
        if (accept('^')) {
            long k = integer();
            if (literal_zero) *literal_zero = false;
            if (k < 0 && e.is_zero()) throw std::domain_error("division by zero expression");
            return e.pow(static_cast<int>(k));
        }
        return e;
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        bool neg = false;
        if (pos < text.size() && text[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected integer exponent", pos);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) throw ParseError("exponent too large", start);
            ++pos;
        }
        return neg ? -v : v;
    }

    Expr atom(bool* literal_zero = nullptr) {
        if (literal_zero) *literal_zero = false;
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Expr e = expr();
            expect(')', "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(literal_zero);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

    Expr number(bool* literal_zero) {
        size_t start = pos;
        std::string whole, frac;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            whole += text[pos++];
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                frac += text[pos++];
            if (whole.empty() && frac.empty()) throw ParseError("malformed number", start);
        }
        bool imaginary = false;
        if (pos < text.size() && text[pos] == 'i' &&
            !(pos + 1 < text.size() &&
              (std::isalnum(static_cast<unsigned char>(text[pos + 1])) || text[pos + 1] == '_'))) {
            imaginary = true;
            ++pos;
        }
        Rational v(whole.empty() ? "0" : whole, 10);
        if (!frac.empty()) {
            Rational scale(1);
            for (size_t k = 0; k < frac.size(); ++k) scale *= 10;
            v += Rational(frac, 10) / scale;
        }
        GaussRational g = imaginary ? GaussRational(Rational(0), v) : GaussRational(v);
        if (literal_zero) *literal_zero = g.is_zero();
        return Expr::constant(vars, g);
    }

    Expr identifier() {
        size_t start = pos;
        std::string name;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            name += text[pos++];
        if (name == "i") return Expr::imaginary_unit(vars);
        if (name == "conj") {
            expect('(', "'(' after conj");
            skip_ws();
            size_t istart = pos;
            std::string inner;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                inner += text[pos++];
            int v = resolve(inner, istart);
            expect(')', "')'");
            return Expr::variable(vars, vars->conjugate_index(v));
        }
        return Expr::variable(vars, resolve(name, start));
    }

    int resolve(const std::string& name, size_t at) {
        if (name.empty()) throw ParseError("expected identifier", at);
        auto idx = vars->index_of(name);
        if (idx) return *idx;
        if (name.size() >= 2 && name[0] == 'z') {
            size_t digits = (name[1] == 'b') ? 2 : 1;
            bool all_digits = name.size() > digits;
            for (size_t k = digits; k < name.size(); ++k)
                all_digits = all_digits && std::isdigit(static_cast<unsigned char>(name[k]));
            if (all_digits)
                throw ParseError("coordinate index out of range for chart dimension " +
                                     std::to_string(vars->n()) + ": '" + name + "'",
                                 at);
        }
        throw ParseError("unknown symbol '" + name + "'", at);
    }
};

}  // namespace

Expr parse_expr(const std::string& text, const VarSetPtr& vars) {
    Parser p{text, vars};
    return p.parse();
}

}  // namespace cpchart
