#include "nilflow/poly_text.hpp"

#include <cctype>

#include "nilflow/errors.hpp"

namespace nilflow {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string read_number() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
            ++pos;
        if (pos == start) throw ParseError("expected a number", start);
        std::string digits = text.substr(start, pos - start);
        if (pos < text.size() && text[pos] == '/') {
            const std::size_t save = pos;
            ++pos;
            const std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == dstart) throw ParseError("expected denominator digits", save + 1);
            digits += "/" + text.substr(dstart, pos - dstart);
        }
        return digits;
    }

    std::string read_identifier() {
        skip_ws();
        const std::size_t start = pos;
        if (pos >= text.size() ||
            !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            throw ParseError("expected an identifier", start);
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    unsigned read_uint() {
        skip_ws();
        const std::size_t start = pos;
        unsigned long long value = 0;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected an exponent", start);
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + static_cast<unsigned>(text[pos] - '0');
            if (value > 1'000'000) throw ParseError("exponent too large", start);
            ++pos;
        }
        return static_cast<unsigned>(value);
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::vector<std::string> coords) {
    Lexer lex{text};
    Polynomial result = Polynomial::zero(coords);

    if (lex.done()) throw ParseError("empty polynomial", 0);

    bool first_term = true;
    while (!lex.done()) {
        Rational sign(1);
        if (lex.consume('-')) {
            sign = -1;
        } else if (lex.consume('+')) {
            // explicit plus
        } else if (!first_term) {
            throw ParseError("expected '+' or '-' between terms", lex.pos);
        }
        first_term = false;

        Rational coef = sign;
        Exponents exps(coords.size(), 0);
        bool expect_factor = true;
        while (expect_factor) {
            const char c = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coef *= rational_from_string(lex.read_number());
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                const std::size_t where = lex.pos;
                const std::string name = lex.read_identifier();
                auto it = std::find(coords.begin(), coords.end(), name);
                if (it == coords.end()) {
                    (void)where;
                    throw UnknownCoordinateError(name);
                }
                unsigned e = 1;
                if (lex.consume('^')) e = lex.read_uint();
                exps[static_cast<std::size_t>(it - coords.begin())] += e;
            } else {
                throw ParseError("expected a coefficient or coordinate", lex.pos);
            }
            expect_factor = lex.consume('*');
        }
        result = result + Polynomial::monomial(coords, std::move(exps), coef);
    }
    return result;
}

}  // namespace nilflow
