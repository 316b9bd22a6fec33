#include "nilflow/rational.hpp"

#include <cctype>

#include "nilflow/errors.hpp"

namespace nilflow {

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string s = text.substr(begin, end - begin);
    if (s.empty()) throw ParseError("empty rational literal", begin);

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal literal: shift the point away and divide by a power of ten
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw ParseError("malformed decimal literal '" + s + "'", begin);
        try {
            BigInt num(digits);
            BigInt den(1);
            for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
            Rational r(num, den);
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed decimal literal '" + s + "'", begin);
        }
    }

    try {
        Rational r(s);
        r.canonicalize();
        if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", begin);
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational literal '" + s + "'", begin);
    }
}

double to_double(const Rational& r) { return r.get_d(); }

Rational rational_pow(const Rational& base, unsigned exp) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    out.canonicalize();
    return out;
}

Rational factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

}  // namespace nilflow
