#include "bellpoly/rational.hpp"

#include <stdexcept>

namespace bellpoly {

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

namespace {

bool is_integer_text(std::string_view text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) {
        return false;
    }
    for (std::size_t k = start; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9') {
            return false;
        }
    }
    return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    if (!is_integer_text(text)) {
        throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    }
    if (text[0] == '+') {
        text.remove_prefix(1);
    }
    return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-') {
        throw std::invalid_argument("negative denominator in '" + std::string(text) + "'");
    }
    Integer den = parse_integer(den_text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational value(num, den);
    value.canonicalize();
    return value;
}

IntegerVector clear_denominators(const RationalVector& values) {
    Integer lcm = 1;
    for (const auto& v : values) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    }
    IntegerVector out;
    out.reserve(values.size());
    for (const auto& v : values) {
        out.push_back(v.get_num() * (lcm / v.get_den()));
    }
    return out;
}

Integer gcd_of(const IntegerVector& values) {
    Integer g = 0;
    for (const auto& v : values) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    return g;
}

RationalVector to_rational(const IntegerVector& values) {
    RationalVector out;
    out.reserve(values.size());
    for (const auto& v : values) {
        out.emplace_back(v);
    }
    return out;
}

}  // namespace bellpoly
