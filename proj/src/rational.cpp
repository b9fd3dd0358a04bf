#include "glmn/rational.hpp"

#include <stdexcept>

namespace glmn {

Integer integer_value(const Rational& x) {
    if (!is_integer(x)) {
        throw std::domain_error("expected an integer, got " + to_string(x));
    }
    return boost::multiprecision::numerator(x);
}

std::string to_string(const Rational& x) {
    const Integer num = boost::multiprecision::numerator(x);
    const Integer den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto bad = [&] {
        return std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
    };
    const auto parse_int = [&](std::string_view part) -> Integer {
        if (part.empty()) throw bad();
        bool negative = false;
        std::size_t start = 0;
        if (part[0] == '+' || part[0] == '-') {
            negative = part[0] == '-';
            start = 1;
        }
        if (start == part.size()) throw bad();
        for (std::size_t i = start; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') throw bad();
        }
        Integer value(std::string(part.substr(start)));
        return negative ? Integer(-value) : value;
    };

    const std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(s));
    }
    const Integer num = parse_int(s.substr(0, slash));
    const Integer den = parse_int(s.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num) / Rational(den);
}

}  // namespace glmn
