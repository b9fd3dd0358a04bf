#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace glmn {

// Exact scalar used throughout the library. There is no floating-point mode:
// every predicate here tests equality or integrality of differences, and
// those must be decidable. Expression templates stay off so values behave
// like plain scalars in containers and Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

inline bool is_integer(const Rational& x) {
    return boost::multiprecision::denominator(x) == 1;
}

inline bool is_nonneg_integer(const Rational& x) { return is_integer(x) && x >= 0; }
inline bool is_pos_integer(const Rational& x) { return is_integer(x) && x > 0; }

// Integer value of an integral rational; throws std::domain_error otherwise.
Integer integer_value(const Rational& x);

// Serialized as "p" or "p/q"; parse accepts both.
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view s);

}  // namespace glmn
