#include "qcf/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "qcf/errors.hpp"

namespace qcf {

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
    std::size_t start = 0;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) start = 1;
    if (start == digits.size()) {
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t i = start; i < digits.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
            throw ParseError("malformed rational '" + std::string(whole) + "'");
        }
    }
    std::string s(digits[0] == '+' ? digits.substr(1) : digits);
    return Integer(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-') {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    Integer den = parse_integer(den_text, text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational exact_from_double(double value) {
    if (!std::isfinite(value)) throw DomainError("non-finite value has no rational form");
    int exponent = 0;
    double mantissa = std::frexp(value, &exponent);
    // 53-bit mantissa scaled to an integer.
    auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Rational result(scaled);
    if (exponent >= 0) {
        result *= Rational(Integer(1) << exponent);
    } else {
        result /= Rational(Integer(1) << -exponent);
    }
    return result;
}

}  // namespace qcf
