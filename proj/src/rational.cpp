#include "rieszpair/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rieszpair {

Rational frac_mod1(const Rational& x) {
    BigInt fl = numerator(x) / denominator(x);
    // cpp_int division truncates toward zero; shift down for negatives.
    if (x < 0 && fl * denominator(x) != numerator(x)) fl -= 1;
    Rational r = x - Rational(fl);
    return r;
}

Rational mod(const Rational& x, const Rational& m) {
    if (m <= 0) throw std::invalid_argument("mod: modulus must be positive");
    Rational q = x / m;
    BigInt fl = numerator(q) / denominator(q);
    if (q < 0 && fl * denominator(q) != numerator(q)) fl -= 1;
    return x - Rational(fl) * m;
}

std::string to_fraction_string(const Rational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

namespace {

// cpp_int's string constructor treats leading zeros as octal; parse digit
// strings explicitly instead.
BigInt parse_integer(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty integer");
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("parse_rational: bare sign");
    BigInt value = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("parse_rational: malformed integer '" + s + "'");
        value = value * 10 + (s[i] - '0');
    }
    return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    const std::string s(text);

    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty())
            throw std::invalid_argument("parse_rational: malformed fraction '" + s + "'");
        const BigInt n = parse_integer(num);
        const BigInt d = parse_integer(den);
        if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rational(n, d);
    }

    const auto dot = s.find('.');
    std::string digits;
    std::size_t scale = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (i == 0 && (c == '+' || c == '-')) {
            digits.push_back(c);
            continue;
        }
        if (c == '.') {
            if (i != dot) throw std::invalid_argument("parse_rational: malformed number '" + s + "'");
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("parse_rational: malformed number '" + s + "'");
        digits.push_back(c);
        if (dot != std::string::npos && i > dot) ++scale;
    }
    if (digits.empty() || digits == "+" || digits == "-")
        throw std::invalid_argument("parse_rational: malformed number '" + s + "'");

    const BigInt n = parse_integer(digits);
    BigInt d = 1;
    for (std::size_t i = 0; i < scale; ++i) d *= 10;
    return Rational(n, d);
}

}  // namespace rieszpair
