#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace rieszpair {

// Exact rational arithmetic for the circle-geometry modules. Everything the
// set constructions touch stays rational; floating point enters only when a
// value is handed to the Fourier/eigenvalue layers.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den) {
    return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Fractional part x - floor(x), always in [0, 1).
Rational frac_mod1(const Rational& x);

/// x mod m for rational m > 0, result in [0, m).
Rational mod(const Rational& x, const Rational& m);

/// Lowest-terms "num/den" rendering, e.g. "3/4", "-11/24", "0/1".
std::string to_fraction_string(const Rational& x);

/// Parses "num/den", plain integers, and finite decimals ("0.75" -> 3/4).
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

}  // namespace rieszpair
