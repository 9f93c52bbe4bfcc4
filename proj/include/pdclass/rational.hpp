#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdclass {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Accepts "p", "-p", "p/q". Throws Error(kParseError) on anything else or q = 0.
Rational parse_rational(std::string_view text);

Rational dot(std::span<const Rational> lhs, std::span<const Rational> rhs);

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray (coprime entries, sign preserved). The zero vector maps to zeros.
std::vector<BigInt> primitive_integer_vector(std::span<const Rational> v);

RationalVector to_rational(std::span<const BigInt> v);
RationalVector to_rational(std::span<const int> v);

}  // namespace pdclass
