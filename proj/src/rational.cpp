#include "pdclass/rational.hpp"


#include "pdclass/error.hpp"

namespace pdclass {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw Error(ErrorCode::kParseError,
                "malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch < '0' || ch > '9') {
      throw Error(ErrorCode::kParseError,
                  "malformed rational '" + std::string(whole) + "' at offset " +
                      std::to_string(pos));
    }
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(ErrorCode::kParseError,
                "signed denominator in '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text, text);
  if (den == 0) {
    throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational dot(std::span<const Rational> lhs, std::span<const Rational> rhs) {
  Rational sum = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) sum += lhs[i] * rhs[i];
  return sum;
}

std::vector<BigInt> primitive_integer_vector(std::span<const Rational> v) {
  BigInt lcm_den = 1;
  for (const auto& x : v) {
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x));
  }
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& x : v) {
    const Rational scaled = x * Rational(lcm_den);
    out.push_back(boost::multiprecision::numerator(scaled));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

RationalVector to_rational(std::span<const BigInt> v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

RationalVector to_rational(std::span<const int> v) {
  RationalVector out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace pdclass
