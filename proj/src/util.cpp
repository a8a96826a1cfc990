#include "clt/util.hpp"

#include <cctype>
#include <cstdlib>

namespace clt {

std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// cpp_int reads a leading 0 as an octal prefix; decimal inputs must not.
BigInt decimal_bigint(std::string digits) {
  const auto first = digits.find_first_not_of('0');
  digits.erase(0, first == std::string::npos ? digits.size() - 1 : first);
  return BigInt(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw domain_error("empty rational literal");
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(0, 1);
  }

  auto fail = [&] { throw domain_error("cannot parse rational: '" + std::string(text) + "'"); };

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    BigInt d = decimal_bigint(den);
    if (d == 0) throw domain_error("zero denominator in '" + std::string(text) + "'");
    value = Rational(decimal_bigint(num), d);
  } else {
    // [digits][.digits][e[+-]digits]
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      std::string tail = s.substr(e + 1);
      s.erase(e);
      if (tail.empty()) fail();
      size_t pos = 0;
      try {
        exp10 = std::stol(tail, &pos);
      } catch (const std::exception&) {
        fail();
      }
      if (pos != tail.size()) fail();
    }
    std::string digits = s;
    if (auto dot = digits.find('.'); dot != std::string::npos) {
      exp10 -= static_cast<long>(digits.size() - dot - 1);
      digits.erase(dot, 1);
    }
    if (!all_digits(digits)) fail();
    value = Rational(decimal_bigint(digits));
    BigInt scale = pow(BigInt(10), static_cast<unsigned>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 < 0)
      value /= scale;
    else
      value *= scale;
  }
  return negative ? -value : value;
}

}  // namespace clt
