#ifndef CLT_UTIL_HPP
#define CLT_UTIL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace clt {

// All fractions in reports are exact; no floating point anywhere in the
// library's result paths.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when a caller violates a documented precondition. CLI maps this
// to exit code 2.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when an input is valid but exceeds a size/iteration cap. CLI maps
// this to exit code 3.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A broken internal invariant; never expected on any input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Renders "num/den" with den always present ("1/1", "5/6").
std::string rational_to_string(const Rational& r);

// Accepts "p/q", integers, plain decimals ("0.9"), and scientific
// notation ("1e-3", "2.5e-2"). All forms parse exactly.
Rational parse_rational(std::string_view text);

}  // namespace clt

#endif
