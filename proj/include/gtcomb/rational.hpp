#pragma once

// Exact arithmetic used everywhere in this library: arbitrary-precision
// integers and canonical rationals (always reduced, denominator > 0).
// No floating point is used anywhere in the computational core.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gtcomb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// n! for n >= 0; throws std::invalid_argument for negative n.
Int factorial(int n);

// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Int binomial(int n, int k);

// Canonical "p/q" spelling with q > 0 and gcd(p, q) = 1, e.g. "0/1", "-3/2".
std::string rat_repr(const Rat& r);

// Plain decimal spelling of an arbitrary-precision integer.
std::string int_repr(const Int& n);

// Parses the form produced by rat_repr; a bare integer is also accepted.
Rat rat_parse(const std::string& text);

// Thrown when a brute-force enumeration or oracle would exceed its
// configured resource bounds.
class limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gtcomb
