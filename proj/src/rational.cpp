#include "gtcomb/rational.hpp"

namespace gtcomb {

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact: out is C(n-k+i, i) after each step
  }
  return out;
}

std::string rat_repr(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string int_repr(const Int& n) { return n.str(); }

Rat rat_parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int p(text.substr(0, slash));
    Int q(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("rat_parse: zero denominator");
    return Rat(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("rat_parse: malformed rational '" + text + "'");
  }
}

}  // namespace gtcomb
