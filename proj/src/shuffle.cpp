#include "gtcomb/shuffle.hpp"

#include <stdexcept>
#include <string>

namespace gtcomb {

namespace {

void build(int k1, int k2, int used1, int used2, RuleOfAssignment& acc,
           std::vector<RuleOfAssignment>& out) {
  if (used1 == k1 && used2 == k2) {
    out.push_back(acc);
    return;
  }
  // Extending with the next unused element of block 1 first yields the
  // ordering promised in the header.
  if (used1 < k1) {
    acc.image.emplace_back(1, used1 + 1);
    build(k1, k2, used1 + 1, used2, acc, out);
    acc.image.pop_back();
  }
  if (used2 < k2) {
    acc.image.emplace_back(2, used2 + 1);
    build(k1, k2, used1, used2 + 1, acc, out);
    acc.image.pop_back();
  }
}

}  // namespace

std::vector<RuleOfAssignment> enumerate_shuffles(int k1, int k2, int max_total) {
  if (k1 < 0 || k2 < 0)
    throw std::invalid_argument("enumerate_shuffles: negative block size");
  if (k1 + k2 > max_total)
    throw limit_error("enumerate_shuffles: " + std::to_string(k1) + "+" +
                      std::to_string(k2) + " exceeds the enumeration bound " +
                      std::to_string(max_total));
  std::vector<RuleOfAssignment> out;
  RuleOfAssignment acc;
  acc.k1 = k1;
  acc.k2 = k2;
  acc.image.reserve(static_cast<size_t>(k1) + k2);
  build(k1, k2, 0, 0, acc, out);
  return out;
}

}  // namespace gtcomb
