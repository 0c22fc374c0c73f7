#include "gtcomb/hurwitz.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gtcomb {

namespace {

bool admissible(const HurwitzKey& key) {
  return key.d >= 1 && key.g >= 0 && weighted_sum(key.alpha) == key.d;
}

const HurwitzKey kTrivialCover{1, 0, MultIndex::unit(1)};

struct DepthGuard {
  std::atomic<int>& depth;
  DepthGuard(std::atomic<int>& d, std::atomic<int>& m) : depth(d) {
    int now = ++depth;
    int seen = m.load();
    while (seen < now && !m.compare_exchange_weak(seen, now)) {
    }
  }
  ~DepthGuard() { --depth; }
};

std::string describe(const HurwitzKey& key) {
  std::ostringstream os;
  os << "d=" << key.d << " g=" << key.g << " alpha=" << dense_repr(key.alpha);
  return os.str();
}

}  // namespace

int hurwitz_branch_count(const HurwitzKey& key) {
  return key.d + length(key.alpha) + 2 * key.g - 2;
}

Rat HurwitzTable::number(const HurwitzKey& key) {
  if (!admissible(key)) return Rat(0);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  DepthGuard guard(depth_, max_depth_);
  Rat value;
  if (hurwitz_branch_count(key) == 0) {
    value = (key == kTrivialCover) ? Rat(1) : Rat(0);
  } else {
    value = parts(key).total();
  }
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(key, value);
  return value;
}

HurwitzTable::Parts HurwitzTable::parts(const HurwitzKey& key) {
  Parts out;
  if (!admissible(key)) return out;
  const int r = hurwitz_branch_count(key);
  if (r == 0) return out;
  const MultIndex& alpha = key.alpha;

  // Cut: one branch point splits a cycle of length i + j into i and j.
  for (auto [i, ai] : alpha.parts()) {
    for (auto [j, aj] : alpha.parts()) {
      if (j < i) continue;
      if (i == j && ai < 2) continue;
      MultIndex sub = alpha;
      sub -= MultIndex::unit(i);
      sub -= MultIndex::unit(j);
      sub += MultIndex::unit(i + j);
      Rat weight = (i == j) ? Rat(i) : Rat(i + j);
      weight *= alpha[i + j] + 1;
      out.cut += weight * number(HurwitzKey{key.d, key.g, sub});
    }
  }

  // Join: a cycle of length i + j is produced from cycles of lengths i and j
  // living either on one component of lower genus or on two components.
  // Both sums run over ordered pairs (i, j) with the 1/2 in front.
  for (auto [m, am] : alpha.parts()) {
    for (int i = 1; i < m; ++i) {
      const int j = m - i;
      MultIndex grown = alpha;
      grown -= MultIndex::unit(m);
      grown += MultIndex::unit(i);
      grown += MultIndex::unit(j);

      if (key.g >= 1) {
        Int w = (i == j) ? Int(grown[i]) * (grown[i] - 1)
                         : Int(grown[i]) * grown[j];
        out.join_connected += Rat(Int(i) * j * w) / 2 *
                              number(HurwitzKey{key.d, key.g - 1, grown});
      }

      Rat split_sum;
      for_each_sub_multindex(grown, [&](const MultIndex& a1) {
        if (a1[i] < 1) return;
        MultIndex a2 = grown;
        a2 -= a1;
        if (a2[j] < 1) return;
        const int d1 = weighted_sum(a1);
        for (int g1 = 0; g1 <= key.g; ++g1) {
          HurwitzKey left{d1, g1, a1};
          HurwitzKey right{key.d - d1, key.g - g1, a2};
          Rat n1 = number(left);
          if (n1 == 0) continue;
          Rat n2 = number(right);
          if (n2 == 0) continue;
          Int ways = binomial(r - 1, hurwitz_branch_count(left));
          split_sum += Rat(ways * a1[i] * a2[j]) * n1 * n2;
        }
      });
      out.join_split += Rat(Int(i) * j) / 2 * split_sum;
    }
  }
  return out;
}

Rat generating_coefficient(HurwitzTable& table, const HurwitzKey& key) {
  if (!admissible(key)) return Rat(0);
  return table.number(key) / Rat(factorial(hurwitz_branch_count(key)));
}

namespace {

// Depth-first enumeration of tuples (tau_1, ..., tau_r) of transpositions
// with tau_r ... tau_1 sigma = id for one fixed sigma.  The running product
// pi = tau_t ... tau_1 sigma is kept as value and inverse arrays so a
// transposition applies and undoes in O(1); its cycle count is updated
// incrementally, and a branch dies as soon as the remaining budget r - t
// drops below d - c(pi), the least number of transpositions that can finish
// the job.  That prune already forces pi = id at surviving leaves, so only
// transitivity is left to check there.
struct MonodromySearch {
  int d = 0;
  int r = 0;
  std::vector<int> perm;
  std::vector<int> inv;
  int cycles = 0;
  std::vector<std::pair<int, int>> trans;
  std::vector<std::pair<int, int>> chosen;
  std::vector<int> sigma_root;
  unsigned long long count = 0;

  bool same_cycle(int a, int b) const {
    int x = a;
    do {
      x = perm[x];
      if (x == b) return true;
    } while (x != a);
    return false;
  }

  // Left-compose the running product with (a b).
  void apply(int a, int b) {
    int ia = inv[a];
    int ib = inv[b];
    std::swap(perm[ia], perm[ib]);
    std::swap(inv[a], inv[b]);
  }

  bool transitive() {
    std::vector<int> parent = sigma_root;
    auto find = [&parent](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (auto [a, b] : chosen) parent[find(a)] = find(b);
    int roots = 0;
    for (int x = 0; x < d; ++x)
      if (find(x) == x) ++roots;
    return roots == 1;
  }

  void dfs(int t) {
    if (d - cycles > r - t) return;
    if (t == r) {
      if (cycles == d && transitive()) ++count;
      return;
    }
    for (auto [a, b] : trans) {
      bool splits = same_cycle(a, b);
      apply(a, b);
      cycles += splits ? 1 : -1;
      chosen.emplace_back(a, b);
      dfs(t + 1);
      chosen.pop_back();
      cycles -= splits ? 1 : -1;
      apply(a, b);
    }
  }
};

}  // namespace

Rat monodromy_oracle(const HurwitzKey& key, const OracleLimits& limits) {
  if (limits.max_d < 1 || limits.max_d > kOracleHardMaxD || limits.max_r < 0 ||
      limits.max_r > kOracleHardMaxR) {
    throw std::invalid_argument("monodromy_oracle: limits beyond hard caps");
  }
  if (!admissible(key)) {
    throw std::invalid_argument("monodromy_oracle: key is not admissible");
  }
  const int d = key.d;
  const int r = hurwitz_branch_count(key);
  if (d > limits.max_d || r > limits.max_r) {
    throw limit_error("monodromy_oracle: key exceeds configured limits");
  }

  MonodromySearch search;
  search.d = d;
  search.r = r;
  search.perm.resize(d);
  search.inv.resize(d);
  search.sigma_root.resize(d);
  search.cycles = length(key.alpha);

  // One concrete sigma of the requested cycle type, built from consecutive
  // blocks; every other representative contributes the same tuple count, so
  // the class size multiplies in at the end.
  int start = 0;
  for (auto [k, mult] : key.alpha.parts()) {
    for (int copy = 0; copy < mult; ++copy) {
      for (int x = start; x < start + k - 1; ++x) search.perm[x] = x + 1;
      search.perm[start + k - 1] = start;
      for (int x = start; x < start + k; ++x) search.sigma_root[x] = start;
      start += k;
    }
  }
  for (int x = 0; x < d; ++x) search.inv[search.perm[x]] = x;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) search.trans.emplace_back(a, b);

  search.dfs(0);

  Int class_size =
      factorial(d) / (power_product(key.alpha) * multi_factorial(key.alpha));
  return Rat(Int(search.count) * class_size, factorial(d));
}

CutJoinReport verify_cut_and_join(HurwitzTable& table, int dmax, int gmax,
                                  const OracleLimits& limits) {
  if (dmax < 1 || gmax < 0) {
    throw std::invalid_argument("verify_cut_and_join: empty sweep range");
  }
  CutJoinReport report;
  for (int d = 1; d <= dmax && d <= limits.max_d; ++d) {
    for (int g = 0; g <= gmax; ++g) {
      for_each_multindex_of_weight(d, [&](const MultIndex& alpha) {
        HurwitzKey key{d, g, alpha};
        const int r = hurwitz_branch_count(key);
        if (r > limits.max_r) return;
        CutJoinRow row;
        row.key = key;
        row.r = r;
        row.value = table.number(key);
        row.oracle = monodromy_oracle(key, limits);
        row.parts = table.parts(key);
        bool internal_ok = r == 0 || row.parts.total() == row.value;
        row.ok = internal_ok && row.value == row.oracle;
        if (!row.ok && !report.first_mismatch)
          report.first_mismatch = describe(key);
        report.all_ok = report.all_ok && row.ok;
        report.rows.push_back(std::move(row));
      });
    }
  }
  return report;
}

}  // namespace gtcomb
