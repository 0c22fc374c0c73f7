#include "gtcomb/caporaso_harris.hpp"

#include <sstream>
#include <stdexcept>

#include "gtcomb/rel_invariants.hpp"

namespace gtcomb {

int ch_point_count(const CHKey& key) {
  return key.d * (key.d + 1) / 2 - key.delta + length(key.beta);
}

int geometric_euler(int d, int delta) { return 2 * delta - d * (d - 3); }

namespace {

bool admissible(const CHKey& key) {
  // delta caps at d(d-1)/2, the node count of a union of d lines; no reduced
  // degree-d curve carries more.
  return key.d >= 1 && key.delta >= 0 &&
         key.delta <= key.d * (key.d - 1) / 2 &&
         weighted_sum(key.alpha) + weighted_sum(key.beta) == key.d;
}

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

}  // namespace

Int CaporasoHarrisTable::number(const CHKey& key) {
  if (!admissible(key)) return 0;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Int value = compute(key);
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(key, value);
  return value;
}

Int CaporasoHarrisTable::compute(const CHKey& key) {
  DepthGuard guard(depth_, max_depth_);
  if (key.d == 1 && key.beta.is_zero()) {
    // Unique line through a fixed point of L with prescribed direction;
    // admissibility already forces alpha = e_1 and delta = 0 here.
    return (key.alpha == MultIndex::unit(1) && key.delta == 0) ? 1 : 0;
  }
  Int total = 0;
  // A moving contact of order k degenerates to a fixed one on the same curve.
  for (const auto& [k, mult] : key.beta.parts()) {
    CHKey sub{key.d, key.delta, key.alpha + MultIndex::unit(k),
              key.beta - MultIndex::unit(k)};
    total += Int(k) * number(sub);
  }
  // Or the line splits off, dropping the degree by one.  beta' >= beta and
  // alpha' <= alpha index the contacts the residual curve keeps.
  const int d1 = key.d - 1;
  const int ibeta = weighted_sum(key.beta);
  if (d1 >= 1 && ibeta <= d1) {
    for_each_multindex_of_weight_at_most(
        d1 - ibeta, [&](const MultIndex& gamma) {
          MultIndex beta1 = key.beta + gamma;
          int delta1 = key.delta + length(gamma) - d1;
          if (delta1 < 0 || delta1 > d1 * (d1 - 1) / 2) return;
          int alpha_budget = d1 - weighted_sum(beta1);
          for_each_sub_multindex(key.alpha, [&](const MultIndex& alpha1) {
            if (weighted_sum(alpha1) != alpha_budget) return;
            CHKey sub{d1, delta1, alpha1, beta1};
            Int coeff = multi_binomial(key.alpha, alpha1) *
                        multi_binomial(beta1, key.beta) *
                        power_product(gamma);
            if (coeff != 0) total += coeff * number(sub);
          });
        });
  }
  return total;
}

Int CaporasoHarrisTable::connected(const CHKey& key) {
  if (!admissible(key)) return 0;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = conn_memo_.find(key);
    if (it != conn_memo_.end()) return it->second;
  }
  Int value = compute_connected(key);
  std::lock_guard<std::mutex> lock(mutex_);
  conn_memo_.emplace(key, value);
  return value;
}

Int CaporasoHarrisTable::compute_connected(const CHKey& key) {
  Int value = number(key);
  // Connected curves are a subset of the reduced ones, so an empty count
  // stays empty.
  if (value == 0) return 0;
  const int r = ch_point_count(key);
  // Subtract the broken configurations, classified by the component through
  // the first of the r points: a connected piece of degree d1 < d, with the
  // remaining degree d2 curve (itself possibly broken) counted by the table.
  // The two sides meet in d1*d2 of the nodes; the rest split between them.
  for (int d1 = 1; d1 < key.d; ++d1) {
    const int d2 = key.d - d1;
    const int cross = d1 * d2;
    if (key.delta < cross) continue;
    for_each_sub_multindex(key.alpha, [&](const MultIndex& alpha1) {
      const int ia1 = weighted_sum(alpha1);
      if (ia1 > d1) return;
      for_each_sub_multindex(key.beta, [&](const MultIndex& beta1) {
        if (ia1 + weighted_sum(beta1) != d1) return;
        for (int delta1 = 0; delta1 + cross <= key.delta; ++delta1) {
          CHKey part{d1, delta1, alpha1, beta1};
          Int n1 = connected(part);
          if (n1 == 0) continue;
          CHKey rest{d2, key.delta - delta1 - cross, key.alpha - alpha1,
                     key.beta - beta1};
          Int n2 = number(rest);
          if (n2 == 0) continue;
          // The anchor point is on the connected piece; choose the rest of
          // its point diet and which fixed contacts it absorbs.
          value -= binomial(r - 1, ch_point_count(part) - 1) *
                   multi_binomial(key.alpha, alpha1) * n1 * n2;
        }
      });
    });
  }
  return value;
}

CHKey rational_diagonal_key(int d) {
  MultIndex beta;
  beta.set(1, d);
  return CHKey{d, (d - 1) * (d - 2) / 2, MultIndex{}, beta};
}

Rat CaporasoHarrisTable::gt_normalized(int chi, int d, const MultIndex& alpha,
                                       const MultIndex& beta) {
  if (d < 1) return Rat(0);
  const int twice_delta = chi + d * (d - 3);
  if (twice_delta % 2 != 0) return Rat(0);
  const CHKey key{d, twice_delta / 2, alpha, beta};
  if (!admissible(key)) return Rat(0);
  return Rat(multi_factorial(beta) * number(key));
}

Int wdvv_oracle(int d) {
  if (d < 1) throw std::invalid_argument("wdvv_oracle: degree must be >= 1");
  std::vector<Int> n(d + 1, 0);
  n[1] = 1;
  for (int e = 2; e <= d; ++e) {
    Int total = 0;
    for (int d1 = 1; d1 < e; ++d1) {
      const int d2 = e - d1;
      total += n[d1] * n[d2] * Int(d1) * d1 * d2 *
               (Int(d2) * binomial(3 * e - 4, 3 * d1 - 2) -
                Int(d1) * binomial(3 * e - 4, 3 * d1 - 1));
    }
    n[e] = total;
  }
  return n[d];
}

namespace {

// Product over the parts of a profile of the F_1 fiber-tube coefficient
// (1/b per b-fold tube, read off the no-constraint table rather than
// hard-coded, so the reassembly really consumes the closed forms).
Rat tube_weight(const MultIndex& profile) {
  Rat w(1);
  for (const auto& [b, mult] : profile.parts()) {
    TensorSum tube = fn_no_constraint(FnDegree{1, 0, b}, 0, ContactTuple{b},
                                      ContactTuple{b});
    if (tube.empty()) throw std::logic_error("tube table unexpectedly empty");
    for (int i = 0; i < mult; ++i) w *= tube.front().coeff;
  }
  return w;
}

std::string describe(const CHKey& k) {
  std::ostringstream os;
  os << "(d=" << k.d << ", delta=" << k.delta << ", alpha=" << k.alpha
     << ", beta=" << k.beta << ")";
  return os.str();
}

}  // namespace

CHSplitReport verify_ch_split(CaporasoHarrisTable& table, const CHKey& key) {
  if (!admissible(key))
    throw std::invalid_argument("verify_ch_split: inadmissible key");
  if (key.d == 1 && key.beta.is_zero())
    throw std::invalid_argument(
        "verify_ch_split: base key has no point constraint to degenerate");
  CHSplitReport report;
  report.key = key;
  report.lhs = Rat(multi_factorial(key.beta) * table.number(key));
  report.rhs = Rat(0);

  // Fiber configurations: the curve keeps degree d; the distinguished fiber
  // component through the degenerated point turns one moving contact of order
  // k into a fixed one.
  for (const auto& [k, mult] : key.beta.parts()) {
    MultIndex alpha1 = key.alpha + MultIndex::unit(k);
    MultIndex beta1 = key.beta - MultIndex::unit(k);
    CHKey sub{key.d, key.delta, alpha1, beta1};
    Int n1 = table.number(sub);

    // Gluing multiplicity of the neck profile alpha1 + beta1, divided by the
    // relabeling normalization alpha1!.
    Rat term(power_product(alpha1) * power_product(beta1),
             multi_factorial(alpha1));
    term *= n1;
    // Choices of which contacts the distinguished fiber carries...
    term *= Int(key.beta[k]) * alpha1[k];
    // ...orderings of the moving contacts of the remaining fibers on each
    // side...
    term *= multi_factorial(beta1) * multi_factorial(key.alpha);
    // ...automorphism factor 1/b per undistinguished fiber (the alpha-side
    // fibers carry profile alpha, the fixed Sinf-side ones beta1)...
    term *= tube_weight(key.alpha) * tube_weight(beta1);
    // ...and the distinguished fiber itself, pinned by the point.
    TensorSum pinned = fn_point_insertion(FnDegree{1, 0, k}, 0, ContactTuple{k},
                                          ContactTuple{k});
    term *= pinned.empty() ? Rat(0) : pinned.front().coeff;

    Rat expected =
        Rat(multi_factorial(key.beta) * Int(k) * n1);
    report.rows.push_back({"fiber", sub, term, expected, term == expected});
    report.rhs += term;
  }

  // Section configurations: the line splits off and a section-class curve on
  // the ruled surface absorbs one degree, pinned by the degenerated point.
  const int d1 = key.d - 1;
  const int ibeta = weighted_sum(key.beta);
  if (d1 >= 1 && ibeta <= d1) {
    for_each_multindex_of_weight_at_most(d1 - ibeta, [&](const MultIndex&
                                                             gamma) {
      MultIndex beta1 = key.beta + gamma;
      int delta1 = key.delta + length(gamma) - d1;
      if (delta1 < 0 || delta1 > d1 * (d1 - 1) / 2) return;
      int alpha_budget = d1 - weighted_sum(beta1);
      for_each_sub_multindex(key.alpha, [&](const MultIndex& alpha1) {
        if (weighted_sum(alpha1) != alpha_budget) return;
        CHKey sub{d1, delta1, alpha1, beta1};
        Int n1 = table.number(sub);
        if (n1 == 0) return;

        MultIndex alpha0 = key.alpha - alpha1;  // contacts the section takes
        const int b = weighted_sum(gamma);
        // The section meets S0 in 1 + b and Sinf in b points (F_1 numerology);
        // its table value is the fundamental word with coefficient 1.
        TensorSum section =
            fn_point_insertion(FnDegree{1, 1, b}, 0, to_contact_tuple(alpha0),
                               to_contact_tuple(gamma));
        Rat section_coeff = section.empty() ? Rat(0) : section.front().coeff;

        Rat term(power_product(alpha1) * power_product(beta1),
                 multi_factorial(alpha1));
        term *= n1;
        // Choices of the fixed contacts the section absorbs on each side...
        term *= multi_binomial(key.alpha, alpha0) * multi_binomial(beta1, gamma);
        // ...orderings of the moving contacts of the fibers...
        term *= multi_factorial(key.beta) * multi_factorial(alpha1);
        // ...fiber automorphism factors (alpha1-profile on S0 side, beta on
        // the Sinf side)...
        term *= tube_weight(alpha1) * tube_weight(key.beta);
        // ...and the section itself.
        term *= section_coeff;

        Rat expected(multi_factorial(key.beta) *
                     multi_binomial(key.alpha, alpha1) *
                     multi_binomial(beta1, key.beta) * power_product(gamma) *
                     n1);
        report.rows.push_back({"section", sub, term, expected, term == expected});
        report.rhs += term;
      });
    });
  }

  report.ok = (report.lhs == report.rhs);
  for (const auto& row : report.rows)
    if (!row.ok) {
      report.ok = false;
      if (!report.first_mismatch)
        report.first_mismatch = row.kind + " term at " + describe(row.sub) +
                                ": assembled " + rat_repr(row.assembled) +
                                " vs recursion " + rat_repr(row.recursion_term);
    }
  if (!report.ok && !report.first_mismatch)
    report.first_mismatch = "totals differ at " + describe(key) + ": lhs " +
                            rat_repr(report.lhs) + " vs rhs " +
                            rat_repr(report.rhs);
  return report;
}

std::vector<CHKey> admissible_ch_keys(int dmax) {
  std::vector<CHKey> keys;
  for (int d = 1; d <= dmax; ++d)
    for (int delta = 0; delta <= d * (d - 1) / 2; ++delta)
      for_each_multindex_of_weight_at_most(d, [&](const MultIndex& beta) {
        int rest = d - weighted_sum(beta);
        for_each_multindex_of_weight(rest, [&](const MultIndex& alpha) {
          if (d == 1 && beta.is_zero()) return;
          keys.push_back(CHKey{d, delta, alpha, beta});
        });
      });
  return keys;
}

}  // namespace gtcomb
