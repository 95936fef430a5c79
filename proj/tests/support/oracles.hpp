#pragma once

// Independent oracles for the test and acceptance suites. These deliberately
// avoid the sparse-column machinery under test: the dense DP keeps the full
// weight-indexed table, and the subset-sum decider enumerates half-sets.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "pwt/core.hpp"
#include "pwt/hardness.hpp"

namespace pwt_test {

struct DenseDp {
  std::vector<double> beta;  ///< beta[k] = best benefit at weight exactly k, -inf if unreachable
  double best = 0.0;
};

/// Classic dense table over all weights 0..W. Uses the same marginal-cost
/// expression as the sparse solver so results are comparable bit for bit.
inline DenseDp dense_dp(const pwt::Instance& inst) {
  const auto suffix = pwt::suffix_distances(inst);
  const double neg_inf = -std::numeric_limits<double>::infinity();
  const double nu = inst.nu();
  DenseDp out;
  out.beta.assign(static_cast<std::size_t>(inst.capacity) + 1, neg_inf);
  out.beta[0] = pwt::baseline_benefit(inst);
  for (const pwt::Item& item : inst.items) {
    const double rd = inst.rent * pwt::suffix_distance_of_city(suffix, item.city);
    for (std::int64_t k = inst.capacity; k >= item.weight; --k) {
      const double from = out.beta[static_cast<std::size_t>(k - item.weight)];
      if (from == neg_inf) continue;
      const double t_before = 1.0 / (inst.v_max - nu * static_cast<double>(k - item.weight));
      const double t_after = 1.0 / (inst.v_max - nu * static_cast<double>(k));
      const double cand = from + item.profit - rd * (t_after - t_before);
      if (cand > out.beta[static_cast<std::size_t>(k)]) out.beta[static_cast<std::size_t>(k)] = cand;
    }
  }
  out.best = neg_inf;
  for (double b : out.beta) out.best = std::max(out.best, b);
  return out;
}

/// Subset-sum decision by meet-in-the-middle.
inline bool ssp_reachable(const std::vector<std::int64_t>& values, std::int64_t target) {
  auto sums_of = [](const std::int64_t* first, const std::int64_t* last) {
    std::vector<std::int64_t> out{0};
    for (const std::int64_t* it = first; it != last; ++it) {
      const std::size_t size = out.size();
      out.reserve(size * 2);
      for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] + *it);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const std::size_t half = values.size() / 2;
  const auto left = sums_of(values.data(), values.data() + half);
  const auto right = sums_of(values.data() + half, values.data() + values.size());
  for (std::int64_t s : left)
    if (std::binary_search(right.begin(), right.end(), target - s)) return true;
  return false;
}

/// Best benefit among subsets of the first `prefix` items only (exhaustive).
inline double brute_prefix_best(const pwt::Instance& inst, std::size_t prefix) {
  double best = -std::numeric_limits<double>::infinity();
  const std::uint64_t limit = std::uint64_t{1} << prefix;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<bool> bits(inst.item_count(), false);
    std::int64_t w = 0;
    for (std::size_t i = 0; i < prefix; ++i) {
      if (mask >> i & 1) {
        bits[i] = true;
        w += inst.items[i].weight;
      }
    }
    if (w > inst.capacity) continue;
    best = std::max(best, pwt::benefit(inst, pwt::selection_from_bits(inst, bits)).benefit);
  }
  return best;
}

/// Best benefit per exact total weight over all feasible subsets.
inline std::vector<double> brute_per_weight_best(const pwt::Instance& inst) {
  const double neg_inf = -std::numeric_limits<double>::infinity();
  std::vector<double> best(static_cast<std::size_t>(inst.capacity) + 1, neg_inf);
  const std::size_t m = inst.item_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<bool> bits(m, false);
    std::int64_t w = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        bits[i] = true;
        w += inst.items[i].weight;
      }
    }
    if (w > inst.capacity) continue;
    const double b = pwt::benefit(inst, pwt::selection_from_bits(inst, bits)).benefit;
    best[static_cast<std::size_t>(w)] = std::max(best[static_cast<std::size_t>(w)], b);
  }
  return best;
}

}  // namespace pwt_test
