#pragma once

// Seeded instance generation in the style of the travelling-thief benchmark
// set: a random route of coordinate nodes plus one of four knapsack families
// with increasing profit/weight correlation. Determinism contract: the
// stream is std::mt19937_64 seeded with `seed`, integers are drawn as
// lo + next() % span, and the draw order is coordinates first, then per-item
// weight (plus the offset pick for m-s-corr), then profits. Identical specs
// produce byte-identical files on every platform.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "pwt/core.hpp"

namespace pwt {

enum class Family {
  uncorrelated,
  uncorrelated_similar_weights,
  bounded_strongly_correlated,
  multiple_strongly_correlated,
};

inline const char* family_label(Family f) {
  switch (f) {
    case Family::uncorrelated: return "uncorr";
    case Family::uncorrelated_similar_weights: return "uncorr-s-w";
    case Family::bounded_strongly_correlated: return "b-s-corr";
    case Family::multiple_strongly_correlated: return "m-s-corr";
  }
  return "?";
}

inline std::optional<Family> family_from_label(const std::string& s) {
  if (s == "uncorr" || s == "uncorrelated") return Family::uncorrelated;
  if (s == "uncorr-s-w" || s == "uncorrelated-similar-weights")
    return Family::uncorrelated_similar_weights;
  if (s == "b-s-corr" || s == "bounded-strongly-correlated")
    return Family::bounded_strongly_correlated;
  if (s == "m-s-corr" || s == "multiple-strongly-correlated")
    return Family::multiple_strongly_correlated;
  return std::nullopt;
}

enum class Assignment { round_robin, profit_sorted };

struct GeneratorSpec {
  Family family = Family::uncorrelated;
  std::int64_t range_lo = 1;
  std::int64_t range_hi = 1000;   ///< profits and weights drawn from [lo, hi]
  int item_count = 0;             ///< m
  int capacity_class = 5;         ///< 1..10; W = ceil(class * total_weight / 11)
  Assignment assignment = Assignment::round_robin;
  int per_city = 1;               ///< k for profit-sorted assignment
  int cities = 101;               ///< route length n+1
  std::uint64_t seed = 0;
  double v_min = 0.1;
  double v_max = 1.0;
  /// Rent; when unset, R = v_max * total_profit / (20 * total_distance),
  /// pricing the empty route at a twentieth of the total profit (roughly the
  /// balance of the published benchmark set).
  std::optional<double> rent;
  std::optional<std::int64_t> capacity_override;  ///< test/benchmark hook
};

namespace detail {

inline std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace detail

inline Instance generate(const GeneratorSpec& spec) {
  if (spec.cities < 2) throw std::invalid_argument("generate: need at least 2 cities");
  if (spec.item_count < 0) throw std::invalid_argument("generate: negative item count");
  if (spec.range_lo < 1 || spec.range_hi < spec.range_lo)
    throw std::invalid_argument("generate: invalid value range");
  if (spec.capacity_class < 1 || spec.capacity_class > 10)
    throw std::invalid_argument("generate: capacity class must be in 1..10");
  const int n = spec.cities - 1;
  if (spec.assignment == Assignment::profit_sorted) {
    if (spec.per_city < 1) throw std::invalid_argument("generate: per-city count must be >= 1");
    if (static_cast<std::int64_t>(spec.item_count) >
        static_cast<std::int64_t>(n) * spec.per_city)
      throw std::invalid_argument(
          "generate: profit-sorted assignment cannot place " + std::to_string(spec.item_count) +
          " items on " + std::to_string(n) + " cities at " + std::to_string(spec.per_city) +
          " per city");
  }

  std::mt19937_64 rng(spec.seed);
  Instance inst;
  inst.knapsack_type = family_label(spec.family);
  inst.name = std::string(family_label(spec.family)) +
              (spec.capacity_class < 10 ? "_0" : "_") + std::to_string(spec.capacity_class) +
              "_m" + std::to_string(spec.item_count) + "_s" + std::to_string(spec.seed);
  inst.n = n;
  inst.v_min = spec.v_min;
  inst.v_max = spec.v_max;

  // Route: integer coordinates on a 1001 x 1001 grid, re-drawn if a node
  // would coincide with its predecessor (CEIL_2D would give a zero leg).
  std::vector<std::pair<double, double>> coords(spec.cities);
  for (int i = 0; i < spec.cities; ++i) {
    do {
      coords[i] = {static_cast<double>(detail::draw_int(rng, 0, 1000)),
                   static_cast<double>(detail::draw_int(rng, 0, 1000))};
    } while (i > 0 && coords[i] == coords[i - 1]);
  }
  inst.distances.resize(n);
  for (int i = 0; i < n; ++i) {
    const double dx = coords[i].first - coords[i + 1].first;
    const double dy = coords[i].second - coords[i + 1].second;
    inst.distances[i] = std::ceil(std::sqrt(dx * dx + dy * dy));
  }
  inst.coords = std::move(coords);

  const std::int64_t span = spec.range_hi - spec.range_lo;
  const std::int64_t step = std::max<std::int64_t>(1, span / 10);
  std::vector<Item> items(spec.item_count);
  for (int i = 0; i < spec.item_count; ++i) {
    Item& it = items[i];
    it.id = i + 1;
    switch (spec.family) {
      case Family::uncorrelated:
        it.weight = detail::draw_int(rng, spec.range_lo, spec.range_hi);
        it.profit = static_cast<double>(detail::draw_int(rng, spec.range_lo, spec.range_hi));
        break;
      case Family::uncorrelated_similar_weights:
        // Narrow band at the top tenth of the range.
        it.weight = detail::draw_int(rng, spec.range_lo + span - span / 10, spec.range_hi);
        it.profit = static_cast<double>(detail::draw_int(rng, spec.range_lo, spec.range_hi));
        break;
      case Family::bounded_strongly_correlated: {
        it.weight = detail::draw_int(rng, spec.range_lo, spec.range_hi);
        it.profit = static_cast<double>(
            std::clamp(it.weight + step, spec.range_lo, spec.range_hi));
        break;
      }
      case Family::multiple_strongly_correlated: {
        it.weight = detail::draw_int(rng, spec.range_lo, spec.range_hi);
        const std::int64_t offset = step * detail::draw_int(rng, 1, 3);
        it.profit = static_cast<double>(it.weight + offset);
        break;
      }
    }
  }

  // Items live on cities 2..n+1; city 1 is the start.
  if (spec.assignment == Assignment::round_robin) {
    for (int i = 0; i < spec.item_count; ++i) items[i].city = 2 + i % n;
  } else {
    std::vector<int> order(items.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return items[a].profit > items[b].profit;
    });
    for (std::size_t rank = 0; rank < order.size(); ++rank)
      items[order[rank]].city = 2 + static_cast<int>(rank) / spec.per_city;
  }
  inst.items = std::move(items);

  std::int64_t total_weight = 0;
  double total_profit = 0.0;
  for (const Item& it : inst.items) {
    total_weight += it.weight;
    total_profit += it.profit;
  }
  if (spec.capacity_override) {
    inst.capacity = *spec.capacity_override;
  } else {
    inst.capacity = (static_cast<std::int64_t>(spec.capacity_class) * total_weight + 10) / 11;
    if (inst.capacity < 1) inst.capacity = 1;
  }

  if (spec.rent) {
    inst.rent = *spec.rent;
  } else {
    double total_distance = 0.0;
    for (double d : inst.distances) total_distance += d;
    inst.rent = total_profit > 0.0 ? spec.v_max * total_profit / (20.0 * total_distance) : 1.0;
  }

  inst.finalize();
  return inst;
}

}  // namespace pwt
