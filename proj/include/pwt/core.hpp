#pragma once

// Core model for the packing-while-traveling problem: a vehicle drives a
// fixed route of n+1 cities and picks up items along the way; carried weight
// reduces speed linearly, and the objective is total profit minus the rented
// travel time.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pwt {

struct Item {
  int city = 0;          ///< 1-based route position; n+1 is the terminal city (never carried)
  double profit = 0.0;   ///< positive; integral in benchmark files
  std::int64_t weight = 0; ///< positive integer
  int id = 0;            ///< original file index, preserved across sorting
};

/// A complete problem instance. Immutable after construction; all operations
/// in this library are pure functions of an Instance and safe to share across
/// threads.
struct Instance {
  std::string name;
  int n = 0;                      ///< non-terminal city count; the route has n+1 cities
  std::vector<double> distances;  ///< distances[i] is d_{i+1}, the leg from city i+1 to i+2
  std::vector<Item> items;        ///< sorted by (city, within-city file order)
  double v_min = 1.0;
  double v_max = 1.0;
  std::int64_t capacity = 0;      ///< W
  double rent = 0.0;              ///< R, cost per unit travel time

  /// Node coordinates when the instance came from (or is destined for) a
  /// coordinate-based file; distances stay the source of truth.
  std::optional<std::vector<std::pair<double, double>>> coords;
  std::string knapsack_type;      ///< family label carried through file headers

  /// Speed lost per unit of carried weight.
  double nu() const { return (v_max - v_min) / static_cast<double>(capacity); }

  std::size_t item_count() const { return items.size(); }

  /// Items heavier than the vehicle capacity may appear in files; they are
  /// kept but can never be packed.
  bool selectable(const Item& it) const { return it.weight <= capacity; }

  /// Sorts items into route order (stable within a city) and checks every
  /// model invariant. Throws std::invalid_argument on violation.
  void finalize();
  void validate() const;
};

struct Selection {
  std::vector<bool> bits;          ///< aligned with Instance::items
  std::int64_t total_weight = 0;   ///< cached sum of selected weights
};

/// One evaluated selection: profit, travel time, benefit B = P - R*T and the
/// gain over the empty-vehicle benefit, B' = B - B(empty).
struct Evaluation {
  double profit = 0.0;
  double time = 0.0;
  double benefit = 0.0;
  double gain = 0.0;
};

inline void Instance::finalize() {
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) { return a.city < b.city; });
  validate();
}

inline void Instance::validate() const {
  if (n < 1) throw std::invalid_argument("instance: route needs at least one leg");
  if (static_cast<int>(distances.size()) != n)
    throw std::invalid_argument("instance: distance count must equal n");
  for (double d : distances)
    if (!(d > 0.0)) throw std::invalid_argument("instance: distances must be positive");
  if (!(v_min > 0.0) || !(v_max >= v_min))
    throw std::invalid_argument("instance: speeds must satisfy 0 < v_min <= v_max");
  if (capacity < 1) throw std::invalid_argument("instance: capacity must be >= 1");
  if (!(rent > 0.0)) throw std::invalid_argument("instance: rent must be positive");
  int last_city = 0;
  for (const Item& it : items) {
    if (it.city < 1 || it.city > n + 1)
      throw std::invalid_argument("instance: item city out of range");
    if (it.city < last_city)
      throw std::invalid_argument("instance: items not in route order");
    last_city = it.city;
    if (!(it.profit > 0.0)) throw std::invalid_argument("instance: item profit must be positive");
    if (it.weight < 1) throw std::invalid_argument("instance: item weight must be >= 1");
  }
}

inline Selection empty_selection(const Instance& inst) {
  return Selection{std::vector<bool>(inst.item_count(), false), 0};
}

/// Builds a selection from raw bits, recomputing the cached weight.
inline Selection selection_from_bits(const Instance& inst, std::vector<bool> bits) {
  if (bits.size() != inst.item_count())
    throw std::invalid_argument("selection: bit count must equal item count");
  std::int64_t w = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) w += inst.items[i].weight;
  return Selection{std::move(bits), w};
}

inline bool feasible(const Instance& inst, const Selection& sel) {
  return sel.total_weight <= inst.capacity;
}

/// suffix[i] = sum of d_{i+1..n}: the distance still ahead after reaching
/// city i+1. One backward pass.
inline std::vector<double> suffix_distances(const Instance& inst) {
  std::vector<double> suffix(inst.n);
  double acc = 0.0;
  for (int i = inst.n - 1; i >= 0; --i) {
    acc += inst.distances[i];
    suffix[i] = acc;
  }
  return suffix;
}

/// Distance from `city` to the terminal city; 0 for the terminal itself.
inline double suffix_distance_of_city(const std::vector<double>& suffix, int city) {
  return city <= static_cast<int>(suffix.size()) ? suffix[city - 1] : 0.0;
}

/// Travel time per unit distance at carried weight w: 1/(v_max - nu*w).
/// Strictly increasing and convex in w whenever v_min < v_max.
inline double unit_travel_time(const Instance& inst, std::int64_t w) {
  if (w < 0 || w > inst.capacity)
    throw std::invalid_argument("unit_travel_time: weight outside [0, W]");
  return 1.0 / (inst.v_max - inst.nu() * static_cast<double>(w));
}

/// Benefit of the empty selection: the whole route at full speed, cost only.
inline double baseline_benefit(const Instance& inst) {
  double total = 0.0;
  for (double d : inst.distances) total += d;
  return -inst.rent * total / inst.v_max;
}

/// Total travel time for a feasible selection. Walks legs and the
/// city-sorted item list together, so it costs O(n + m).
inline double travel_time(const Instance& inst, const Selection& sel) {
  if (sel.bits.size() != inst.item_count())
    throw std::invalid_argument("travel_time: selection size mismatch");
  if (!feasible(inst, sel))
    throw std::invalid_argument("travel_time: selection exceeds capacity");
  const double nu = inst.nu();
  double time = 0.0;
  std::int64_t carried = 0;
  std::size_t j = 0;
  for (int leg = 1; leg <= inst.n; ++leg) {
    while (j < inst.items.size() && inst.items[j].city <= leg) {
      if (sel.bits[j]) carried += inst.items[j].weight;
      ++j;
    }
    time += inst.distances[leg - 1] / (inst.v_max - nu * static_cast<double>(carried));
  }
  return time;
}

/// Full evaluation of a feasible selection.
inline Evaluation benefit(const Instance& inst, const Selection& sel) {
  Evaluation ev;
  for (std::size_t i = 0; i < sel.bits.size(); ++i)
    if (sel.bits[i]) ev.profit += inst.items[i].profit;
  ev.time = travel_time(inst, sel);
  ev.benefit = ev.profit - inst.rent * ev.time;
  ev.gain = ev.benefit - baseline_benefit(inst);
  return ev;
}

struct SolveResult {
  Selection selection;
  Evaluation eval;
};

/// Exhaustive search over all feasible selections. Ties are broken toward
/// the lexicographically smallest decision vector. Only meant as an oracle
/// for small instances; throws when m exceeds `max_items`.
inline SolveResult brute_force(const Instance& inst, int max_items = 25) {
  inst.validate();
  const int m = static_cast<int>(inst.item_count());
  if (m > std::min(max_items, 62))
    throw std::invalid_argument("brute_force: too many items (" + std::to_string(m) +
                                " > " + std::to_string(max_items) + "); use the dynamic program");
  Selection best = empty_selection(inst);
  Evaluation best_ev = benefit(inst, best);
  // Mask bit m-1-i holds item i, so increasing mask order is lexicographic
  // order of decision vectors; strict improvement keeps the first maximum.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<bool> bits(m, false);
    std::int64_t w = 0;
    for (int i = 0; i < m; ++i) {
      if (mask >> (m - 1 - i) & 1) {
        bits[i] = true;
        w += inst.items[i].weight;
      }
    }
    if (w > inst.capacity) continue;
    Selection sel{std::move(bits), w};
    Evaluation ev = benefit(inst, sel);
    if (ev.benefit > best_ev.benefit) {
      best = std::move(sel);
      best_ev = ev;
    }
  }
  return SolveResult{std::move(best), best_ev};
}

}  // namespace pwt
