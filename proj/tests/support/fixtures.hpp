#pragma once

// Shared fixtures: the two hand-evaluated reference instances used across
// the suites, plus the seeded random families behind the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "pwt/core.hpp"
#include "pwt/generator.hpp"
#include "pwt/hardness.hpp"

namespace pwt_test {

/// One leg of length 1 at speeds [1,2], a single item (p=10, w=10) filling
/// the whole capacity. Loaded leg takes time 1, empty 0.5.
inline pwt::Instance make_e1() {
  pwt::Instance inst;
  inst.name = "e1";
  inst.n = 1;
  inst.distances = {1.0};
  inst.items = {pwt::Item{1, 10.0, 10, 1}};
  inst.v_min = 1.0;
  inst.v_max = 2.0;
  inst.capacity = 10;
  inst.rent = 1.0;
  inst.finalize();
  return inst;
}

/// Two legs of length 1, items a (p=2, w=1, city 1) and b (p=3, w=2, city 2),
/// W=3. Best packing takes both: B = 3.4, B' = 4.4.
inline pwt::Instance make_e2() {
  pwt::Instance inst;
  inst.name = "e2";
  inst.n = 2;
  inst.distances = {1.0, 1.0};
  inst.items = {pwt::Item{1, 2.0, 1, 1}, pwt::Item{2, 3.0, 2, 2}};
  inst.v_min = 1.0;
  inst.v_max = 2.0;
  inst.capacity = 3;
  inst.rent = 1.0;
  inst.finalize();
  return inst;
}

/// Seeded oracle-scale instance: m <= 15, W in [5, 40], all four families.
/// Two thirds use small value spans so the knapsack genuinely packs; one
/// third uses the full small-range span [1, 10^3], where most items exceed
/// the capacity and stay unselectable.
inline pwt::Instance random_small_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  pwt::GeneratorSpec spec;
  spec.family = static_cast<pwt::Family>(seed % 4);
  spec.cities = 2 + static_cast<int>(rng() % 5);
  spec.item_count = seed % 97 == 0 ? 0 : 1 + static_cast<int>(rng() % 15);
  const int span_flavor = static_cast<int>(rng() % 3);
  spec.range_hi = span_flavor == 0 ? 8 : (span_flavor == 1 ? 24 : 1000);
  spec.capacity_class = 1 + static_cast<int>(rng() % 10);
  spec.capacity_override = 5 + static_cast<std::int64_t>(rng() % 36);
  spec.seed = seed;
  spec.v_max = 1.0;
  const int speed_flavor = static_cast<int>(rng() % 3);
  spec.v_min = speed_flavor == 0 ? 0.1 : (speed_flavor == 1 ? 0.5 : 1.0);
  pwt::Instance inst = pwt::generate(spec);
  const double rent_mult[3] = {0.2, 1.0, 5.0};
  inst.rent *= rent_mult[rng() % 3];
  return inst;
}

/// Seeded subset-sum instances with m <= 12, values <= 50; half the targets
/// are sums of a real subset (YES), half are arbitrary.
inline pwt::SspInstance random_ssp(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x2545F4914F6CDD1Dull + 1);
  const int m = 1 + static_cast<int>(rng() % 12);
  std::vector<std::int64_t> values(m);
  std::int64_t total = 0;
  for (auto& v : values) {
    v = 1 + static_cast<std::int64_t>(rng() % 50);
    total += v;
  }
  std::int64_t target = 0;
  if (rng() % 2 == 0) {
    for (std::int64_t v : values)
      if (rng() % 2 == 0) target += v;
    if (target == 0) target = values[0];
  } else {
    target = 1 + static_cast<std::int64_t>(rng() % total);
  }
  return pwt::SspInstance{values, target};
}

/// Random feasible selection: shuffled greedy fill.
inline pwt::Selection random_feasible_selection(const pwt::Instance& inst, std::mt19937_64& rng) {
  std::vector<std::size_t> order(inst.item_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> bits(inst.item_count(), false);
  std::int64_t w = 0;
  for (std::size_t i : order) {
    if (rng() % 2 == 0) continue;
    if (w + inst.items[i].weight > inst.capacity) continue;
    bits[i] = true;
    w += inst.items[i].weight;
  }
  return pwt::selection_from_bits(inst, bits);
}

}  // namespace pwt_test
