#pragma once

// Exact dynamic program over the route order of the items. One column per
// processed item holds the Pareto frontier of (weight, benefit) states; a
// state survives only if no lighter state has at least its benefit, so
// entries are strictly increasing in both weight and benefit.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pwt/core.hpp"

namespace pwt {

struct ParetoEntry {
  std::int64_t weight = 0;
  double benefit = 0.0;
  std::int32_t prev = -1;  ///< index of the source entry in the previous column
  bool took = false;       ///< whether this column's item was packed to reach the entry
};

/// One DP column: entries sorted by strictly increasing weight and strictly
/// increasing benefit. Unreachable weights are simply absent.
struct ParetoColumn {
  std::vector<ParetoEntry> entries;
};

/// Dominance prune over weight-sorted candidates (equal weights allowed on
/// input). Keeps an entry iff its benefit strictly exceeds everything at
/// smaller or equal weight; among equal-weight/equal-benefit duplicates the
/// earlier one wins, which preserves the earlier-created selection.
inline ParetoColumn prune_dominated(const std::vector<ParetoEntry>& candidates) {
  ParetoColumn out;
  out.entries.reserve(candidates.size());
  std::size_t i = 0;
  while (i < candidates.size()) {
    ParetoEntry best = candidates[i];
    std::size_t j = i + 1;
    while (j < candidates.size() && candidates[j].weight == best.weight) {
      if (candidates[j].benefit > best.benefit) best = candidates[j];
      ++j;
    }
    if (out.entries.empty() || best.benefit > out.entries.back().benefit)
      out.entries.push_back(best);
    i = j;
  }
  return out;
}

/// One DP step: merge the skip branch (the column as-is) with the take
/// branch (every entry shifted by the item's weight and its marginal cost
/// over the remaining distance), drop shifted entries beyond capacity, and
/// prune dominated states. `suffix_distance` is the distance from the item's
/// city to the end of the route.
inline ParetoColumn extend_column(const ParetoColumn& column, const Item& item,
                                  double suffix_distance, const Instance& inst) {
  const double nu = inst.nu();
  const double rd = inst.rent * suffix_distance;
  std::vector<ParetoEntry> merged;
  merged.reserve(column.entries.size() * 2);
  std::size_t skip = 0, take = 0;
  // Take candidates inherit the skip stream's weight order; on weight ties
  // the skip branch is emitted first so the prune keeps it on benefit ties.
  auto take_weight = [&](std::size_t idx) { return column.entries[idx].weight + item.weight; };
  auto emit_take = [&](std::size_t idx) {
    const ParetoEntry& src = column.entries[idx];
    const double t_before = 1.0 / (inst.v_max - nu * static_cast<double>(src.weight));
    const double t_after = 1.0 / (inst.v_max - nu * static_cast<double>(src.weight + item.weight));
    merged.push_back(ParetoEntry{src.weight + item.weight,
                                 src.benefit + item.profit - rd * (t_after - t_before),
                                 static_cast<std::int32_t>(idx), true});
  };
  while (skip < column.entries.size() || take < column.entries.size()) {
    // Skip over take candidates that would exceed capacity.
    while (take < column.entries.size() && take_weight(take) > inst.capacity) ++take;
    if (take == column.entries.size()) {
      for (; skip < column.entries.size(); ++skip) {
        ParetoEntry e = column.entries[skip];
        e.prev = static_cast<std::int32_t>(skip);
        e.took = false;
        merged.push_back(e);
      }
      break;
    }
    if (skip < column.entries.size() &&
        column.entries[skip].weight <= take_weight(take)) {
      ParetoEntry e = column.entries[skip];
      e.prev = static_cast<std::int32_t>(skip);
      e.took = false;
      merged.push_back(e);
      ++skip;
    } else {
      emit_take(take);
      ++take;
    }
  }
  return prune_dominated(merged);
}

struct DpStats {
  std::size_t peak_column_entries = 0;  ///< largest single column
  std::size_t total_entries = 0;        ///< entries created over the whole run
};

struct DpResult {
  Selection selection;
  Evaluation eval;
  DpStats stats;
};

struct DpValue {
  double benefit = 0.0;
  double gain = 0.0;
  DpStats stats;
};

namespace detail {

/// Runs the column recursion. When `history` is non-null every column is
/// retained for backtracking; otherwise only the running column lives.
inline ParetoColumn dp_run(const Instance& inst, DpStats& stats,
                           std::vector<ParetoColumn>* history) {
  const std::vector<double> suffix = suffix_distances(inst);
  ParetoColumn column;
  column.entries.push_back(ParetoEntry{0, baseline_benefit(inst), -1, false});
  stats.peak_column_entries = 1;
  stats.total_entries = 1;
  if (history) history->push_back(column);
  for (const Item& item : inst.items) {
    column = extend_column(column, item, suffix_distance_of_city(suffix, item.city), inst);
    stats.peak_column_entries = std::max(stats.peak_column_entries, column.entries.size());
    stats.total_entries += column.entries.size();
    if (history) history->push_back(column);
  }
  return column;
}

}  // namespace detail

/// Optimal benefit only; keeps two live columns, so memory stays at the
/// frontier size. This is the benchmark path.
inline DpValue dp_solve_value(const Instance& inst) {
  inst.validate();
  DpValue out;
  ParetoColumn last = detail::dp_run(inst, out.stats, nullptr);
  // The frontier rises in benefit with weight, so the optimum is the tail.
  out.benefit = last.entries.back().benefit;
  out.gain = out.benefit - baseline_benefit(inst);
  return out;
}

/// Exact optimum with the selection reconstructed through the per-entry
/// backpointers. Column history is retained, so memory is proportional to
/// the total number of surviving entries.
inline DpResult dp_solve(const Instance& inst) {
  inst.validate();
  DpResult out;
  std::vector<ParetoColumn> columns;
  columns.reserve(inst.item_count() + 1);
  detail::dp_run(inst, out.stats, &columns);
  std::vector<bool> bits(inst.item_count(), false);
  std::int32_t idx = static_cast<std::int32_t>(columns.back().entries.size()) - 1;
  for (std::size_t col = columns.size() - 1; col >= 1; --col) {
    const ParetoEntry& e = columns[col].entries[idx];
    if (e.took) bits[col - 1] = true;
    idx = e.prev;
  }
  out.selection = selection_from_bits(inst, std::move(bits));
  out.eval = benefit(inst, out.selection);
  return out;
}

}  // namespace pwt
