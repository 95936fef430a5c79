#pragma once

// Approximation scheme for the gain objective B'(x) = B(x) - B(empty).
// Same column recursion as the exact DP, but run in gain space and pruned by
// rounded dominance: gains are bucketed by floor(gain / r) with
// r = epsilon * L / m, and each bucket keeps only its lightest state. L is
// the best single-item gain, which sandwiches the optimum between L and m*L,
// so the per-step rounding error of at most r accumulates to at most
// epsilon * OPT over the m steps.

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "pwt/dp.hpp"

namespace pwt {

struct FptasConfig {
  double epsilon = 0.0;
  double best_single_gain = 0.0;  ///< L, the largest single-item gain
  double scale = 0.0;             ///< r = epsilon * L / m
  bool trivial_empty = false;     ///< no positive single-item gain: optimum is the empty set
};

/// Evaluates every item alone to find L and derives the rounding scale.
/// Items heavier than the capacity are skipped.
inline FptasConfig compute_scale(const Instance& inst, double epsilon) {
  FptasConfig cfg;
  cfg.epsilon = epsilon;
  const double base = baseline_benefit(inst);
  bool any = false;
  for (std::size_t i = 0; i < inst.item_count(); ++i) {
    if (!inst.selectable(inst.items[i])) continue;
    std::vector<bool> bits(inst.item_count(), false);
    bits[i] = true;
    const Evaluation ev = benefit(inst, selection_from_bits(inst, std::move(bits)));
    const double gain = ev.benefit - base;
    if (!any || gain > cfg.best_single_gain) cfg.best_single_gain = gain;
    any = true;
  }
  if (!any || cfg.best_single_gain <= 0.0) {
    cfg.trivial_empty = true;
    return cfg;
  }
  cfg.scale = epsilon * cfg.best_single_gain / static_cast<double>(inst.item_count());
  return cfg;
}

inline std::int64_t gain_bucket(double gain, double scale) {
  const double bucket = std::floor(gain / scale);
  if (bucket >= 9.0e18) return std::numeric_limits<std::int64_t>::max();
  if (bucket <= -9.0e18) return std::numeric_limits<std::int64_t>::min();
  return static_cast<std::int64_t>(bucket);
}

/// Admission test of the scheme: a candidate is rounded-dominated iff some
/// strictly lighter stored entry already reaches its gain bucket.
inline bool rounded_dominates(double candidate_benefit, std::int64_t candidate_weight,
                              const ParetoColumn& column, double scale) {
  const std::int64_t bucket = gain_bucket(candidate_benefit, scale);
  for (const ParetoEntry& e : column.entries) {
    if (e.weight >= candidate_weight) break;  // entries are weight-sorted
    if (gain_bucket(e.benefit, scale) >= bucket) return true;
  }
  return false;
}

struct FptasStats {
  std::size_t peak_column_entries = 0;
  std::size_t total_entries = 0;
  double max_stored_gain = 0.0;
};

struct FptasResult {
  Selection selection;
  Evaluation eval;
  FptasConfig config;
  FptasStats stats;
};

struct FptasValue {
  double benefit = 0.0;
  double gain = 0.0;
  FptasConfig config;
  FptasStats stats;
};

namespace detail {

/// Bucket-dominance prune over weight-sorted candidates: an entry survives
/// iff its gain bucket strictly exceeds every bucket at smaller weight, so
/// each bucket keeps exactly its lightest state. Equal weights keep the
/// larger gain (first one on ties).
inline ParetoColumn prune_rounded(const std::vector<ParetoEntry>& candidates, double scale,
                                  bool discard_negative) {
  ParetoColumn out;
  out.entries.reserve(candidates.size());
  std::int64_t max_bucket = 0;
  bool have_bucket = false;
  std::size_t i = 0;
  while (i < candidates.size()) {
    ParetoEntry best = candidates[i];
    std::size_t j = i + 1;
    while (j < candidates.size() && candidates[j].weight == best.weight) {
      if (candidates[j].benefit > best.benefit) best = candidates[j];
      ++j;
    }
    if (!(discard_negative && best.benefit < 0.0)) {
      const std::int64_t bucket = gain_bucket(best.benefit, scale);
      if (!have_bucket || bucket > max_bucket) {
        out.entries.push_back(best);
        max_bucket = bucket;
        have_bucket = true;
      }
    }
    i = j;
  }
  return out;
}

inline ParetoColumn fptas_extend(const ParetoColumn& column, const Item& item,
                                 double suffix_distance, const Instance& inst, double scale,
                                 bool discard_negative) {
  const double nu = inst.nu();
  const double rd = inst.rent * suffix_distance;
  std::vector<ParetoEntry> merged;
  merged.reserve(column.entries.size() * 2);
  std::size_t skip = 0, take = 0;
  auto take_weight = [&](std::size_t idx) { return column.entries[idx].weight + item.weight; };
  auto emit_skip = [&](std::size_t idx) {
    ParetoEntry e = column.entries[idx];
    e.prev = static_cast<std::int32_t>(idx);
    e.took = false;
    merged.push_back(e);
  };
  auto emit_take = [&](std::size_t idx) {
    const ParetoEntry& src = column.entries[idx];
    const double t_before = 1.0 / (inst.v_max - nu * static_cast<double>(src.weight));
    const double t_after = 1.0 / (inst.v_max - nu * static_cast<double>(src.weight + item.weight));
    merged.push_back(ParetoEntry{src.weight + item.weight,
                                 src.benefit + item.profit - rd * (t_after - t_before),
                                 static_cast<std::int32_t>(idx), true});
  };
  while (skip < column.entries.size() || take < column.entries.size()) {
    while (take < column.entries.size() && take_weight(take) > inst.capacity) ++take;
    if (take == column.entries.size()) {
      for (; skip < column.entries.size(); ++skip) emit_skip(skip);
      break;
    }
    if (skip < column.entries.size() &&
        column.entries[skip].weight <= take_weight(take)) {
      emit_skip(skip);
      ++skip;
    } else {
      emit_take(take);
      ++take;
    }
  }
  return prune_rounded(merged, scale, discard_negative);
}

inline ParetoColumn fptas_run(const Instance& inst, const FptasConfig& cfg, FptasStats& stats,
                              bool discard_negative, std::vector<ParetoColumn>* history) {
  const std::vector<double> suffix = suffix_distances(inst);
  ParetoColumn column;
  column.entries.push_back(ParetoEntry{0, 0.0, -1, false});
  stats.peak_column_entries = 1;
  stats.total_entries = 1;
  if (history) history->push_back(column);
  for (const Item& item : inst.items) {
    column = fptas_extend(column, item, suffix_distance_of_city(suffix, item.city), inst,
                          cfg.scale, discard_negative);
    stats.peak_column_entries = std::max(stats.peak_column_entries, column.entries.size());
    stats.total_entries += column.entries.size();
    stats.max_stored_gain = std::max(stats.max_stored_gain, column.entries.back().benefit);
    if (history) history->push_back(column);
  }
  return column;
}

}  // namespace detail

struct FptasOptions {
  double epsilon = 0.1;
  /// Test hook: drop candidates with negative gain before the bucket prune.
  /// The weight-0 gain-0 root entry already rounded-dominates every such
  /// candidate, so results are identical either way.
  bool discard_negative_candidates = false;
};

inline void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || epsilon > 1.0)
    throw std::invalid_argument("eps must be in (0,1]");
}

inline FptasValue fptas_solve_value(const Instance& inst, FptasOptions opt) {
  check_epsilon(opt.epsilon);
  inst.validate();
  FptasValue out;
  out.config = compute_scale(inst, opt.epsilon);
  if (out.config.trivial_empty) {
    out.gain = 0.0;
    out.benefit = baseline_benefit(inst);
    return out;
  }
  ParetoColumn last =
      detail::fptas_run(inst, out.config, out.stats, opt.discard_negative_candidates, nullptr);
  out.gain = last.entries.back().benefit;
  out.benefit = out.gain + baseline_benefit(inst);
  return out;
}

inline FptasValue fptas_solve_value(const Instance& inst, double epsilon) {
  return fptas_solve_value(inst, FptasOptions{epsilon, false});
}

/// Returns a feasible selection with gain at least (1 - epsilon) times the
/// optimal gain; the empty selection when no single item has positive gain.
inline FptasResult fptas_solve(const Instance& inst, FptasOptions opt) {
  check_epsilon(opt.epsilon);
  inst.validate();
  FptasResult out;
  out.config = compute_scale(inst, opt.epsilon);
  if (out.config.trivial_empty) {
    out.selection = empty_selection(inst);
    out.eval = benefit(inst, out.selection);
    return out;
  }
  std::vector<ParetoColumn> columns;
  columns.reserve(inst.item_count() + 1);
  detail::fptas_run(inst, out.config, out.stats, opt.discard_negative_candidates, &columns);
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

inline FptasResult fptas_solve(const Instance& inst, double epsilon) {
  return fptas_solve(inst, FptasOptions{epsilon, false});
}

}  // namespace pwt
