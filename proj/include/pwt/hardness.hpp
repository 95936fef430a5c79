#pragma once

// Subset-sum reductions to two-city packing instances. Both constructions
// make the benefit of a selection of weight w equal to
//
//   f(w) = w - Q^2 / (2Q - w)
//
// for a target Q: a concave curve with its unique maximum of 0 at w = Q, so
// a non-negative benefit is reachable exactly when some subset sums to Q.
//
// The capacitated variant uses the target directly (W = Q, speeds 1 and 2,
// rent Q). The uncapacitated variant must leave the capacity at the total
// item weight; a curve with an interior maximum at Q then needs
// v_max/v_min = 2Q/W with W < 2Q, which a raw subset-sum instance does not
// provide. The instance is therefore built from a padded subset-sum problem:
// one forcing element D = sum(s) + 1 is added and the target becomes
// Q' = Q + D. Any subset reaching Q' must contain D (Q' exceeds the original
// total), and the remainder must sum to Q, so the answer is preserved while
// W = 2*sum(s) + 1 < 2Q' as required.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pwt/core.hpp"

namespace pwt {

struct SspInstance {
  std::vector<std::int64_t> values;  ///< s_1..s_m, positive integers
  std::int64_t target = 0;           ///< Q

  void validate() const {
    if (values.empty()) throw std::invalid_argument("ssp: needs at least one value");
    std::int64_t total = 0;
    for (std::int64_t s : values) {
      if (s < 1) throw std::invalid_argument("ssp: values must be positive integers");
      total += s;
    }
    if (target < 1) throw std::invalid_argument("ssp: target must be positive");
    if (target > total) throw std::invalid_argument("ssp: target exceeds total (trivially NO)");
  }
};

enum class CurveKind { capacitated, unconstrained };

/// Parameters of the benefit curve of a reduced instance: the capacity it
/// sweeps over and the weight where the curve peaks at 0.
struct CurveParams {
  std::int64_t capacity = 0;
  std::int64_t target = 0;
};

inline CurveParams curve_params(CurveKind kind, const SspInstance& ssp) {
  ssp.validate();
  if (kind == CurveKind::capacitated) return CurveParams{ssp.target, ssp.target};
  const std::int64_t total = std::accumulate(ssp.values.begin(), ssp.values.end(), std::int64_t{0});
  return CurveParams{2 * total + 1, ssp.target + total + 1};
}

/// f(w) = w - Q^2/(2Q - w) at real w in [0, capacity].
inline double curve_value(CurveKind kind, const CurveParams& params, double w) {
  if (params.target < 1 || params.capacity < 1)
    throw std::invalid_argument("curve_value: invalid parameters");
  if (kind == CurveKind::capacitated && params.capacity != params.target)
    throw std::invalid_argument("curve_value: capacitated curve requires W = Q");
  if (params.capacity >= 2 * params.target)
    throw std::invalid_argument("curve_value: curve requires W < 2Q");
  if (w < 0.0 || w > static_cast<double>(params.capacity))
    throw std::invalid_argument("curve_value: w outside [0, W]");
  const double q = static_cast<double>(params.target);
  return w - q * q / (2.0 * q - w);
}

namespace detail {

inline Instance two_city_instance(const std::vector<std::int64_t>& weights, std::string name) {
  Instance inst;
  inst.name = std::move(name);
  inst.n = 1;
  inst.distances = {1.0};
  int id = 1;
  for (std::int64_t s : weights)
    inst.items.push_back(Item{1, static_cast<double>(s), s, id++});
  return inst;
}

}  // namespace detail

/// Capacity-bound reduction: W = Q, speeds [1, 2], rent Q. A subset of
/// weight w (only w <= Q fits) has benefit f(w).
inline Instance reduce_capacitated(const SspInstance& ssp) {
  ssp.validate();
  Instance inst = detail::two_city_instance(
      ssp.values, "ssp_cap_q" + std::to_string(ssp.target));
  inst.v_min = 1.0;
  inst.v_max = 2.0;
  inst.capacity = ssp.target;
  inst.rent = static_cast<double>(ssp.target);
  inst.finalize();
  return inst;
}

/// Capacity-free reduction via the padded problem described above:
/// W = 2*sum(s)+1 holds every item, speeds (2Q'-W)/W and 2Q'/W, rent Q'^2/W.
inline Instance reduce_unconstrained(const SspInstance& ssp) {
  ssp.validate();
  const std::int64_t total = std::accumulate(ssp.values.begin(), ssp.values.end(), std::int64_t{0});
  const std::int64_t forcing = total + 1;
  const std::int64_t padded_target = ssp.target + forcing;
  std::vector<std::int64_t> weights = ssp.values;
  weights.push_back(forcing);
  Instance inst = detail::two_city_instance(
      weights, "ssp_unc_q" + std::to_string(ssp.target));
  const double w_cap = static_cast<double>(2 * total + 1);
  const double q = static_cast<double>(padded_target);
  inst.capacity = 2 * total + 1;
  inst.v_max = 2.0 * q / w_cap;
  inst.v_min = (2.0 * q - w_cap) / w_cap;
  inst.rent = q * q / w_cap;
  inst.finalize();
  return inst;
}

}  // namespace pwt
