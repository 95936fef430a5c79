#pragma once

// Benchmark harness: runs (instance, algorithm) cells, times the solver call
// only (parsing excluded), and emits CSV rows. Approximation rates are
// reported against the exact DP of the same instance, both for the benefit B
// and for the gain B' -- the scheme's guarantee only lives in gain space, so
// the two columns can differ.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pwt/core.hpp"
#include "pwt/dp.hpp"
#include "pwt/fptas.hpp"

namespace pwt {

enum class Algo { dp, fptas, brute };

struct AlgoSpec {
  Algo algo = Algo::dp;
  double eps = 0.0;  // fptas only

  std::string tag() const {
    switch (algo) {
      case Algo::dp: return "dp";
      case Algo::fptas: return "fptas";
      case Algo::brute: return "brute";
    }
    return "?";
  }
};

struct RunRecord {
  std::string instance;
  int item_count = 0;
  std::string algo;
  std::optional<double> eps;
  double benefit = 0.0;
  double gain = 0.0;
  std::optional<double> ar_benefit;  ///< 100 * B / OPT_B when a DP reference exists
  std::optional<double> ar_gain;     ///< 100 * B' / OPT_B'
  double seconds = 0.0;
  std::size_t peak_entries = 0;      ///< largest DP column held during the run
};

inline const char* run_record_csv_header() {
  return "instance,m,algo,eps,B,Bprime,AR_B,AR_Bprime,seconds,peak_entries";
}

namespace detail {

inline std::string csv_number(double v, const char* format = "%.10f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

}  // namespace detail

inline std::string to_csv_row(const RunRecord& r) {
  std::string out = r.instance;
  out += ',';
  out += std::to_string(r.item_count);
  out += ',';
  out += r.algo;
  out += ',';
  if (r.eps) out += detail::csv_number(*r.eps, "%g");
  out += ',';
  out += detail::csv_number(r.benefit);
  out += ',';
  out += detail::csv_number(r.gain);
  out += ',';
  if (r.ar_benefit) out += detail::csv_number(*r.ar_benefit);
  out += ',';
  if (r.ar_gain) out += detail::csv_number(*r.ar_gain);
  out += ',';
  out += detail::csv_number(r.seconds, "%.6f");
  out += ',';
  out += std::to_string(r.peak_entries);
  return out;
}

/// Runs one cell in value-only mode (solver time only, no reconstruction).
inline RunRecord run_algorithm(const Instance& inst, const AlgoSpec& spec,
                               int brute_limit = 25) {
  RunRecord rec;
  rec.instance = inst.name;
  rec.item_count = static_cast<int>(inst.item_count());
  rec.algo = spec.tag();
  const auto start = std::chrono::steady_clock::now();
  switch (spec.algo) {
    case Algo::dp: {
      const DpValue v = dp_solve_value(inst);
      rec.benefit = v.benefit;
      rec.gain = v.gain;
      rec.peak_entries = v.stats.peak_column_entries;
      break;
    }
    case Algo::fptas: {
      rec.eps = spec.eps;
      const FptasValue v = fptas_solve_value(inst, spec.eps);
      rec.benefit = v.benefit;
      rec.gain = v.gain;
      rec.peak_entries = v.stats.peak_column_entries;
      break;
    }
    case Algo::brute: {
      const SolveResult r = brute_force(inst, brute_limit);
      rec.benefit = r.eval.benefit;
      rec.gain = r.eval.gain;
      break;
    }
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

struct Manifest {
  std::vector<std::string> instances;  ///< file paths
  std::vector<AlgoSpec> algorithms;
};

/// Manifest format: {"instances": ["a.pwt", ...],
///                   "algorithms": [{"algo": "dp"}, {"algo": "fptas", "eps": 0.1}]}
inline Manifest parse_manifest(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("manifest: ") + e.what());
  }
  Manifest man;
  if (!j.is_object() || !j.contains("instances") || !j.contains("algorithms"))
    throw std::runtime_error("manifest: expected object with 'instances' and 'algorithms'");
  for (const auto& v : j.at("instances")) {
    if (!v.is_string()) throw std::runtime_error("manifest: instance entries must be paths");
    man.instances.push_back(v.get<std::string>());
  }
  for (const auto& a : j.at("algorithms")) {
    if (!a.is_object() || !a.contains("algo"))
      throw std::runtime_error("manifest: algorithm entries need an 'algo' field");
    const std::string name = a.at("algo").get<std::string>();
    AlgoSpec spec;
    if (name == "dp") {
      spec.algo = Algo::dp;
    } else if (name == "brute") {
      spec.algo = Algo::brute;
    } else if (name == "fptas") {
      spec.algo = Algo::fptas;
      if (!a.contains("eps")) throw std::runtime_error("manifest: fptas entry needs 'eps'");
      spec.eps = a.at("eps").get<double>();
      check_epsilon(spec.eps);
    } else {
      throw std::runtime_error("manifest: unknown algorithm '" + name + "'");
    }
    man.algorithms.push_back(spec);
  }
  return man;
}

/// Runs the full grid in manifest order. The DP value of each instance (from
/// its manifest cell when present, otherwise computed untimed) provides the
/// AR reference.
template <typename LoadFn>
std::vector<RunRecord> run_bench(const Manifest& man, LoadFn&& load_instance_fn) {
  std::vector<RunRecord> rows;
  for (const std::string& path : man.instances) {
    const Instance inst = load_instance_fn(path);
    std::vector<RunRecord> cell_rows;
    std::optional<double> opt_benefit, opt_gain;
    for (const AlgoSpec& spec : man.algorithms) {
      RunRecord rec = run_algorithm(inst, spec);
      if (spec.algo == Algo::dp && !opt_benefit) {
        opt_benefit = rec.benefit;
        opt_gain = rec.gain;
      }
      cell_rows.push_back(std::move(rec));
    }
    if (!opt_benefit && !man.algorithms.empty()) {
      const DpValue v = dp_solve_value(inst);
      opt_benefit = v.benefit;
      opt_gain = v.gain;
    }
    for (RunRecord& rec : cell_rows) {
      if (opt_benefit && *opt_benefit != 0.0)
        rec.ar_benefit = 100.0 * rec.benefit / *opt_benefit;
      if (opt_gain && *opt_gain != 0.0) rec.ar_gain = 100.0 * rec.gain / *opt_gain;
      rows.push_back(std::move(rec));
    }
  }
  return rows;
}

}  // namespace pwt
