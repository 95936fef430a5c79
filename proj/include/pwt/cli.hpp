#pragma once

// Command-line front end: solve, bench, generate, reduce-ssp and fcurve
// subcommands over the library. Kept as a function of (args, streams) so the
// test suite can drive it in-process.
//
// Exit codes: 0 success, 1 usage error, 2 input error.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pwt/bench.hpp"
#include "pwt/core.hpp"
#include "pwt/dp.hpp"
#include "pwt/fptas.hpp"
#include "pwt/generator.hpp"
#include "pwt/hardness.hpp"
#include "pwt/io.hpp"

namespace pwt::cli {

namespace detail {

/// Input-level failure (unreadable or invalid data): exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flag-level failure that CLI11 cannot catch itself: exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<std::int64_t> parse_value_list(const std::string& csv) {
  std::vector<std::int64_t> values;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("--values expects a comma-separated integer list, got '" + tok + "'");
    }
  }
  if (values.empty()) throw UsageError("--values must not be empty");
  return values;
}

inline Instance load_or_die(const std::string& path) {
  try {
    return load_instance(path);
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
}

inline void append_csv(const std::string& path, const RunRecord& rec) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw InputError("cannot write '" + path + "'");
  if (fresh) out << run_record_csv_header() << '\n';
  out << to_csv_row(rec) << '\n';
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

struct SolveArgs {
  std::string instance_path;
  std::string algo = "dp";
  double eps = -1.0;
  std::string route_path;
  std::string csv_out;
  int brute_limit = 25;
};

inline void cmd_solve(const SolveArgs& a, std::ostream& out) {
  if (a.algo != "dp" && a.algo != "fptas" && a.algo != "brute")
    throw UsageError("unknown algorithm '" + a.algo + "' (expected dp, fptas or brute)");
  if (a.algo == "fptas") {
    if (a.eps < 0.0) throw UsageError("--eps is required for fptas");
    try {
      check_epsilon(a.eps);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  Instance inst = load_or_die(a.instance_path);
  if (!a.route_path.empty()) {
    try {
      inst = reroute(inst, load_route(a.route_path));
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }

  RunRecord rec;
  rec.instance = inst.name;
  rec.item_count = static_cast<int>(inst.item_count());
  rec.algo = a.algo;
  Selection sel;
  Evaluation ev;
  const auto start = std::chrono::steady_clock::now();
  if (a.algo == "dp") {
    DpResult r = dp_solve(inst);
    sel = std::move(r.selection);
    ev = r.eval;
    rec.peak_entries = r.stats.peak_column_entries;
  } else if (a.algo == "fptas") {
    rec.eps = a.eps;
    FptasResult r = fptas_solve(inst, a.eps);
    sel = std::move(r.selection);
    ev = r.eval;
    rec.peak_entries = r.stats.peak_column_entries;
  } else {
    try {
      SolveResult r = brute_force(inst, a.brute_limit);
      sel = std::move(r.selection);
      ev = r.eval;
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rec.benefit = ev.benefit;
  rec.gain = ev.gain;

  std::vector<int> ids;
  for (std::size_t i = 0; i < sel.bits.size(); ++i)
    if (sel.bits[i]) ids.push_back(inst.items[i].id);
  std::sort(ids.begin(), ids.end());

  out << "instance: " << inst.name << " (m=" << inst.item_count() << ")\n";
  out << "algo: " << a.algo;
  if (rec.eps) out << " eps=" << pwt::detail::csv_number(*rec.eps, "%g");
  out << '\n';
  out << "B: " << pwt::detail::csv_number(ev.benefit) << '\n';
  out << "Bprime: " << pwt::detail::csv_number(ev.gain) << '\n';
  out << "weight: " << sel.total_weight << " / " << inst.capacity << '\n';
  out << "items:";
  for (int id : ids) out << ' ' << id;
  out << '\n';
  out << "seconds: " << pwt::detail::csv_number(rec.seconds, "%.6f") << '\n';
  if (!a.csv_out.empty()) append_csv(a.csv_out, rec);
}

struct BenchArgs {
  std::string manifest_path;
  std::string out_path;
};

inline void cmd_bench(const BenchArgs& a, std::ostream& out) {
  std::ifstream in(a.manifest_path);
  if (!in) throw InputError("cannot open manifest '" + a.manifest_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Manifest man;
  try {
    man = parse_manifest(buf.str());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
  const auto base = std::filesystem::path(a.manifest_path).parent_path();
  auto load = [&](const std::string& p) {
    std::filesystem::path fp(p);
    if (fp.is_relative()) fp = base / fp;
    return load_or_die(fp.string());
  };
  const std::vector<RunRecord> rows = run_bench(man, load);
  std::string csv = run_record_csv_header();
  csv += '\n';
  for (const RunRecord& r : rows) {
    csv += to_csv_row(r);
    csv += '\n';
  }
  if (a.out_path.empty())
    out << csv;
  else
    write_text(a.out_path, csv);
}

struct GenerateArgs {
  std::string family = "uncorr";
  int m = 100;
  std::int64_t range_lo = 1;
  std::int64_t range_hi = 1000;
  int capacity_class = 5;
  std::string assign = "round-robin";
  int per_city = 1;
  int cities = 101;
  std::uint64_t seed = 0;
  double v_min = 0.1, v_max = 1.0;
  double rent = -1.0;
  std::int64_t capacity = -1;
  std::string out_path;
  std::string format = "auto";
  std::string grid;
  std::string outdir;
};

inline InstanceFormat format_from_name(const std::string& name) {
  if (name == "auto") return InstanceFormat::auto_detect;
  if (name == "native") return InstanceFormat::native;
  if (name == "ttp") return InstanceFormat::ttp;
  throw UsageError("unknown format '" + name + "' (expected auto, native or ttp)");
}

inline GeneratorSpec spec_from_args(const GenerateArgs& a) {
  GeneratorSpec spec;
  const auto fam = family_from_label(a.family);
  if (!fam) throw UsageError("unknown family '" + a.family + "'");
  spec.family = *fam;
  spec.item_count = a.m;
  spec.range_lo = a.range_lo;
  spec.range_hi = a.range_hi;
  spec.capacity_class = a.capacity_class;
  if (a.assign == "round-robin")
    spec.assignment = Assignment::round_robin;
  else if (a.assign == "profit-sorted")
    spec.assignment = Assignment::profit_sorted;
  else
    throw UsageError("unknown assignment '" + a.assign + "'");
  spec.per_city = a.per_city;
  spec.cities = a.cities;
  spec.seed = a.seed;
  spec.v_min = a.v_min;
  spec.v_max = a.v_max;
  if (a.rent >= 0.0) spec.rent = a.rent;
  if (a.capacity >= 0) spec.capacity_override = a.capacity;
  return spec;
}

/// The 27-file corpora: family x m x capacity class. The small grid mirrors
/// the original benchmark layout (range 10^3, one item per city in file
/// order); the large grid uses range 10^7 with profit-sorted assignment at
/// k = m/100 items per city.
inline void cmd_generate_grid(const GenerateArgs& a, std::ostream& out) {
  if (a.outdir.empty()) throw UsageError("--grid needs --outdir");
  if (a.grid != "small" && a.grid != "large")
    throw UsageError("--grid must be 'small' or 'large'");
  const bool large = a.grid == "large";
  std::filesystem::create_directories(a.outdir);
  const Family families[3] = {
      Family::uncorrelated, Family::uncorrelated_similar_weights,
      large ? Family::multiple_strongly_correlated : Family::bounded_strongly_correlated};
  const int item_counts[3] = {100, 500, 1000};
  const int classes[3] = {1, 6, 10};
  std::uint64_t seed = a.seed;
  for (Family fam : families) {
    for (int m : item_counts) {
      for (int cls : classes) {
        GeneratorSpec spec;
        spec.family = fam;
        spec.item_count = m;
        spec.range_hi = large ? 10000000 : 1000;
        spec.capacity_class = cls;
        spec.cities = 101;
        spec.seed = seed++;
        if (large) {
          spec.assignment = Assignment::profit_sorted;
          spec.per_city = m / 100;
        }
        const Instance inst = generate(spec);
        const std::string file =
            (std::filesystem::path(a.outdir) / (inst.name + ".ttp")).string();
        write_text(file, write_instance(inst));
        out << file << '\n';
      }
    }
  }
}

inline void cmd_generate(const GenerateArgs& a, std::ostream& out) {
  if (!a.grid.empty()) {
    cmd_generate_grid(a, out);
    return;
  }
  if (a.out_path.empty()) throw UsageError("--out is required");
  Instance inst;
  try {
    inst = generate(spec_from_args(a));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  write_text(a.out_path, write_instance(inst, format_from_name(a.format)));
  out << a.out_path << '\n';
}

struct ReduceArgs {
  std::string values;
  std::int64_t target = 0;
  std::string variant = "capacitated";
  std::string out_path;
};

inline void cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  SspInstance ssp{parse_value_list(a.values), a.target};
  try {
    ssp.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Instance inst;
  if (a.variant == "capacitated")
    inst = reduce_capacitated(ssp);
  else if (a.variant == "unconstrained")
    inst = reduce_unconstrained(ssp);
  else
    throw UsageError("unknown variant '" + a.variant + "'");
  if (a.out_path.empty()) throw UsageError("--out is required");
  write_text(a.out_path, write_instance(inst));
  out << a.out_path << '\n';
}

struct FcurveArgs {
  std::string values;
  std::int64_t target = 0;
  std::string variant = "capacitated";
  std::int64_t step = 0;
  std::string out_path;
};

inline void cmd_fcurve(const FcurveArgs& a, std::ostream& out) {
  SspInstance ssp{parse_value_list(a.values), a.target};
  try {
    ssp.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  CurveKind kind;
  if (a.variant == "capacitated")
    kind = CurveKind::capacitated;
  else if (a.variant == "unconstrained")
    kind = CurveKind::unconstrained;
  else
    throw UsageError("unknown variant '" + a.variant + "'");
  const CurveParams params = curve_params(kind, ssp);
  std::int64_t step = a.step;
  if (step <= 0) step = std::max<std::int64_t>(1, params.capacity / 200);
  std::string csv = "w,f\n";
  for (std::int64_t w = 0; w <= params.capacity; w += step) {
    csv += std::to_string(w);
    csv += ',';
    csv += pwt::detail::format_double(curve_value(kind, params, static_cast<double>(w)));
    csv += '\n';
  }
  if (params.capacity % step != 0) {
    csv += std::to_string(params.capacity);
    csv += ',';
    csv += pwt::detail::format_double(
        curve_value(kind, params, static_cast<double>(params.capacity)));
    csv += '\n';
  }
  if (a.out_path.empty())
    out << csv;
  else
    write_text(a.out_path, csv);
}

}  // namespace detail

/// Parses and executes one command line. argv[0] is not expected.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"packing-while-traveling solver suite"};
  app.require_subcommand(1);

  detail::SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance and print the packing");
  solve->add_option("--instance", solve_args.instance_path, "instance file")->required();
  solve->add_option("--algo", solve_args.algo, "dp, fptas or brute");
  solve->add_option("--eps", solve_args.eps, "approximation parameter for fptas");
  solve->add_option("--route", solve_args.route_path, "optional node-permutation file");
  solve->add_option("--out", solve_args.csv_out, "append a CSV run record to this file");
  solve->add_option("--brute-limit", solve_args.brute_limit, "item cap for brute force");

  detail::BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "run a manifest of instances x algorithms");
  bench->add_option("--manifest", bench_args.manifest_path, "JSON manifest")->required();
  bench->add_option("--out", bench_args.out_path, "CSV output file (default stdout)");

  detail::GenerateArgs gen_args;
  CLI::App* gen = app.add_subcommand("generate", "generate benchmark instances");
  gen->add_option("--family", gen_args.family, "uncorr, uncorr-s-w, b-s-corr or m-s-corr");
  gen->add_option("--m", gen_args.m, "item count");
  gen->add_option("--range-lo", gen_args.range_lo, "value range lower bound");
  gen->add_option("--range-hi", gen_args.range_hi, "value range upper bound");
  gen->add_option("--class", gen_args.capacity_class, "capacity class 1..10");
  gen->add_option("--assign", gen_args.assign, "round-robin or profit-sorted");
  gen->add_option("--per-city", gen_args.per_city, "items per city for profit-sorted");
  gen->add_option("--cities", gen_args.cities, "route length n+1");
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--vmin", gen_args.v_min, "minimum speed");
  gen->add_option("--vmax", gen_args.v_max, "maximum speed");
  gen->add_option("--rent", gen_args.rent, "renting ratio (default derived)");
  gen->add_option("--capacity", gen_args.capacity, "explicit capacity override");
  gen->add_option("--out", gen_args.out_path, "output file");
  gen->add_option("--format", gen_args.format, "auto, native or ttp");
  gen->add_option("--grid", gen_args.grid, "emit a full corpus: small or large");
  gen->add_option("--outdir", gen_args.outdir, "output directory for --grid");

  detail::ReduceArgs red_args;
  CLI::App* red = app.add_subcommand("reduce-ssp", "build a subset-sum reduction instance");
  red->add_option("--values", red_args.values, "comma-separated positive integers")->required();
  red->add_option("--target", red_args.target, "subset-sum target Q")->required();
  red->add_option("--variant", red_args.variant, "capacitated or unconstrained");
  red->add_option("--out", red_args.out_path, "output instance file")->required();

  detail::FcurveArgs fc_args;
  CLI::App* fcurve = app.add_subcommand("fcurve", "sample the reduction benefit curve as CSV");
  fcurve->add_option("--values", fc_args.values, "comma-separated positive integers")->required();
  fcurve->add_option("--target", fc_args.target, "subset-sum target Q")->required();
  fcurve->add_option("--variant", fc_args.variant, "capacitated or unconstrained");
  fcurve->add_option("--step", fc_args.step, "sample stride (default capacity/200)");
  fcurve->add_option("--out", fc_args.out_path, "CSV output file (default stdout)");

  try {
    // CLI11's vector overload consumes arguments from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (solve->parsed()) detail::cmd_solve(solve_args, out);
    if (bench->parsed()) detail::cmd_bench(bench_args, out);
    if (gen->parsed()) detail::cmd_generate(gen_args, out);
    if (red->parsed()) detail::cmd_reduce(red_args, out);
    if (fcurve->parsed()) detail::cmd_fcurve(fc_args, out);
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const detail::InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace pwt::cli
