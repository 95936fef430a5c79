#pragma once

// Instance files. Two text formats share the header style:
//  - the coordinate format of the travelling-thief benchmark set
//    (NODE_COORD_SECTION with CEIL_2D distances, items as
//    "index profit weight node"), and
//  - a native format that stores the route legs verbatim (DISTANCES section,
//    items as "city profit weight"), so instances without coordinates --
//    reductions in particular -- serialize exactly.
// Floating-point fields are written in shortest round-trip form, so
// parse(write(x)) reproduces every double bit for bit.

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pwt/core.hpp"

namespace pwt {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class InstanceFormat { auto_detect, native, ttp };

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline double parse_double(const std::string& tok, int line, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (tok.empty() || end != tok.c_str() + tok.size())
    throw ParseError(line, std::string("expected a number for ") + what + ", got '" + tok + "'");
  return v;
}

inline std::int64_t parse_integer(const std::string& tok, int line, const char* what) {
  const double v = parse_double(tok, line, what);
  if (std::floor(v) != v || std::abs(v) > 9.0e15)
    throw ParseError(line, std::string("non-integer ") + what + " '" + tok + "'");
  return static_cast<std::int64_t>(v);
}

/// Canonical header key: uppercase, '_' as space, runs of spaces collapsed.
inline std::string canonical_key(std::string_view key) {
  std::string out;
  bool pending_space = false;
  for (char c : key) {
    if (c == ' ' || c == '\t' || c == '_') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

inline double ceil_2d(const std::pair<double, double>& a, const std::pair<double, double>& b) {
  const double dx = a.first - b.first;
  const double dy = a.second - b.second;
  return std::ceil(std::sqrt(dx * dx + dy * dy));
}

}  // namespace detail

/// Parses either format, auto-detected from the section marker. Errors carry
/// the offending line number.
inline Instance parse_instance(const std::string& text) {
  using detail::parse_double;
  using detail::parse_integer;

  const bool is_ttp = text.find("NODE_COORD_SECTION") != std::string::npos;
  if (!is_ttp && text.find("DISTANCES") == std::string::npos)
    throw ParseError(0, "unrecognized instance file: no NODE_COORD_SECTION or DISTANCES section");

  Instance inst;
  int dimension = -1;
  std::int64_t item_count = -1;
  bool have_capacity = false, have_vmin = false, have_vmax = false, have_rent = false;
  std::vector<std::pair<double, double>> coords;
  std::vector<bool> coord_seen;
  std::vector<double> distances;

  enum class Mode { header, coords, distances, items };
  Mode mode = Mode::header;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line(detail::trim(raw));
    if (line.empty()) continue;

    if (line.rfind("NODE_COORD_SECTION", 0) == 0) {
      if (dimension < 0) throw ParseError(line_no, "DIMENSION must precede the node section");
      coords.assign(dimension, {0.0, 0.0});
      coord_seen.assign(dimension, false);
      mode = Mode::coords;
      continue;
    }
    if (line.rfind("ITEMS SECTION", 0) == 0 || line == "ITEMS") {
      if (item_count < 0) throw ParseError(line_no, "NUMBER OF ITEMS must precede the items section");
      mode = Mode::items;
      continue;
    }
    if (line == "DISTANCES") {
      if (dimension < 0) throw ParseError(line_no, "DIMENSION must precede the distances section");
      mode = Mode::distances;
      continue;
    }
    if (line == "EOF") break;

    switch (mode) {
      case Mode::header: {
        const std::size_t colon = line.find(':');
        if (colon == std::string::npos)
          throw ParseError(line_no, "expected 'KEY: VALUE' header line, got '" + line + "'");
        const std::string key = detail::canonical_key(line.substr(0, colon));
        const std::string value(detail::trim(std::string_view(line).substr(colon + 1)));
        if (key == "PROBLEM NAME" || key == "NAME") {
          inst.name = value;
        } else if (key == "KNAPSACK DATA TYPE") {
          inst.knapsack_type = value;
        } else if (key == "DIMENSION") {
          dimension = static_cast<int>(parse_integer(value, line_no, "DIMENSION"));
          if (dimension < 2) throw ParseError(line_no, "DIMENSION must be at least 2");
        } else if (key == "NUMBER OF ITEMS") {
          item_count = parse_integer(value, line_no, "NUMBER OF ITEMS");
          if (item_count < 0) throw ParseError(line_no, "NUMBER OF ITEMS must be >= 0");
        } else if (key == "CAPACITY OF KNAPSACK" || key == "CAPACITY") {
          inst.capacity = parse_integer(value, line_no, "capacity");
          if (inst.capacity < 1) throw ParseError(line_no, "capacity must be >= 1");
          have_capacity = true;
        } else if (key == "MIN SPEED") {
          inst.v_min = parse_double(value, line_no, "MIN SPEED");
          have_vmin = true;
        } else if (key == "MAX SPEED") {
          inst.v_max = parse_double(value, line_no, "MAX SPEED");
          have_vmax = true;
        } else if (key == "RENTING RATIO" || key == "RENTING RATE") {
          inst.rent = parse_double(value, line_no, "RENTING RATIO");
          have_rent = true;
        } else if (key == "EDGE WEIGHT TYPE") {
          if (value != "CEIL_2D")
            throw ParseError(line_no, "unsupported EDGE_WEIGHT_TYPE '" + value + "' (only CEIL_2D)");
        }
        // Other keys (COMMENT and friends) pass through silently.
        break;
      }
      case Mode::coords: {
        const auto tok = detail::split_ws(line);
        if (tok.size() != 3) throw ParseError(line_no, "expected 'index x y' node line");
        const std::int64_t idx = parse_integer(tok[0], line_no, "node index");
        if (idx < 1 || idx > dimension) throw ParseError(line_no, "node index out of range");
        coords[idx - 1] = {parse_double(tok[1], line_no, "x"), parse_double(tok[2], line_no, "y")};
        coord_seen[idx - 1] = true;
        break;
      }
      case Mode::distances: {
        for (const auto& t : detail::split_ws(line))
          distances.push_back(parse_double(t, line_no, "distance"));
        break;
      }
      case Mode::items: {
        const auto tok = detail::split_ws(line);
        Item it;
        if (is_ttp) {
          if (tok.size() != 4)
            throw ParseError(line_no, "expected 'index profit weight node' item line");
          it.id = static_cast<int>(parse_integer(tok[0], line_no, "item index"));
          it.profit = parse_double(tok[1], line_no, "profit");
          it.weight = parse_integer(tok[2], line_no, "weight");
          it.city = static_cast<int>(parse_integer(tok[3], line_no, "node"));
        } else {
          if (tok.size() != 3)
            throw ParseError(line_no, "expected 'city profit weight' item line");
          it.id = static_cast<int>(inst.items.size()) + 1;
          it.city = static_cast<int>(parse_integer(tok[0], line_no, "city"));
          it.profit = parse_double(tok[1], line_no, "profit");
          it.weight = parse_integer(tok[2], line_no, "weight");
        }
        if (it.city < 1 || it.city > dimension)
          throw ParseError(line_no, "item assigned to node " + std::to_string(it.city) +
                                        " outside 1.." + std::to_string(dimension));
        if (!(it.profit > 0.0)) throw ParseError(line_no, "item profit must be positive");
        if (it.weight < 1) throw ParseError(line_no, "item weight must be >= 1");
        inst.items.push_back(it);
        break;
      }
    }
  }

  if (dimension < 0) throw ParseError(0, "missing header key DIMENSION");
  if (item_count < 0) throw ParseError(0, "missing header key NUMBER OF ITEMS");
  if (!have_capacity) throw ParseError(0, "missing header key CAPACITY OF KNAPSACK");
  if (!have_vmin) throw ParseError(0, "missing header key MIN SPEED");
  if (!have_vmax) throw ParseError(0, "missing header key MAX SPEED");
  if (!have_rent) throw ParseError(0, "missing header key RENTING RATIO");
  if (static_cast<std::int64_t>(inst.items.size()) != item_count)
    throw ParseError(0, "NUMBER OF ITEMS is " + std::to_string(item_count) + " but " +
                            std::to_string(inst.items.size()) + " item lines were read");

  inst.n = dimension - 1;
  if (is_ttp) {
    for (int i = 0; i < dimension; ++i)
      if (!coord_seen[i])
        throw ParseError(0, "node " + std::to_string(i + 1) + " has no coordinates");
    inst.distances.resize(inst.n);
    for (int i = 0; i < inst.n; ++i) {
      inst.distances[i] = detail::ceil_2d(coords[i], coords[i + 1]);
      if (!(inst.distances[i] > 0.0))
        throw ParseError(0, "nodes " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                                " coincide; leg distance would be 0");
    }
    inst.coords = std::move(coords);
  } else {
    if (static_cast<int>(distances.size()) != inst.n)
      throw ParseError(0, "DISTANCES section has " + std::to_string(distances.size()) +
                              " values, expected " + std::to_string(inst.n));
    inst.distances = std::move(distances);
  }

  try {
    inst.finalize();
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return inst;
}

/// Serializes an instance. auto_detect writes the coordinate format when the
/// instance carries coordinates and the native format otherwise.
inline std::string write_instance(const Instance& inst,
                                  InstanceFormat format = InstanceFormat::auto_detect) {
  using detail::format_double;
  if (format == InstanceFormat::auto_detect)
    format = inst.coords ? InstanceFormat::ttp : InstanceFormat::native;
  if (format == InstanceFormat::ttp && !inst.coords)
    throw std::invalid_argument("write_instance: coordinate format needs node coordinates");

  std::string out;
  auto header = [&](const char* key, const std::string& value) {
    out += key;
    out += ": ";
    out += value;
    out += '\n';
  };
  header(format == InstanceFormat::ttp ? "PROBLEM NAME" : "NAME", inst.name);
  if (!inst.knapsack_type.empty()) header("KNAPSACK DATA TYPE", inst.knapsack_type);
  header("DIMENSION", std::to_string(inst.n + 1));
  header("NUMBER OF ITEMS", std::to_string(inst.items.size()));
  header("CAPACITY OF KNAPSACK", std::to_string(inst.capacity));
  header("MIN SPEED", format_double(inst.v_min));
  header("MAX SPEED", format_double(inst.v_max));
  header("RENTING RATIO", format_double(inst.rent));

  if (format == InstanceFormat::ttp) {
    header("EDGE_WEIGHT_TYPE", "CEIL_2D");
    out += "NODE_COORD_SECTION\t(INDEX, X, Y):\n";
    const auto& coords = *inst.coords;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      out += std::to_string(i + 1);
      out += '\t';
      out += format_double(coords[i].first);
      out += '\t';
      out += format_double(coords[i].second);
      out += '\n';
    }
    out += "ITEMS SECTION\t(INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):\n";
    // Benchmark convention lists items by their original index.
    std::vector<const Item*> by_id;
    by_id.reserve(inst.items.size());
    for (const Item& it : inst.items) by_id.push_back(&it);
    std::stable_sort(by_id.begin(), by_id.end(),
                     [](const Item* a, const Item* b) { return a->id < b->id; });
    for (const Item* it : by_id) {
      out += std::to_string(it->id);
      out += '\t';
      out += format_double(it->profit);
      out += '\t';
      out += std::to_string(it->weight);
      out += '\t';
      out += std::to_string(it->city);
      out += '\n';
    }
  } else {
    out += "DISTANCES\n";
    for (double d : inst.distances) {
      out += format_double(d);
      out += '\n';
    }
    out += "ITEMS\n";
    for (const Item& it : inst.items) {
      out += std::to_string(it.city);
      out += ' ';
      out += format_double(it.profit);
      out += ' ';
      out += std::to_string(it.weight);
      out += '\n';
    }
  }
  return out;
}

inline Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const ParseError& e) {
    // e.what() already carries the line prefix.
    throw ParseError(0, path.string() + ": " + e.what());
  }
}

inline void save_instance(const std::filesystem::path& path, const Instance& inst,
                          InstanceFormat format = InstanceFormat::auto_detect) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << write_instance(inst, format);
}

/// Rebuilds an instance along an explicit visiting order of its nodes. Only
/// meaningful for coordinate-based instances; leg distances are recomputed
/// along the new order and items move to their node's position in it.
inline Instance reroute(const Instance& inst, const std::vector<int>& route) {
  if (!inst.coords)
    throw std::invalid_argument("reroute: route permutation requires node coordinates");
  const int dim = inst.n + 1;
  if (static_cast<int>(route.size()) != dim)
    throw std::invalid_argument("reroute: route must list all " + std::to_string(dim) + " nodes");
  std::vector<int> position(dim + 1, 0);
  for (int i = 0; i < dim; ++i) {
    if (route[i] < 1 || route[i] > dim || position[route[i]] != 0)
      throw std::invalid_argument("reroute: route is not a permutation of 1.." + std::to_string(dim));
    position[route[i]] = i + 1;
  }
  Instance out = inst;
  auto& coords = *out.coords;
  const auto& old_coords = *inst.coords;
  for (int i = 0; i < dim; ++i) coords[i] = old_coords[route[i] - 1];
  for (int i = 0; i < out.n; ++i) {
    out.distances[i] = detail::ceil_2d(coords[i], coords[i + 1]);
    if (!(out.distances[i] > 0.0))
      throw std::invalid_argument("reroute: consecutive route nodes coincide");
  }
  for (Item& it : out.items) it.city = position[it.city];
  out.finalize();
  return out;
}

/// Reads a whitespace-separated node permutation.
inline std::vector<int> load_route(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open route file '" + path.string() + "'");
  std::vector<int> route;
  long long v = 0;
  while (in >> v) route.push_back(static_cast<int>(v));
  return route;
}

}  // namespace pwt
