#pragma once

// Tabular output: CSV with '#' metadata lines, or a versioned JSON document.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace floatcyl::io {

inline constexpr int kSchemaVersion = 1;

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
  std::string command;
  std::vector<std::pair<std::string, Cell>> meta;
  std::string rows_key = "rows";
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();  // JSON only

  void add_meta(std::string key, Cell value) { meta.emplace_back(std::move(key), std::move(value)); }
};

inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string to_text(const Cell& c) {
  struct {
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  } vis;
  return std::visit(vis, c);
}

inline nlohmann::ordered_json to_json(const Cell& c) {
  struct {
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return v;
    }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  } vis;
  return std::visit(vis, c);
}

inline void write_csv(std::ostream& os, const Table& t) {
  os << "# command: " << t.command << '\n';
  for (const auto& [k, v] : t.meta) os << "# " << k << ": " << to_text(v) << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << to_text(row[i]);
    os << '\n';
  }
}

inline nlohmann::ordered_json to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["command"] = t.command;
  auto& meta = j["meta"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.meta) meta[k] = to_json(v);
  auto& rows = j[t.rows_key] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json o;
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i)
      o[t.columns[i]] = to_json(row[i]);
    rows.push_back(std::move(o));
  }
  for (const auto& [k, v] : t.extra.items()) j[k] = v;
  return j;
}

inline void write_json(std::ostream& os, const Table& t) { os << to_json(t).dump(2) << '\n'; }

}  // namespace floatcyl::io
