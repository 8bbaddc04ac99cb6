#include "zeck/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace zeck {

ExperimentReport::ExperimentReport(std::string experiment, std::uint64_t seed)
    : name_(std::move(experiment)), seed_(seed) {}

void ExperimentReport::param(const std::string& key, const std::string& value) {
  params_.emplace_back(key, value);
}
void ExperimentReport::param(const std::string& key, std::uint64_t value) {
  params_.emplace_back(key, std::to_string(value));
}
void ExperimentReport::param(const std::string& key, double value) {
  params_.emplace_back(key, fmt(value));
}

void ExperimentReport::columns(std::vector<std::string> names) { columns_ = std::move(names); }

void ExperimentReport::row(std::vector<std::string> cells) {
  if (!columns_.empty() && cells.size() != columns_.size())
    throw std::invalid_argument("report row width mismatch");
  rows_.push_back(std::move(cells));
}

void ExperimentReport::row_values(const std::vector<double>& cells) {
  std::vector<std::string> out;
  out.reserve(cells.size());
  for (double v : cells) out.push_back(fmt(v));
  row(std::move(out));
}

void ExperimentReport::summary(const std::string& key, double value) {
  summary_.emplace_back(key, fmt(value));
}
void ExperimentReport::summary(const std::string& key, const std::string& value) {
  summary_.emplace_back(key, value);
}

std::string ExperimentReport::fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void ExperimentReport::write_csv(std::ostream& os) const {
  os << "# experiment=" << name_ << "\n";
  os << "# version=" << kVersion << "\n";
  os << "# seed=" << seed_ << "\n";
  for (const auto& [k, v] : params_) os << "# param " << k << "=" << v << "\n";
  for (const auto& [k, v] : summary_) os << "# summary " << k << "=" << v << "\n";
  os << "# wall_ms=" << fmt(wall_ms_) << "\n";
  for (std::size_t i = 0; i < columns_.size(); ++i)
    os << (i ? "," : "") << columns_[i];
  os << "\n";
  for (const auto& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << "\n";
  }
}

void ExperimentReport::write_json(std::ostream& os) const {
  nlohmann::ordered_json j;
  j["experiment"] = name_;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params_) params[k] = v;
  j["params"] = params;
  j["seed"] = seed_;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : rows_) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < r.size(); ++i) {
      const std::string key = i < columns_.size() ? columns_[i] : "c" + std::to_string(i);
      row[key] = r[i];
    }
    rows.push_back(row);
  }
  j["rows"] = rows;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const auto& [k, v] : summary_) summary[k] = v;
  j["summary"] = summary;
  j["version"] = kVersion;
  j["wall_ms"] = fmt(wall_ms_);
  os << j.dump(2) << "\n";
}

std::string ExperimentReport::stable_digest() const {
  std::ostringstream os;
  os << name_ << "\x1f" << seed_ << "\x1f";
  for (const auto& [k, v] : params_) os << k << "=" << v << "\x1f";
  for (const auto& c : columns_) os << c << "\x1f";
  for (const auto& r : rows_)
    for (const auto& c : r) os << c << "\x1f";
  for (const auto& [k, v] : summary_) os << k << "=" << v << "\x1f";
  return os.str();
}

Config Config::from_env() {
  const char* path = std::getenv("ZECKPRIME_CONFIG");
  if (path == nullptr || *path == '\0') return Config{};
  return from_file(path);
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config file not readable: " + path);
  Config c;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    auto trim = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    };
    trim(key);
    trim(val);
    if (key.empty() || val.empty()) continue;
    c.values_[key] = std::stod(val);
  }
  return c;
}

double Config::get(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

void Config::set(const std::string& key, double value) { values_[key] = value; }

bool Config::has(const std::string& key) const { return values_.count(key) != 0; }

}  // namespace zeck
