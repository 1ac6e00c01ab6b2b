// Copyright 2026 The streamcut Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "streamcut/report.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace streamcut {

namespace {

std::string format_double(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw std::runtime_error("cannot format double");
  return std::string(buf.data(), ptr);
}

template <typename T>
T parse_number(std::string_view field, std::string_view name) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::invalid_argument("bad CSV field " + std::string(name) + ": \"" +
                                std::string(field) + "\"");
  }
  return value;
}

nlohmann::ordered_json as_json(const MetricsReport& r) {
  nlohmann::ordered_json j;
  j["algorithm"] = r.algorithm;
  j["order"] = r.order;
  j["p"] = r.partitions;
  j["seed"] = r.seed;
  j["lambda"] = r.replication_factor;
  j["rho"] = r.imbalance_factor;
  j["improvement_pct"] = r.improvement_pct;
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

}  // namespace

std::string to_csv_row(const MetricsReport& r) {
  std::string row;
  row += r.algorithm;
  row += ',';
  row += r.order;
  row += ',';
  row += std::to_string(r.partitions);
  row += ',';
  row += std::to_string(r.seed);
  row += ',';
  row += format_double(r.replication_factor);
  row += ',';
  row += format_double(r.imbalance_factor);
  row += ',';
  row += format_double(r.improvement_pct);
  row += ',';
  row += format_double(r.runtime_ms);
  return row;
}

MetricsReport parse_csv_row(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 8) {
    throw std::invalid_argument("CSV row needs 8 fields, got " +
                                std::to_string(fields.size()));
  }
  MetricsReport r;
  r.algorithm = fields[0];
  r.order = fields[1];
  r.partitions = parse_number<std::uint32_t>(fields[2], "p");
  r.seed = parse_number<std::uint64_t>(fields[3], "seed");
  r.replication_factor = parse_number<double>(fields[4], "lambda");
  r.imbalance_factor = parse_number<double>(fields[5], "rho");
  r.improvement_pct = parse_number<double>(fields[6], "improvement_pct");
  r.runtime_ms = parse_number<double>(fields[7], "runtime_ms");
  return r;
}

std::string to_csv(const std::vector<MetricsReport>& reports) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : reports) {
    out += to_csv_row(r);
    out += '\n';
  }
  return out;
}

std::string to_json(const MetricsReport& report) {
  return as_json(report).dump(2) + "\n";
}

std::string to_json(const std::vector<MetricsReport>& reports) {
  if (reports.size() == 1) return to_json(reports.front());
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(as_json(r));
  return arr.dump(2) + "\n";
}

MetricsReport report_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  MetricsReport r;
  r.algorithm = j.at("algorithm").get<std::string>();
  r.order = j.at("order").get<std::string>();
  r.partitions = j.at("p").get<std::uint32_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.replication_factor = j.at("lambda").get<double>();
  r.imbalance_factor = j.at("rho").get<double>();
  r.improvement_pct = j.at("improvement_pct").get<double>();
  r.runtime_ms = j.at("runtime_ms").get<double>();
  return r;
}

}  // namespace streamcut
