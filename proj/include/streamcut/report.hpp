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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace streamcut {

/// One (algorithm, order, p, seed) cell of an experiment.
struct MetricsReport {
  std::string algorithm;
  std::string order;
  std::uint32_t partitions = 0;
  std::uint64_t seed = 0;
  double replication_factor = 0.0;
  double imbalance_factor = 0.0;
  double improvement_pct = 0.0;
  double runtime_ms = 0.0;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// "algorithm,order,p,seed,lambda,rho,improvement_pct,runtime_ms"
inline constexpr std::string_view kCsvHeader =
    "algorithm,order,p,seed,lambda,rho,improvement_pct,runtime_ms";

/// Doubles are written in shortest round-trip form, so parse_csv_row
/// recovers the exact values.
std::string to_csv_row(const MetricsReport& report);
MetricsReport parse_csv_row(std::string_view line);

std::string to_csv(const std::vector<MetricsReport>& reports);

/// Pretty-printed JSON object (array for more than one report).
std::string to_json(const MetricsReport& report);
std::string to_json(const std::vector<MetricsReport>& reports);
MetricsReport report_from_json(std::string_view text);

}  // namespace streamcut
