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

// Straight-line re-statement of the six heuristics, for tests only.
//
// Every score is recomputed from scratch in floating point for every
// partition on every step, with std::map/std::set bookkeeping. Only the
// randomness source (seeded hashes and tie-breaking rng) is taken from a fresh
// PartitionState so that outputs can be compared bit for bit.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "streamcut/graph.hpp"
#include "streamcut/partition.hpp"

namespace streamcut::testing {

class ReferenceSimulator {
 public:
  ReferenceSimulator(Algorithm algorithm, int p, std::uint64_t seed)
      : algorithm_(algorithm), p_(p), loads_(p, 0) {
    PartitionState fresh(static_cast<std::uint32_t>(p), 1, seed);
    edge_hash_ = fresh.edge_hash();
    row_hash_ = fresh.row_hash();
    col_hash_ = fresh.col_hash();
    rng_ = fresh.rng();
  }

  AssignmentLog run(std::span<const StreamEvent> stream) {
    std::map<VertexId, long> full_degree;
    for (const auto& ev : stream) {
      for (const Edge& e : ev.out_edges) {
        ++full_degree[e.source];
        ++full_degree[e.target];
      }
    }

    AssignmentLog log;
    for (const auto& ev : stream) {
      if (algorithm_ == Algorithm::DegreeIO) {
        out_degree_[ev.vertex] = static_cast<long>(ev.out_edges.size());
        auto pending = buffer_[ev.vertex];
        buffer_.erase(ev.vertex);
        for (const Edge& e : pending) log.push_back({e, greedy(e, Degrees::Total)});
      }
      for (const Edge& e : ev.out_edges) {
        switch (algorithm_) {
          case Algorithm::Random:
            log.push_back({e, commit(e, static_cast<int>(edge_hash_(e.source, e.target) % p_))});
            break;
          case Algorithm::Grid:
            log.push_back({e, grid(e)});
            break;
          case Algorithm::Balance:
            log.push_back({e, greedy(e, Degrees::None)});
            break;
          case Algorithm::RandomDegree: {
            const VertexId lower =
                full_degree[e.target] < full_degree[e.source] ? e.target : e.source;
            log.push_back({e, commit(e, static_cast<int>(edge_hash_(lower) % p_))});
            break;
          }
          case Algorithm::Degree:
            ++in_degree_[e.target];
            log.push_back({e, greedy(e, Degrees::In)});
            break;
          case Algorithm::DegreeIO: {
            ++in_degree_[e.target];
            const bool target_known = out_degree_.count(e.target) > 0;
            if (out_degree_[e.source] >= p_ && !target_known) {
              buffer_[e.target].push_back(e);
            } else if (target_known) {
              log.push_back({e, greedy(e, Degrees::Total)});
            } else {
              log.push_back({e, greedy(e, Degrees::In)});
            }
            break;
          }
        }
      }
    }
    // std::map iterates awaited vertices in ascending order.
    for (auto& [v, pending] : buffer_) {
      for (const Edge& e : pending) log.push_back({e, greedy(e, Degrees::Total)});
    }
    buffer_.clear();
    return log;
  }

  const std::vector<long>& loads() const { return loads_; }
  const std::map<VertexId, std::set<int>>& replicas() const { return replicas_; }

 private:
  enum class Degrees { None, In, Total };

  PartitionId commit(const Edge& e, int k) {
    ++loads_[k];
    ++total_;
    replicas_[e.source].insert(k);
    replicas_[e.target].insert(k);
    return static_cast<PartitionId>(k);
  }

  int pick(const std::vector<int>& candidates) {
    if (candidates.size() == 1) return candidates.front();
    return candidates[rng_.below(candidates.size())];
  }

  double balance(int k) const {
    const long max_edges = *std::max_element(loads_.begin(), loads_.end());
    const long min_edges = *std::min_element(loads_.begin(), loads_.end());
    return static_cast<double>(max_edges - loads_[k]) /
           static_cast<double>(max_edges - min_edges + 1);
  }

  bool in(VertexId v, int k) const {
    auto it = replicas_.find(v);
    return it != replicas_.end() && it->second.count(k) > 0;
  }

  long degree(VertexId v, Degrees kind) {
    if (kind == Degrees::In) return in_degree_[v];
    long out = 0;
    if (auto it = out_degree_.find(v); it != out_degree_.end()) out = it->second;
    return in_degree_[v] + out;
  }

  PartitionId greedy(const Edge& e, Degrees kind) {
    const VertexId u = e.source;
    const VertexId v = e.target;
    const long max_edges = *std::max_element(loads_.begin(), loads_.end());
    const bool guard =
        total_ >= p_ && static_cast<double>(max_edges) /
                                (static_cast<double>(total_) / static_cast<double>(p_)) >=
                            1.1;
    std::vector<double> score(p_);
    for (int k = 0; k < p_; ++k) {
      if (guard) {
        score[k] = balance(k);
        continue;
      }
      int indicators = (in(u, k) ? 1 : 0) + (in(v, k) ? 1 : 0);
      if (kind != Degrees::None) {
        const long du = degree(u, kind);
        const long dv = degree(v, kind);
        indicators += (in(u, k) && du <= dv) ? 1 : 0;
        indicators += (in(v, k) && dv <= du) ? 1 : 0;
      }
      score[k] = indicators + balance(k);
    }
    const double best = *std::max_element(score.begin(), score.end());
    std::vector<int> candidates;
    for (int k = 0; k < p_; ++k) {
      if (score[k] == best) candidates.push_back(k);
    }
    return commit(e, pick(candidates));
  }

  PartitionId grid(const Edge& e) {
    int rows = 1;
    for (int r = 1; r <= p_; ++r) {
      if (p_ % r == 0 && r * r <= p_) rows = r;
    }
    const int cols = p_ / rows;
    const int ru = static_cast<int>(row_hash_(e.source) % rows);
    const int cu = static_cast<int>(col_hash_(e.source) % cols);
    const int rv = static_cast<int>(row_hash_(e.target) % rows);
    const int cv = static_cast<int>(col_hash_(e.target) % cols);
    std::vector<int> candidates;
    for (int k = 0; k < p_; ++k) {
      const int r = k / cols;
      const int c = k % cols;
      if ((r == ru || c == cu) && (r == rv || c == cv)) candidates.push_back(k);
    }
    return commit(e, pick(candidates));
  }

  Algorithm algorithm_;
  int p_;
  std::vector<long> loads_;
  long total_ = 0;
  std::map<VertexId, std::set<int>> replicas_;
  std::map<VertexId, long> in_degree_;
  std::map<VertexId, long> out_degree_;
  std::map<VertexId, std::vector<Edge>> buffer_;
  HashFunction edge_hash_;
  HashFunction row_hash_;
  HashFunction col_hash_;
  Rng rng_;
};

}  // namespace streamcut::testing
