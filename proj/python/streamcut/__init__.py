# Copyright 2026 The streamcut Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Streaming vertex-cut graph partitioning."""

from ._core import (
    ALGORITHMS,
    ORDERS,
    Graph,
    ParseError,
    PartitionRun,
    generate,
    improvement,
    load_edge_list,
    parse_edge_list,
    partition,
    predict_random,
    predict_random_degree,
)

__all__ = [
    "ALGORITHMS",
    "ORDERS",
    "Graph",
    "ParseError",
    "PartitionRun",
    "generate",
    "improvement",
    "load_edge_list",
    "parse_edge_list",
    "partition",
    "predict_random",
    "predict_random_degree",
]
