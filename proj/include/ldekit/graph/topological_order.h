// Copyright 2026 The ldekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LDEKIT_GRAPH_TOPOLOGICAL_ORDER_H_
#define LDEKIT_GRAPH_TOPOLOGICAL_ORDER_H_

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ldekit/graph/graph_model.h"

namespace ldekit::graph {

// Kahn ordering with the lexicographically smallest ready node first.
// Edges whose endpoints are not both listed are ignored. Throws CycleError
// whose witness starts at the smallest node id of the reported cycle.
std::vector<std::string> TopologicalOrder(
    std::vector<std::string> nodes,
    const std::vector<std::pair<std::string, std::string>>& edges);

// Orders the nodes whose kind is in node_kinds using edges whose kind is in
// edge_kinds. An empty filter admits every kind.
std::vector<std::string> TopologicalOrder(
    const GraphModel& model, const std::set<std::string>& edge_kinds,
    const std::set<std::string>& node_kinds);

}  // namespace ldekit::graph

#endif  // LDEKIT_GRAPH_TOPOLOGICAL_ORDER_H_
