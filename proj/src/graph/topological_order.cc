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

#include "ldekit/graph/topological_order.h"

#include <algorithm>
#include <map>
#include <queue>

#include "ldekit/error.h"

namespace ldekit::graph {

namespace {

// Finds one cycle among nodes left over by Kahn's algorithm. Every leftover
// node has a leftover predecessor, so walking predecessors must revisit a
// node; the walk is deterministic (smallest start, smallest predecessor).
std::vector<std::string> FindCycle(
    const std::set<std::string>& remaining,
    const std::map<std::string, std::set<std::string>>& preds) {
  std::vector<std::string> walk;
  std::map<std::string, std::size_t> seen;
  std::string cur = *remaining.begin();
  while (!seen.contains(cur)) {
    seen[cur] = walk.size();
    walk.push_back(cur);
    const auto& ps = preds.at(cur);
    auto it = std::find_if(ps.begin(), ps.end(), [&](const std::string& p) {
      return remaining.contains(p);
    });
    cur = *it;
  }
  // walk[seen[cur]..] follows predecessor links; reverse for edge order.
  std::vector<std::string> cycle(walk.begin() + seen[cur], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  return cycle;
}

}  // namespace

std::vector<std::string> TopologicalOrder(
    std::vector<std::string> nodes,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::set<std::string> members(nodes.begin(), nodes.end());
  std::map<std::string, std::set<std::string>> succs;
  std::map<std::string, std::set<std::string>> preds;
  for (const auto& n : members) {
    succs[n];
    preds[n];
  }
  for (const auto& [u, v] : edges) {
    if (!members.contains(u) || !members.contains(v)) continue;
    succs[u].insert(v);
    preds[v].insert(u);
  }

  std::map<std::string, std::size_t> indegree;
  std::priority_queue<std::string, std::vector<std::string>, std::greater<>>
      ready;
  for (const auto& n : members) {
    indegree[n] = preds[n].size();
    if (indegree[n] == 0) ready.push(n);
  }

  std::vector<std::string> order;
  order.reserve(members.size());
  while (!ready.empty()) {
    std::string n = ready.top();
    ready.pop();
    order.push_back(n);
    for (const auto& s : succs[n]) {
      if (--indegree[s] == 0) ready.push(s);
    }
  }

  if (order.size() != members.size()) {
    std::set<std::string> remaining;
    for (const auto& [n, d] : indegree) {
      if (d > 0) remaining.insert(n);
    }
    std::vector<std::string> witness = FindCycle(remaining, preds);
    std::string text;
    for (const auto& w : witness) text += w + " -> ";
    text += witness.front();
    throw CycleError(std::move(witness), "cycle: " + text);
  }
  return order;
}

std::vector<std::string> TopologicalOrder(
    const GraphModel& model, const std::set<std::string>& edge_kinds,
    const std::set<std::string>& node_kinds) {
  std::vector<std::string> nodes;
  for (const Node& n : model.nodes()) {
    if (node_kinds.empty() || node_kinds.contains(n.kind)) nodes.push_back(n.id);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Edge& e : model.edges()) {
    if (edge_kinds.empty() || edge_kinds.contains(e.kind)) {
      edges.emplace_back(e.source, e.target);
    }
  }
  return TopologicalOrder(std::move(nodes), edges);
}

}  // namespace ldekit::graph
