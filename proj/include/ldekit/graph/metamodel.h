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

#ifndef LDEKIT_GRAPH_METAMODEL_H_
#define LDEKIT_GRAPH_METAMODEL_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ldekit/graph/graph_model.h"
#include "ldekit/graph/issue.h"

namespace ldekit::graph {

struct PropertySchema {
  std::string name;
  std::vector<ValueTag> tags;  // accepted tags, usually exactly one
  bool required = false;
};

struct Cardinality {
  std::size_t min = 0;
  std::optional<std::size_t> max;  // nullopt is unbounded
};

struct NodeKindSpec {
  std::string name;
  std::vector<PropertySchema> properties;
  bool open_properties = false;  // accept undeclared properties silently
  bool allow_top_level = true;
  std::set<std::string> allowed_parents;
};

// Cardinality bounds are keyed by node kind: for every node of that kind, the
// number of edges of this kind leaving (outgoing) or entering (incoming) it
// must lie within the bounds.
struct EdgeKindSpec {
  std::string name;
  std::vector<std::pair<std::string, std::string>> endpoints;
  std::vector<PropertySchema> properties;
  bool open_properties = false;
  std::map<std::string, Cardinality> outgoing;
  std::map<std::string, Cardinality> incoming;
};

class Metamodel {
 public:
  // Throws ldekit::Error(kEnvelope) if an edge kind, parent rule, or
  // cardinality entry names an undeclared node kind.
  Metamodel(ModelType type, std::vector<NodeKindSpec> node_kinds,
            std::vector<EdgeKindSpec> edge_kinds);

  ModelType type() const { return type_; }
  const NodeKindSpec* FindNodeKind(std::string_view name) const;
  const EdgeKindSpec* FindEdgeKind(std::string_view name) const;
  const std::vector<NodeKindSpec>& node_kinds() const { return node_kinds_; }
  const std::vector<EdgeKindSpec>& edge_kinds() const { return edge_kinds_; }

 private:
  ModelType type_;
  std::vector<NodeKindSpec> node_kinds_;
  std::vector<EdgeKindSpec> edge_kinds_;
};

// Checks kind existence, property schemas, edge endpoint legality,
// endpoint cardinality and containment. Throws kMetamodelMismatch when the
// model and metamodel types differ.
std::vector<ValidationIssue> ValidateStructure(const GraphModel& model,
                                               const Metamodel& meta);

}  // namespace ldekit::graph

#endif  // LDEKIT_GRAPH_METAMODEL_H_
