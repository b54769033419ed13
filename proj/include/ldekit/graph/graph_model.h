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

#ifndef LDEKIT_GRAPH_GRAPH_MODEL_H_
#define LDEKIT_GRAPH_GRAPH_MODEL_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace ldekit::graph {

enum class ModelType { kStatechart, kWebstory, kDataflow, kPipeline };

std::string_view ModelTypeName(ModelType type);
std::optional<ModelType> ParseModelType(std::string_view name);

using TextList = std::vector<std::string>;

// Tag order matches the variant alternatives below.
enum class ValueTag { kText, kInteger, kBoolean, kTextList };

using PropertyValue = std::variant<std::string, std::int64_t, bool, TextList>;
using PropertyMap = std::map<std::string, PropertyValue, std::less<>>;

ValueTag TagOf(const PropertyValue& value);
std::string_view ValueTagName(ValueTag tag);

// Typed lookups; nullptr / nullopt when absent or carrying another tag.
const std::string* GetText(const PropertyMap& props, std::string_view key);
std::optional<std::int64_t> GetInteger(const PropertyMap& props,
                                       std::string_view key);
std::optional<bool> GetBoolean(const PropertyMap& props, std::string_view key);
const TextList* GetTextList(const PropertyMap& props, std::string_view key);

struct Node {
  std::string id;
  std::string kind;
  std::optional<std::string> parent;
  PropertyMap properties;

  friend bool operator==(const Node&, const Node&) = default;
};

struct Edge {
  std::string id;
  std::string kind;
  std::string source;
  std::string target;
  PropertyMap properties;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable typed node/edge document. Nodes and edges are kept sorted by id;
// the constructor enforces the structural invariants (unique ids, existing
// endpoints and parents, acyclic containment) and throws ldekit::Error.
class GraphModel {
 public:
  GraphModel(std::string id, ModelType type, std::vector<Node> nodes,
             std::vector<Edge> edges);

  const std::string& id() const { return id_; }
  ModelType type() const { return type_; }
  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }

  const Node* FindNode(std::string_view id) const;
  const Edge* FindEdge(std::string_view id) const;

  // Children of parent_id in id order; top-level nodes for nullopt.
  std::vector<const Node*> Children(
      std::optional<std::string_view> parent_id) const;
  // Edges in id order, optionally restricted to one edge kind.
  std::vector<const Edge*> Outgoing(std::string_view node_id,
                                    std::string_view kind = {}) const;
  std::vector<const Edge*> Incoming(std::string_view node_id,
                                    std::string_view kind = {}) const;

  // True if ancestor_id is a proper ancestor of node_id.
  bool IsAncestor(std::string_view ancestor_id, std::string_view node_id) const;
  std::size_t Depth(std::string_view node_id) const;

  friend bool operator==(const GraphModel& a, const GraphModel& b) {
    return a.id_ == b.id_ && a.type_ == b.type_ && a.nodes_ == b.nodes_ &&
           a.edges_ == b.edges_;
  }

 private:
  std::string id_;
  ModelType type_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> node_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> top_level_;
  std::vector<std::vector<std::size_t>> outgoing_;
  std::vector<std::vector<std::size_t>> incoming_;
};

}  // namespace ldekit::graph

#endif  // LDEKIT_GRAPH_GRAPH_MODEL_H_
