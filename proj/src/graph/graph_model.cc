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

#include "ldekit/graph/graph_model.h"

#include <algorithm>
#include <unordered_set>

#include "ldekit/error.h"

namespace ldekit::graph {

std::string_view ModelTypeName(ModelType type) {
  switch (type) {
    case ModelType::kStatechart: return "statechart";
    case ModelType::kWebstory: return "webstory";
    case ModelType::kDataflow: return "dataflow";
    case ModelType::kPipeline: return "pipeline";
  }
  return "";
}

std::optional<ModelType> ParseModelType(std::string_view name) {
  for (ModelType t : {ModelType::kStatechart, ModelType::kWebstory,
                      ModelType::kDataflow, ModelType::kPipeline}) {
    if (ModelTypeName(t) == name) return t;
  }
  return std::nullopt;
}

ValueTag TagOf(const PropertyValue& value) {
  return static_cast<ValueTag>(value.index());
}

std::string_view ValueTagName(ValueTag tag) {
  switch (tag) {
    case ValueTag::kText: return "text";
    case ValueTag::kInteger: return "integer";
    case ValueTag::kBoolean: return "boolean";
    case ValueTag::kTextList: return "list-of-text";
  }
  return "";
}

namespace {

template <typename T>
const T* GetAs(const PropertyMap& props, std::string_view key) {
  auto it = props.find(key);
  if (it == props.end()) return nullptr;
  return std::get_if<T>(&it->second);
}

}  // namespace

const std::string* GetText(const PropertyMap& props, std::string_view key) {
  return GetAs<std::string>(props, key);
}

std::optional<std::int64_t> GetInteger(const PropertyMap& props,
                                       std::string_view key) {
  const auto* v = GetAs<std::int64_t>(props, key);
  if (v == nullptr) return std::nullopt;
  return *v;
}

std::optional<bool> GetBoolean(const PropertyMap& props, std::string_view key) {
  const auto* v = GetAs<bool>(props, key);
  if (v == nullptr) return std::nullopt;
  return *v;
}

const TextList* GetTextList(const PropertyMap& props, std::string_view key) {
  return GetAs<TextList>(props, key);
}

GraphModel::GraphModel(std::string id, ModelType type, std::vector<Node> nodes,
                       std::vector<Edge> edges)
    : id_(std::move(id)),
      type_(type),
      nodes_(std::move(nodes)),
      edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const Node& a, const Node& b) { return a.id < b.id; });
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });

  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id.empty()) {
      throw Error(ErrorCode::kEnvelope, "node with empty id");
    }
    if (nodes_[i].kind.empty()) {
      throw Error(ErrorCode::kEnvelope,
                  "node '" + nodes_[i].id + "' has an empty kind");
    }
    if (!node_index_.emplace(nodes_[i].id, i).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate node id '" + nodes_[i].id + "'");
    }
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id.empty()) {
      throw Error(ErrorCode::kEnvelope, "edge with empty id");
    }
    if (edges_[i].kind.empty()) {
      throw Error(ErrorCode::kEnvelope,
                  "edge '" + edges_[i].id + "' has an empty kind");
    }
    if (!edge_index_.emplace(edges_[i].id, i).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate edge id '" + edges_[i].id + "'");
    }
  }

  children_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    if (!n.parent) {
      top_level_.push_back(i);
      continue;
    }
    auto it = node_index_.find(*n.parent);
    if (it == node_index_.end()) {
      throw Error(ErrorCode::kDanglingReference,
                  "node '" + n.id + "' has unknown parent '" + *n.parent + "'");
    }
    children_[it->second].push_back(i);
  }

  // Containment must be a forest: walking up from any node terminates.
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    std::size_t steps = 0;
    const Node* cur = &nodes_[i];
    while (cur->parent) {
      if (++steps > nodes_.size()) {
        throw Error(ErrorCode::kContainmentCycle,
                    "node '" + nodes_[i].id + "' is its own ancestor");
      }
      cur = &nodes_[node_index_.at(*cur->parent)];
    }
  }

  outgoing_.resize(nodes_.size());
  incoming_.resize(nodes_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    auto src = node_index_.find(e.source);
    auto dst = node_index_.find(e.target);
    if (src == node_index_.end() || dst == node_index_.end()) {
      throw Error(ErrorCode::kDanglingReference,
                  "edge '" + e.id + "' references unknown node '" +
                      (src == node_index_.end() ? e.source : e.target) + "'");
    }
    outgoing_[src->second].push_back(i);
    incoming_[dst->second].push_back(i);
  }
}

const Node* GraphModel::FindNode(std::string_view id) const {
  auto it = node_index_.find(std::string(id));
  return it == node_index_.end() ? nullptr : &nodes_[it->second];
}

const Edge* GraphModel::FindEdge(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  return it == edge_index_.end() ? nullptr : &edges_[it->second];
}

std::vector<const Node*> GraphModel::Children(
    std::optional<std::string_view> parent_id) const {
  const std::vector<std::size_t>* indices = &top_level_;
  if (parent_id) {
    auto it = node_index_.find(std::string(*parent_id));
    if (it == node_index_.end()) return {};
    indices = &children_[it->second];
  }
  std::vector<const Node*> out;
  out.reserve(indices->size());
  for (std::size_t i : *indices) out.push_back(&nodes_[i]);
  return out;
}

std::vector<const Edge*> GraphModel::Outgoing(std::string_view node_id,
                                              std::string_view kind) const {
  std::vector<const Edge*> out;
  auto it = node_index_.find(std::string(node_id));
  if (it == node_index_.end()) return out;
  for (std::size_t i : outgoing_[it->second]) {
    if (kind.empty() || edges_[i].kind == kind) out.push_back(&edges_[i]);
  }
  return out;
}

std::vector<const Edge*> GraphModel::Incoming(std::string_view node_id,
                                              std::string_view kind) const {
  std::vector<const Edge*> out;
  auto it = node_index_.find(std::string(node_id));
  if (it == node_index_.end()) return out;
  for (std::size_t i : incoming_[it->second]) {
    if (kind.empty() || edges_[i].kind == kind) out.push_back(&edges_[i]);
  }
  return out;
}

bool GraphModel::IsAncestor(std::string_view ancestor_id,
                            std::string_view node_id) const {
  const Node* cur = FindNode(node_id);
  while (cur != nullptr && cur->parent) {
    if (*cur->parent == ancestor_id) return true;
    cur = FindNode(*cur->parent);
  }
  return false;
}

std::size_t GraphModel::Depth(std::string_view node_id) const {
  std::size_t depth = 0;
  const Node* cur = FindNode(node_id);
  while (cur != nullptr && cur->parent) {
    ++depth;
    cur = FindNode(*cur->parent);
  }
  return depth;
}

}  // namespace ldekit::graph
