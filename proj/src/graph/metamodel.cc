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

#include "ldekit/graph/metamodel.h"

#include <algorithm>

#include "ldekit/error.h"

namespace ldekit::graph {

Metamodel::Metamodel(ModelType type, std::vector<NodeKindSpec> node_kinds,
                     std::vector<EdgeKindSpec> edge_kinds)
    : type_(type),
      node_kinds_(std::move(node_kinds)),
      edge_kinds_(std::move(edge_kinds)) {
  auto require_kind = [&](const std::string& kind, const std::string& where) {
    if (FindNodeKind(kind) == nullptr) {
      throw Error(ErrorCode::kEnvelope,
                  where + " references undeclared node kind '" + kind + "'");
    }
  };
  for (const auto& nk : node_kinds_) {
    for (const auto& p : nk.allowed_parents) {
      require_kind(p, "node kind '" + nk.name + "'");
    }
  }
  for (const auto& ek : edge_kinds_) {
    const std::string where = "edge kind '" + ek.name + "'";
    for (const auto& [src, dst] : ek.endpoints) {
      require_kind(src, where);
      require_kind(dst, where);
    }
    for (const auto& [kind, bounds] : ek.outgoing) require_kind(kind, where);
    for (const auto& [kind, bounds] : ek.incoming) require_kind(kind, where);
  }
}

const NodeKindSpec* Metamodel::FindNodeKind(std::string_view name) const {
  auto it = std::find_if(node_kinds_.begin(), node_kinds_.end(),
                         [&](const auto& k) { return k.name == name; });
  return it == node_kinds_.end() ? nullptr : &*it;
}

const EdgeKindSpec* Metamodel::FindEdgeKind(std::string_view name) const {
  auto it = std::find_if(edge_kinds_.begin(), edge_kinds_.end(),
                         [&](const auto& k) { return k.name == name; });
  return it == edge_kinds_.end() ? nullptr : &*it;
}

namespace {

std::string TagList(const std::vector<ValueTag>& tags) {
  std::string out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i > 0) out += " or ";
    out += ValueTagName(tags[i]);
  }
  return out;
}

void CheckProperties(const PropertyMap& props,
                     const std::vector<PropertySchema>& schema, bool open,
                     const std::string& element_id,
                     std::vector<ValidationIssue>& issues) {
  for (const auto& ps : schema) {
    auto it = props.find(ps.name);
    if (it == props.end()) {
      if (ps.required) {
        issues.push_back(MakeError("property.missing",
                                   "missing required property '" + ps.name +
                                       "'",
                                   element_id));
      }
      continue;
    }
    ValueTag tag = TagOf(it->second);
    if (std::find(ps.tags.begin(), ps.tags.end(), tag) == ps.tags.end()) {
      issues.push_back(MakeError(
          "property.type",
          "property '" + ps.name + "' must be " + TagList(ps.tags) +
              ", found " + std::string(ValueTagName(tag)),
          element_id));
    }
  }
  if (open) return;
  for (const auto& [name, value] : props) {
    bool declared = std::any_of(schema.begin(), schema.end(),
                                [&](const auto& ps) { return ps.name == name; });
    if (!declared) {
      issues.push_back(MakeWarning(
          "property.unknown", "undeclared property '" + name + "'",
          element_id));
    }
  }
}

void CheckBounds(const Cardinality& bounds, std::size_t count,
                 const std::string& rule, const std::string& what,
                 const std::string& element_id,
                 std::vector<ValidationIssue>& issues) {
  if (count < bounds.min || (bounds.max && count > *bounds.max)) {
    std::string range = std::to_string(bounds.min) + ".." +
                        (bounds.max ? std::to_string(*bounds.max) : "*");
    issues.push_back(MakeError(rule,
                               "expected " + range + " " + what + ", found " +
                                   std::to_string(count),
                               element_id));
  }
}

}  // namespace

std::vector<ValidationIssue> ValidateStructure(const GraphModel& model,
                                               const Metamodel& meta) {
  if (model.type() != meta.type()) {
    throw Error(ErrorCode::kMetamodelMismatch,
                "model type '" + std::string(ModelTypeName(model.type())) +
                    "' does not match metamodel type '" +
                    std::string(ModelTypeName(meta.type())) + "'");
  }
  std::vector<ValidationIssue> issues;

  for (const Node& n : model.nodes()) {
    const NodeKindSpec* kind = meta.FindNodeKind(n.kind);
    if (kind == nullptr) {
      issues.push_back(
          MakeError("kind.unknown", "unknown node kind '" + n.kind + "'", n.id));
      continue;
    }
    CheckProperties(n.properties, kind->properties, kind->open_properties,
                    n.id, issues);
    if (!n.parent) {
      if (!kind->allow_top_level) {
        issues.push_back(MakeError(
            "containment.illegal",
            "'" + n.kind + "' may not appear at top level", n.id));
      }
    } else {
      const Node* parent = model.FindNode(*n.parent);
      if (!kind->allowed_parents.contains(parent->kind)) {
        issues.push_back(MakeError(
            "containment.illegal",
            "'" + parent->kind + "' may not contain '" + n.kind + "'", n.id));
      }
    }
  }

  for (const Edge& e : model.edges()) {
    const EdgeKindSpec* kind = meta.FindEdgeKind(e.kind);
    if (kind == nullptr) {
      issues.push_back(
          MakeError("kind.unknown", "unknown edge kind '" + e.kind + "'", e.id));
      continue;
    }
    CheckProperties(e.properties, kind->properties, kind->open_properties,
                    e.id, issues);
    const std::string& src_kind = model.FindNode(e.source)->kind;
    const std::string& dst_kind = model.FindNode(e.target)->kind;
    bool legal = std::any_of(
        kind->endpoints.begin(), kind->endpoints.end(), [&](const auto& p) {
          return p.first == src_kind && p.second == dst_kind;
        });
    if (!legal) {
      issues.push_back(MakeError("edge.endpoint",
                                 "'" + e.kind + "' may not connect '" +
                                     src_kind + "' to '" + dst_kind + "'",
                                 e.id));
    }
  }

  for (const Node& n : model.nodes()) {
    for (const auto& ek : meta.edge_kinds()) {
      if (auto it = ek.outgoing.find(n.kind); it != ek.outgoing.end()) {
        CheckBounds(it->second, model.Outgoing(n.id, ek.name).size(),
                    "cardinality.outgoing", "outgoing '" + ek.name + "' edges",
                    n.id, issues);
      }
      if (auto it = ek.incoming.find(n.kind); it != ek.incoming.end()) {
        CheckBounds(it->second, model.Incoming(n.id, ek.name).size(),
                    "cardinality.incoming", "incoming '" + ek.name + "' edges",
                    n.id, issues);
      }
    }
  }

  SortIssues(issues);
  return issues;
}

}  // namespace ldekit::graph
