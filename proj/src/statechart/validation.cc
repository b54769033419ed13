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

#include <algorithm>
#include <map>

#include "ldekit/expr/parser.h"
#include "ldekit/expr/typecheck.h"
#include "ldekit/error.h"
#include "ldekit/statechart/statechart.h"

namespace ldekit::statechart {

using graph::Cardinality;
using graph::EdgeKindSpec;
using graph::GraphModel;
using graph::MakeError;
using graph::MakeInfo;
using graph::MakeWarning;
using graph::Metamodel;
using graph::ModelType;
using graph::Node;
using graph::NodeKindSpec;
using graph::PropertySchema;
using graph::ValidationIssue;
using graph::ValueTag;

const Metamodel& StatechartMetamodel() {
  static const Metamodel* meta = [] {
    const std::set<std::string> scopes = {"hierarchicalState", "region"};
    const PropertySchema name{"name", {ValueTag::kText}, false};
    auto vertex = [&](std::string kind) {
      return NodeKindSpec{std::move(kind), {name}, false, true, scopes};
    };
    std::vector<NodeKindSpec> nodes = {
        vertex("start"),
        vertex("end"),
        vertex("state"),
        vertex("hierarchicalState"),
        vertex("concurrentState"),
        {"region", {name}, false, false, {"concurrentState"}},
        vertex("decision"),
        // Placement beyond these parents is reported as history.placement.
        {"history", {name}, false, true,
         {"hierarchicalState", "region", "concurrentState"}},
        {"declarations", {name}, false, true, {}},
        {"variable",
         {{"name", {ValueTag::kText}, true},
          {"varType", {ValueTag::kText}, true},
          {"initial", {ValueTag::kBoolean, ValueTag::kInteger}, false}},
         false,
         false,
         {"declarations"}},
        {"trigger", {{"name", {ValueTag::kText}, true}}, false, false,
         {"declarations"}},
    };
    EdgeKindSpec transition;
    transition.name = "transition";
    for (const char* src : {"start", "state", "hierarchicalState",
                            "concurrentState", "decision"}) {
      for (const char* dst : {"end", "state", "hierarchicalState",
                              "concurrentState", "decision", "history"}) {
        transition.endpoints.emplace_back(src, dst);
      }
    }
    transition.properties = {{"trigger", {ValueTag::kText}, false},
                             {"guard", {ValueTag::kText}, false},
                             {"action", {ValueTag::kText}, false}};
    transition.outgoing["start"] = Cardinality{1, 1};
    return new Metamodel(ModelType::kStatechart, std::move(nodes),
                         {std::move(transition)});
  }();
  return *meta;
}

namespace {

bool IsVertex(const std::string& kind) {
  static const std::set<std::string> kVertices = {
      "start", "end", "state", "hierarchicalState", "concurrentState",
      "decision", "history"};
  return kVertices.contains(kind);
}

// Parent id or "" for top-level.
std::string ScopeOf(const Node& n) { return n.parent.value_or(""); }

std::vector<std::string> Ancestors(const GraphModel& m, const std::string& id) {
  std::vector<std::string> out;
  const Node* cur = m.FindNode(id);
  while (cur != nullptr && cur->parent) {
    out.push_back(*cur->parent);
    cur = m.FindNode(*cur->parent);
  }
  return out;
}

std::string CommonScope(const GraphModel& m, const std::string& a,
                        const std::string& b) {
  auto up_a = Ancestors(m, a);
  auto up_b = Ancestors(m, b);
  for (const auto& x : up_a) {
    if (std::find(up_b.begin(), up_b.end(), x) != up_b.end()) return x;
  }
  return "";
}

bool IsIdentifier(const std::string& name) {
  try {
    auto e = expr::ParseExpression(name);
    const auto* v = std::get_if<expr::VarRef>(&e.node().v);
    return v != nullptr && v->name == name;
  } catch (const ParseError&) {
    return false;
  }
}

bool IsTrueLiteral(const expr::Expression& e) {
  const auto* b = std::get_if<expr::BoolLiteral>(&e.node().v);
  return b != nullptr && b->value;
}

void Retag(std::vector<ValidationIssue>& issues, const std::string& element,
           const std::string& prefix, std::vector<ValidationIssue>& out) {
  for (auto& i : issues) {
    i.element_id = element;
    i.message = prefix + i.message;
    out.push_back(std::move(i));
  }
}

}  // namespace

std::vector<ValidationIssue> ValidateStatechart(const GraphModel& model) {
  std::vector<ValidationIssue> issues;

  // Declarations.
  expr::Schema schema;
  std::set<std::string> triggers;
  for (const Node& n : model.nodes()) {
    if (n.kind == "variable") {
      const std::string* name = graph::GetText(n.properties, "name");
      const std::string* type = graph::GetText(n.properties, "varType");
      if (name == nullptr || type == nullptr) continue;
      if (!IsIdentifier(*name)) {
        issues.push_back(MakeError(
            "variable.name", "'" + *name + "' is not a valid variable name",
            n.id));
        continue;
      }
      expr::Type t;
      if (*type == "boolean") {
        t = expr::Type::kBoolean;
      } else if (*type == "integer") {
        t = expr::Type::kInteger;
      } else {
        issues.push_back(MakeError(
            "variable.type",
            "varType must be 'boolean' or 'integer', found '" + *type + "'",
            n.id));
        continue;
      }
      auto it = n.properties.find("initial");
      if (it != n.properties.end()) {
        bool is_bool = graph::TagOf(it->second) == ValueTag::kBoolean;
        if (is_bool != (t == expr::Type::kBoolean)) {
          issues.push_back(MakeError(
              "variable.initial",
              "initial value does not match varType '" + *type + "'", n.id));
        }
      }
      if (!schema.emplace(*name, t).second) {
        issues.push_back(MakeError("variable.duplicate",
                                   "variable '" + *name + "' declared twice",
                                   n.id));
      }
    } else if (n.kind == "trigger") {
      const std::string* name = graph::GetText(n.properties, "name");
      if (name == nullptr) continue;
      if (!triggers.insert(*name).second) {
        issues.push_back(MakeError("trigger.duplicate",
                                   "trigger '" + *name + "' declared twice",
                                   n.id));
      }
    }
  }

  // Scopes: the root, every hierarchicalState and every region.
  std::map<std::string, std::vector<const Node*>> scope_members;
  scope_members[""];
  for (const Node& n : model.nodes()) {
    if (n.kind == "hierarchicalState" || n.kind == "region") {
      scope_members[n.id];
    }
  }
  for (const Node& n : model.nodes()) {
    if (IsVertex(n.kind)) scope_members[ScopeOf(n)].push_back(&n);
  }
  for (const auto& [scope, members] : scope_members) {
    if (!scope.empty() && model.FindNode(scope)->kind == "concurrentState") {
      continue;
    }
    auto starts = std::count_if(members.begin(), members.end(),
                                [](const Node* n) { return n->kind == "start"; });
    auto histories = std::count_if(
        members.begin(), members.end(),
        [](const Node* n) { return n->kind == "history"; });
    std::optional<std::string> element;
    if (!scope.empty()) element = scope;
    if (starts != 1) {
      issues.push_back(MakeError(
          "start.count",
          "expected exactly one start node in " +
              (scope.empty() ? std::string("the top level")
                             : "'" + scope + "'") +
              ", found " + std::to_string(starts),
          element));
    }
    if (histories > 1) {
      issues.push_back(MakeError("history.duplicate",
                                 "more than one history node in scope",
                                 element));
    }
  }
  for (const Node& n : model.nodes()) {
    if (n.kind != "history") continue;
    const Node* parent = n.parent ? model.FindNode(*n.parent) : nullptr;
    if (parent == nullptr ||
        (parent->kind != "hierarchicalState" && parent->kind != "region")) {
      issues.push_back(MakeError(
          "history.placement",
          "history nodes must be placed inside a hierarchicalState or region",
          n.id));
    }
  }

  for (const Node& n : model.nodes()) {
    if (n.kind != "hierarchicalState" && n.kind != "concurrentState" &&
        n.kind != "state") {
      continue;
    }
    std::size_t untriggered = 0;
    for (const auto* e : model.Outgoing(n.id, "transition")) {
      if (graph::GetText(e->properties, "trigger") == nullptr) ++untriggered;
    }
    if (n.kind == "state") {
      if (untriggered > 0) {
        issues.push_back(MakeWarning(
            "transition.untriggered",
            "untriggered transitions out of a simple state never fire", n.id));
      }
    } else if (untriggered > 1) {
      issues.push_back(MakeError(
          "default.duplicate",
          "composite state has " + std::to_string(untriggered) +
              " untriggered outgoing transitions; at most one default "
              "transition is allowed",
          n.id));
    }
  }

  for (const Node& n : model.nodes()) {
    if (n.kind != "decision") continue;
    auto out = model.Outgoing(n.id, "transition");
    bool any_guarded = false;
    bool trivially_exhaustive = false;
    for (const auto* e : out) {
      const std::string* guard = graph::GetText(e->properties, "guard");
      if (guard == nullptr) {
        trivially_exhaustive = true;
        continue;
      }
      any_guarded = true;
      try {
        if (IsTrueLiteral(expr::ParseExpression(*guard))) {
          trivially_exhaustive = true;
        }
      } catch (const ParseError&) {
      }
    }
    if (!any_guarded) {
      issues.push_back(MakeError(
          "decision.outgoing",
          "decision needs at least one outgoing guarded transition", n.id));
    } else if (!trivially_exhaustive) {
      issues.push_back(MakeInfo(
          "decision.exhaustive",
          "guard exhaustiveness cannot be decided statically; a step with no "
          "true guard stops with StuckAtDecision",
          n.id));
    }
  }

  for (const graph::Edge& e : model.edges()) {
    if (e.kind != "transition") continue;
    const Node* src = model.FindNode(e.source);
    const Node* dst = model.FindNode(e.target);
    const std::string* trigger = graph::GetText(e.properties, "trigger");
    const std::string* guard = graph::GetText(e.properties, "guard");
    const std::string* action = graph::GetText(e.properties, "action");

    if (!IsVertex(dst->kind) || dst->kind == "start") {
      issues.push_back(MakeError("transition.target",
                                 "transitions may not target a '" + dst->kind +
                                     "' node",
                                 e.id));
    }
    if (src->kind == "start") {
      if (trigger != nullptr || guard != nullptr) {
        issues.push_back(MakeError(
            "start.triggered",
            "transitions out of a start node take no trigger or guard", e.id));
      }
      if (ScopeOf(*src) != ScopeOf(*dst) || dst->kind == "history") {
        issues.push_back(MakeError(
            "start.target",
            "a start transition must target a non-history node in its own "
            "scope",
            e.id));
      }
    }
    if (src->kind == "decision" && trigger != nullptr) {
      issues.push_back(MakeError(
          "decision.triggered",
          "transitions out of a decision node take no trigger", e.id));
    }
    std::string common = CommonScope(model, e.source, e.target);
    if (!common.empty() && model.FindNode(common)->kind == "concurrentState") {
      issues.push_back(MakeError(
          "transition.cross_region",
          "transitions may not connect two regions of '" + common + "'",
          e.id));
    }

    if (trigger != nullptr && !triggers.contains(*trigger)) {
      issues.push_back(MakeError("trigger.undeclared",
                                 "undeclared trigger '" + *trigger + "'", e.id));
    }
    if (guard != nullptr) {
      try {
        auto g = expr::ParseExpression(*guard);
        auto found = expr::TypecheckGuard(g, schema);
        Retag(found, e.id, "guard: ", issues);
      } catch (const ParseError& err) {
        issues.push_back(
            MakeError("expr.parse", std::string("guard: ") + err.what(), e.id));
      }
    }
    if (action != nullptr) {
      try {
        auto a = expr::ParseActions(*action);
        auto found = expr::TypecheckActions(a, schema);
        Retag(found, e.id, "action: ", issues);
      } catch (const ParseError& err) {
        issues.push_back(MakeError("expr.parse",
                                   std::string("action: ") + err.what(), e.id));
      }
    }
  }

  graph::SortIssues(issues);
  return issues;
}

}  // namespace ldekit::statechart
