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

#include <charconv>
#include <deque>
#include <map>
#include <set>

#include "ldekit/error.h"
#include "ldekit/graph/topological_order.h"
#include "ldekit/webstory/webstory.h"

namespace ldekit::webstory {

using graph::Cardinality;
using graph::EdgeKindSpec;
using graph::GraphModel;
using graph::MakeError;
using graph::MakeWarning;
using graph::Metamodel;
using graph::ModelType;
using graph::Node;
using graph::NodeKindSpec;
using graph::PropertySchema;
using graph::ValidationIssue;
using graph::ValueTag;

const Metamodel& WebStoryMetamodel() {
  static const Metamodel* meta = [] {
    const PropertySchema name{"name", {ValueTag::kText}, false};
    std::vector<NodeKindSpec> nodes = {
        {"screen", {name, {"backgroundImage", {ValueTag::kText}, false}}, false,
         true, {}},
        {"clickArea",
         {name, {"rect", {ValueTag::kText}, true},
          {"label", {ValueTag::kText}, false}},
         false,
         false,
         {"screen"}},
        {"startMarker", {name}, false, true, {}},
        {"variable",
         {{"name", {ValueTag::kText}, true},
          {"initial", {ValueTag::kBoolean}, false}},
         false,
         true,
         {}},
        {"variableModifier",
         {name, {"targetValue", {ValueTag::kBoolean}, true}},
         false,
         true,
         {}},
        {"condition", {name}, false, true, {}},
    };
    // Upper bounds only; missing edges get their own rules below.
    const Cardinality at_most_one{0, 1};
    EdgeKindSpec control{"controlFlow", {}, {}, false, {}, {}};
    control.endpoints = {{"startMarker", "screen"}};
    for (const char* src : {"clickArea", "variableModifier"}) {
      for (const char* dst : {"screen", "condition", "variableModifier"}) {
        control.endpoints.emplace_back(src, dst);
      }
      control.outgoing[src] = at_most_one;
    }
    control.outgoing["startMarker"] = at_most_one;
    auto branch = [&](const char* kind) {
      EdgeKindSpec e{kind, {}, {}, false, {}, {}};
      for (const char* dst : {"screen", "condition", "variableModifier"}) {
        e.endpoints.emplace_back("condition", dst);
      }
      e.outgoing["condition"] = at_most_one;
      return e;
    };
    EdgeKindSpec read{"dataRead", {{"condition", "variable"}}, {}, false,
                      {{"condition", at_most_one}}, {}};
    EdgeKindSpec write{"dataWrite", {{"variableModifier", "variable"}}, {},
                       false, {{"variableModifier", at_most_one}}, {}};
    return new Metamodel(ModelType::kWebstory, std::move(nodes),
                         {control, branch("trueFlow"), branch("falseFlow"),
                          read, write});
  }();
  return *meta;
}

namespace {

bool ParseRect(const std::string& text) {
  int values[4];
  const char* p = text.data();
  const char* end = p + text.size();
  for (int i = 0; i < 4; ++i) {
    while (p < end && *p == ' ') ++p;
    auto [next, ec] = std::from_chars(p, end, values[i]);
    if (ec != std::errc()) return false;
    p = next;
    while (p < end && *p == ' ') ++p;
    if (i < 3) {
      if (p == end || *p != ',') return false;
      ++p;
    }
  }
  return p == end && values[0] >= 0 && values[1] >= 0 && values[2] > 0 &&
         values[3] > 0;
}

std::size_t CountOut(const GraphModel& m, const std::string& id,
                     std::string_view kind) {
  return m.Outgoing(id, kind).size();
}

bool IsChainKind(std::string_view kind) {
  return kind == "condition" || kind == "variableModifier";
}

}  // namespace

std::vector<ValidationIssue> ValidateWebStory(const GraphModel& model) {
  std::vector<ValidationIssue> issues;

  std::vector<const Node*> starts;
  std::map<std::string, std::string> variable_names;
  for (const Node& n : model.nodes()) {
    if (n.kind == "startMarker") {
      starts.push_back(&n);
      if (CountOut(model, n.id, "controlFlow") == 0) {
        issues.push_back(MakeError(
            "start.target", "start marker has no control flow to a screen", n.id));
      }
    } else if (n.kind == "clickArea") {
      if (CountOut(model, n.id, "controlFlow") == 0) {
        issues.push_back(MakeError("clickarea.target",
                                   "click area leads nowhere", n.id));
      }
      const std::string* rect = graph::GetText(n.properties, "rect");
      if (rect != nullptr && !ParseRect(*rect)) {
        issues.push_back(MakeError(
            "rect.format", "rect must be 'x,y,w,h' with w and h positive, got '" +
                               *rect + "'",
            n.id));
      }
    } else if (n.kind == "condition") {
      for (const char* flow : {"trueFlow", "falseFlow"}) {
        if (CountOut(model, n.id, flow) == 0) {
          issues.push_back(MakeError("condition.branch.missing",
                                     std::string("condition has no ") + flow,
                                     n.id));
        }
      }
      if (CountOut(model, n.id, "dataRead") == 0) {
        issues.push_back(MakeError("condition.variable",
                                   "condition reads no variable", n.id));
      }
    } else if (n.kind == "variableModifier") {
      if (CountOut(model, n.id, "controlFlow") == 0) {
        issues.push_back(MakeError("modifier.target",
                                   "variable modifier leads nowhere", n.id));
      }
      if (CountOut(model, n.id, "dataWrite") == 0) {
        issues.push_back(MakeError("modifier.variable",
                                   "variable modifier writes no variable", n.id));
      }
    } else if (n.kind == "variable") {
      const std::string* name = graph::GetText(n.properties, "name");
      if (name == nullptr) continue;
      if (name->empty()) {
        issues.push_back(
            MakeError("variable.name", "variable name is empty", n.id));
        continue;
      }
      auto [it, fresh] = variable_names.emplace(*name, n.id);
      if (!fresh) {
        issues.push_back(MakeError("variable.duplicate",
                                   "variable '" + *name + "' already declared by " +
                                       it->second,
                                   n.id));
      }
    }
  }
  if (starts.size() != 1) {
    issues.push_back(MakeError(
        "start.count",
        "story needs exactly one start marker, found " +
            std::to_string(starts.size())));
  }

  // Chains between screens run through conditions and modifiers only.
  std::vector<std::string> chain_nodes;
  std::vector<std::pair<std::string, std::string>> chain_edges;
  for (const Node& n : model.nodes()) {
    if (IsChainKind(n.kind)) chain_nodes.push_back(n.id);
  }
  for (const graph::Edge& e : model.edges()) {
    if (e.kind != "controlFlow" && e.kind != "trueFlow" &&
        e.kind != "falseFlow") {
      continue;
    }
    const Node* src = model.FindNode(e.source);
    const Node* dst = model.FindNode(e.target);
    if (IsChainKind(src->kind) && IsChainKind(dst->kind)) {
      chain_edges.emplace_back(e.source, e.target);
    }
  }
  try {
    graph::TopologicalOrder(chain_nodes, chain_edges);
  } catch (const CycleError& e) {
    std::string path;
    for (const auto& id : e.witness()) path += id + " -> ";
    issues.push_back(MakeError("chain.cycle",
                               "control flow cycle without a screen: " + path +
                                   e.witness().front(),
                               e.witness().front()));
  }

  // Unreachable under every valuation: both branches of each condition are
  // assumed possible.
  if (starts.size() == 1) {
    std::set<std::string> seen;
    std::deque<std::string> queue;
    for (const graph::Edge* e : model.Outgoing(starts[0]->id, "controlFlow")) {
      queue.push_back(e->target);
    }
    while (!queue.empty()) {
      std::string id = queue.front();
      queue.pop_front();
      if (!seen.insert(id).second) continue;
      const Node* n = model.FindNode(id);
      std::vector<std::string> sources = {id};
      if (n->kind == "screen") {
        sources.clear();
        for (const Node* c : model.Children(id)) sources.push_back(c->id);
      }
      for (const auto& s : sources) {
        for (const graph::Edge* e : model.Outgoing(s)) {
          if (e->kind == "controlFlow" || e->kind == "trueFlow" ||
              e->kind == "falseFlow") {
            queue.push_back(e->target);
          }
        }
      }
    }
    for (const Node& n : model.nodes()) {
      if (n.kind == "screen" && !seen.count(n.id)) {
        issues.push_back(MakeWarning("screen.unreachable",
                                     "screen can never be reached", n.id));
      }
    }
  }

  graph::SortIssues(issues);
  return issues;
}

}  // namespace ldekit::webstory
