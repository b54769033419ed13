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
#include <cctype>
#include <set>

#include "ldekit/dataflow/dataflow.h"
#include "ldekit/error.h"
#include "ldekit/graph/topological_order.h"

namespace ldekit::dataflow {

using graph::EdgeKindSpec;
using graph::GraphModel;
using graph::MakeError;
using graph::Node;
using graph::NodeKindSpec;
using graph::PropertySchema;
using graph::ValidationIssue;
using graph::ValueTag;

const graph::Metamodel& DataflowMetamodel() {
  static const graph::Metamodel* meta = [] {
    const PropertySchema name{"name", {ValueTag::kText}, false};
    const std::set<std::string> owners = {"functionNode", "subprocessNode"};
    auto port = [&](const char* kind) {
      return NodeKindSpec{kind,
                          {{"name", {ValueTag::kText}, true},
                           {"portType", {ValueTag::kText}, false}},
                          false,
                          true,
                          owners};
    };
    std::vector<NodeKindSpec> nodes = {
        {"functionNode", {name, {"signatureRef", {ValueTag::kText}, true}},
         false, true, {}},
        {"subprocessNode", {name, {"modelRef", {ValueTag::kText}, true}}, false,
         true, {}},
        port("inputPort"),
        port("outputPort"),
    };
    // Which pairs are legal depends on nesting; see flow.direction.
    EdgeKindSpec flow{"dataFlow", {}, {}, false, {}, {}};
    for (const char* src : {"outputPort", "inputPort"}) {
      for (const char* dst : {"inputPort", "outputPort"}) {
        flow.endpoints.emplace_back(src, dst);
      }
    }
    return new graph::Metamodel(graph::ModelType::kDataflow, std::move(nodes),
                                {flow});
  }();
  return *meta;
}

std::string FormatType(const NominalType& type) {
  return type.is_variable ? "'" + type.name : type.name;
}

namespace {

bool IsIdentifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool IsStep(const Node& n) {
  return n.kind == "functionNode" || n.kind == "subprocessNode";
}

bool IsPort(const Node& n) {
  return n.kind == "inputPort" || n.kind == "outputPort";
}

const std::string& PortName(const Node& n) {
  return *graph::GetText(n.properties, "name");
}

// Producers feed data into the model's interior, consumers take it out.
bool IsProducer(const Node& port) {
  return port.parent ? port.kind == "outputPort" : port.kind == "inputPort";
}

bool IsConsumer(const Node& port) {
  return port.parent ? port.kind == "inputPort" : port.kind == "outputPort";
}

class UnionFind {
 public:
  const std::string& Find(const std::string& x) {
    auto it = parent_.find(x);
    if (it == parent_.end()) it = parent_.emplace(x, x).first;
    if (it->second == x) return it->first;
    const std::string& root = Find(it->second);
    it->second = root;
    return root;
  }

  void Union(const std::string& a, const std::string& b) {
    std::string ra = Find(a);
    std::string rb = Find(b);
    if (ra == rb) return;
    // Smallest id becomes the representative, independent of call order.
    if (rb < ra) std::swap(ra, rb);
    parent_[rb] = ra;
  }

 private:
  std::map<std::string, std::string> parent_;
};

struct StepPorts {
  // Expected port name to its type on this instance.
  std::map<std::string, NominalType> inputs;
  std::map<std::string, NominalType> outputs;
  bool known = true;
};

FlowAnalysis Analyze(const GraphModel& model, const SignatureTable& signatures,
                     const ModelTable& submodels,
                     std::vector<std::string>& stack);

std::map<std::string, StepPorts> ResolveSteps(const GraphModel& model,
                                              const SignatureTable& signatures,
                                              const ModelTable& submodels,
                                              std::vector<std::string>& stack,
                                              std::vector<ValidationIssue>& issues) {
  std::map<std::string, StepPorts> out;
  for (const Node& n : model.nodes()) {
    if (!IsStep(n)) continue;
    StepPorts& ports = out[n.id];
    if (n.kind == "functionNode") {
      const std::string& ref = *graph::GetText(n.properties, "signatureRef");
      auto sig = signatures.find(ref);
      if (sig == signatures.end()) {
        throw Error(ErrorCode::kUnknownSignature,
                    "node '" + n.id + "' references unknown function '" + ref +
                        "'");
      }
      for (const auto& p : sig->second.inputs) {
        ports.inputs[p.name] = {p.type, false};
      }
      ports.outputs[sig->second.output.name] = {sig->second.output.type, false};
      continue;
    }
    const std::string& ref = *graph::GetText(n.properties, "modelRef");
    auto sub = submodels.find(ref);
    if (sub == submodels.end()) {
      throw Error(ErrorCode::kUnknownSubmodel,
                  "node '" + n.id + "' references unknown model '" + ref + "'");
    }
    if (ref == model.id() ||
        std::find(stack.begin(), stack.end(), ref) != stack.end()) {
      issues.push_back(MakeError("subprocess.recursive",
                                 "model '" + ref + "' contains itself", n.id));
      ports.known = false;
      continue;
    }
    stack.push_back(model.id());
    FlowAnalysis inner = Analyze(sub->second, signatures, submodels, stack);
    stack.pop_back();
    if (graph::HasErrors(inner.issues)) {
      issues.push_back(MakeError("subprocess.invalid",
                                 "model '" + ref + "' has errors", n.id));
    }
    for (const Node& p : sub->second.nodes()) {
      if (!IsPort(p) || p.parent) continue;
      NominalType type = inner.port_types.at(p.id);
      // Fresh variables per instance, shared where the inner model shares.
      if (type.is_variable) type.name = n.id + "/" + type.name;
      (p.kind == "inputPort" ? ports.inputs : ports.outputs)[PortName(p)] = type;
    }
  }
  return out;
}

FlowAnalysis Analyze(const GraphModel& model, const SignatureTable& signatures,
                     const ModelTable& submodels,
                     std::vector<std::string>& stack) {
  FlowAnalysis result;
  auto& issues = result.issues;
  auto steps = ResolveSteps(model, signatures, submodels, stack, issues);

  UnionFind uf;
  std::map<std::string, std::set<std::string>> own;  // port id to concrete types
  std::set<std::pair<std::string, std::string>> seen_names;
  for (const Node& n : model.nodes()) {
    if (IsStep(n) && !IsIdentifier(n.id)) {
      issues.push_back(MakeError("step.id",
                                 "node id must be an identifier to name its "
                                 "result",
                                 n.id));
    }
    if (!IsPort(n)) continue;
    uf.Find(n.id);
    const std::string& name = PortName(n);
    if (!seen_names.emplace(n.parent.value_or("") + "\n" + n.kind, name).second) {
      issues.push_back(
          MakeError("port.duplicate", "port name '" + name + "' is used twice", n.id));
    }
    if (const std::string* t = graph::GetText(n.properties, "portType")) {
      own[n.id].insert(*t);
    }
    if (!n.parent) {
      if (n.kind == "inputPort" && !IsIdentifier(name)) {
        issues.push_back(MakeError(
            "port.name", "boundary input name must be an identifier", n.id));
      }
      continue;
    }
    const StepPorts& ports = steps.at(*n.parent);
    if (!ports.known) continue;
    const auto& expected = n.kind == "inputPort" ? ports.inputs : ports.outputs;
    auto it = expected.find(name);
    if (it == expected.end()) {
      issues.push_back(MakeError("port.unknown",
                                 "node '" + *n.parent + "' has no " + n.kind +
                                     " named '" + name + "'",
                                 n.id));
    } else if (it->second.is_variable) {
      uf.Union(n.id, "\n" + it->second.name);
    } else {
      own[n.id].insert(it->second.name);
    }
  }
  for (const auto& [port, types] : own) {
    if (types.size() > 1) {
      std::string list;
      for (const auto& t : types) list += (list.empty() ? "" : ", ") + t;
      issues.push_back(MakeError("port.type",
                                 "port is annotated with conflicting types " + list,
                                 port));
    }
  }

  // Missing input ports count as unconnected inputs.
  for (const auto& [id, ports] : steps) {
    if (!ports.known) continue;
    for (const auto& [name, type] : ports.inputs) {
      bool present = false;
      for (const Node* c : model.Children(id)) {
        present |= c->kind == "inputPort" && PortName(*c) == name;
      }
      if (!present) {
        issues.push_back(MakeError("input.unconnected",
                                   "input '" + name + "' has no port", id));
      }
    }
  }

  std::vector<const graph::Edge*> flows;
  std::map<std::string, int> fan_in;
  std::vector<std::pair<std::string, std::string>> step_edges;
  for (const graph::Edge& e : model.edges()) {
    const Node& src = *model.FindNode(e.source);
    const Node& dst = *model.FindNode(e.target);
    if (!IsProducer(src) || !IsConsumer(dst)) {
      issues.push_back(MakeError(
          "flow.direction",
          "data must flow from a node output or model input to a node input "
          "or model output",
          e.id));
      continue;
    }
    flows.push_back(&e);
    uf.Union(e.source, e.target);
    ++fan_in[e.target];
    if (src.parent && dst.parent) step_edges.emplace_back(*src.parent, *dst.parent);
  }
  for (const Node& n : model.nodes()) {
    if (!IsPort(n) || !IsConsumer(n)) continue;
    int count = fan_in[n.id];
    if (count == 0) {
      issues.push_back(
          MakeError("input.unconnected", "port has no incoming data flow", n.id));
    } else if (count > 1) {
      issues.push_back(MakeError(
          "input.fanin",
          "port has " + std::to_string(count) + " incoming data flows", n.id));
    }
  }

  // Type check per component; the verdict does not depend on edge order.
  std::map<std::string, std::set<std::string>> component_types;
  std::map<std::string, std::string> component_name;
  for (const Node& n : model.nodes()) {
    if (!IsPort(n)) continue;
    const std::string root = uf.Find(n.id);
    auto& types = component_types[root];
    if (own.count(n.id)) types.insert(own[n.id].begin(), own[n.id].end());
    if (!component_name.count(root)) component_name[root] = n.id;
  }
  std::set<std::string> reported;
  for (const graph::Edge* e : flows) {
    const auto& a = own[e->source];
    const auto& b = own[e->target];
    if (a.size() == 1 && b.size() == 1 && *a.begin() != *b.begin()) {
      issues.push_back(MakeError("type.mismatch",
                                 *a.begin() + " flows into " + *b.begin(), e->id));
      reported.insert(uf.Find(e->source));
    }
  }
  for (const auto& [root, types] : component_types) {
    if (types.size() <= 1 || reported.count(root)) continue;
    std::string list;
    for (const auto& t : types) list += (list.empty() ? "" : ", ") + t;
    std::string where = component_name[root];
    for (const graph::Edge* e : flows) {
      if (uf.Find(e->source) == root) {
        where = e->id;
        break;
      }
    }
    issues.push_back(MakeError("type.mismatch",
                               "connected ports mix types " + list, where));
  }
  for (const Node& n : model.nodes()) {
    if (!IsPort(n)) continue;
    const std::string root = uf.Find(n.id);
    const auto& types = component_types[root];
    result.port_types[n.id] = types.size() == 1
                                  ? NominalType{*types.begin(), false}
                                  : NominalType{component_name[root], true};
  }

  std::vector<std::string> step_ids;
  for (const auto& [id, ports] : steps) step_ids.push_back(id);
  try {
    graph::TopologicalOrder(step_ids, step_edges);
  } catch (const CycleError& e) {
    std::string path;
    for (const auto& id : e.witness()) path += id + " -> ";
    issues.push_back(MakeError("flow.cycle", "data flow cycle " + path +
                                                 e.witness().front(),
                               e.witness().front()));
  }

  graph::SortIssues(issues);
  return result;
}

// Function and subprocess nodes ordered by the data flowing between them.
std::vector<std::string> StepOrder(const GraphModel& m) {
  std::vector<std::string> step_ids;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Node& n : m.nodes()) {
    if (IsStep(n)) step_ids.push_back(n.id);
  }
  for (const graph::Edge& e : m.edges()) {
    const Node& src = *m.FindNode(e.source);
    const Node& dst = *m.FindNode(e.target);
    if (src.parent && dst.parent) edges.emplace_back(*src.parent, *dst.parent);
  }
  return graph::TopologicalOrder(step_ids, edges);
}

// Flattening state for one model level.
struct Level {
  const GraphModel& model;
  std::string prefix;
  std::map<std::string, ArgSource> inputs;  // boundary input name to source
};

std::map<std::string, ArgSource> PlanLevel(const Level& level,
                                           const SignatureTable& signatures,
                                           const ModelTable& submodels,
                                           std::vector<PlanStep>& steps) {
  const GraphModel& m = level.model;
  std::map<std::string, std::map<std::string, ArgSource>> sub_outputs;

  auto resolve = [&](const Node& consumer) -> ArgSource {
    const graph::Edge* in = m.Incoming(consumer.id, "dataFlow").front();
    const Node& src = *m.FindNode(in->source);
    if (!src.parent) return level.inputs.at(PortName(src));
    const Node& owner = *m.FindNode(*src.parent);
    if (owner.kind == "functionNode") {
      return {ArgSource::Kind::kStep, level.prefix + owner.id};
    }
    return sub_outputs.at(owner.id).at(PortName(src));
  };
  auto input_port = [&](const std::string& step, const std::string& name) {
    for (const Node* c : m.Children(step)) {
      if (c->kind == "inputPort" && PortName(*c) == name) return c;
    }
    return static_cast<const Node*>(nullptr);
  };

  for (const auto& id : StepOrder(m)) {
    const Node& n = *m.FindNode(id);
    if (n.kind == "functionNode") {
      const FunctionSignature& sig =
          signatures.find(*graph::GetText(n.properties, "signatureRef"))->second;
      PlanStep step{level.prefix + id, sig.name, {}};
      for (const auto& p : sig.inputs) {
        step.arguments.emplace_back(p.name, resolve(*input_port(id, p.name)));
      }
      steps.push_back(std::move(step));
      continue;
    }
    const GraphModel& inner =
        submodels.find(*graph::GetText(n.properties, "modelRef"))->second;
    Level sub{inner, level.prefix + id + "__", {}};
    for (const Node& p : inner.nodes()) {
      if (p.kind == "inputPort" && !p.parent) {
        sub.inputs[PortName(p)] = resolve(*input_port(id, PortName(p)));
      }
    }
    sub_outputs[id] = PlanLevel(sub, signatures, submodels, steps);
  }

  std::map<std::string, ArgSource> outputs;
  for (const Node& p : m.nodes()) {
    if (p.kind == "outputPort" && !p.parent) outputs[PortName(p)] = resolve(p);
  }
  return outputs;
}

}  // namespace

FlowAnalysis AnalyzeFlow(const GraphModel& model,
                         const SignatureTable& signatures,
                         const ModelTable& submodels) {
  std::vector<std::string> stack;
  return Analyze(model, signatures, submodels, stack);
}

std::vector<ValidationIssue> ValidateFlow(const GraphModel& model,
                                          const SignatureTable& signatures,
                                          const ModelTable& submodels) {
  return AnalyzeFlow(model, signatures, submodels).issues;
}

ControlFlowPlan OrderNodes(const GraphModel& model,
                           const SignatureTable& signatures,
                           const ModelTable& submodels) {
  auto issues = graph::ValidateStructure(model, DataflowMetamodel());
  if (!graph::HasErrors(issues)) {
    auto more = ValidateFlow(model, signatures, submodels);
    for (const auto& i : more) {
      // Surface cycles the way topological ordering reports them.
      if (i.rule_id == "flow.cycle") StepOrder(model);
    }
    issues.insert(issues.end(), more.begin(), more.end());
  }
  if (graph::HasErrors(issues)) {
    std::string message = "dataflow '" + model.id() + "' is invalid:";
    for (const auto& i : issues) {
      if (i.severity == graph::Severity::kError) {
        message += "\n  " + graph::FormatIssue(i);
      }
    }
    throw Error(ErrorCode::kInvalidModel, message);
  }

  ControlFlowPlan plan;
  plan.model_id = model.id();
  Level root{model, "", {}};
  for (const Node& p : model.nodes()) {
    if (p.kind == "inputPort" && !p.parent) {
      root.inputs[PortName(p)] = {ArgSource::Kind::kExternal, PortName(p)};
    }
  }
  auto outputs = PlanLevel(root, signatures, submodels, plan.steps);
  if (!outputs.empty()) {
    plan.sinks.assign(outputs.begin(), outputs.end());
    return plan;
  }
  std::set<std::string> consumed;
  for (const auto& s : plan.steps) {
    for (const auto& [name, src] : s.arguments) {
      if (src.kind == ArgSource::Kind::kStep) consumed.insert(src.name);
    }
  }
  for (const auto& s : plan.steps) {
    if (!consumed.count(s.id)) {
      plan.sinks.emplace_back(s.id, ArgSource{ArgSource::Kind::kStep, s.id});
    }
  }
  return plan;
}

std::string EmitHostScript(const ControlFlowPlan& plan) {
  auto ref = [](const ArgSource& s) {
    return s.kind == ArgSource::Kind::kStep ? "r_" + s.name : s.name;
  };
  std::string out =
      "# generated by ldekit from dataflow model '" + plan.model_id + "'\n";
  for (const auto& step : plan.steps) {
    out += "r_" + step.id + " = " + step.function + "(";
    for (std::size_t i = 0; i < step.arguments.size(); ++i) {
      if (i > 0) out += ", ";
      out += ref(step.arguments[i].second);
    }
    out += ")\n";
  }
  if (!plan.sinks.empty()) {
    out += "print(";
    for (std::size_t i = 0; i < plan.sinks.size(); ++i) {
      if (i > 0) out += ", ";
      out += ref(plan.sinks[i].second);
    }
    out += ")\n";
  }
  return out;
}

}  // namespace ldekit::dataflow
