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
#include <map>
#include <set>

#include <json.hpp>

#include "ldekit/error.h"
#include "ldekit/graph/topological_order.h"
#include "ldekit/rig/rig.h"

namespace ldekit::rig {

using graph::EdgeKindSpec;
using graph::GraphModel;
using graph::MakeError;
using graph::Metamodel;
using graph::ModelType;
using graph::Node;
using graph::NodeKindSpec;
using graph::PropertyMap;
using graph::PropertySchema;
using graph::ValidationIssue;
using graph::ValueTag;

const Metamodel& PipelineMetamodel() {
  static const Metamodel* meta = [] {
    const PropertySchema name{"name", {ValueTag::kText}, false};
    const PropertySchema script{"scriptTemplate", {ValueTag::kTextList}, false};
    const PropertySchema image{"image", {ValueTag::kText}, false};
    std::vector<NodeKindSpec> nodes = {
        {"job", {script, image}, true, true, {}},
        {"target",
         {name, {"parameters", {ValueTag::kTextList}, false}},
         false,
         true,
         {}},
        {"variable",
         {{"name", {ValueTag::kText}, true},
          {"value", {ValueTag::kText}, true}},
         false,
         true,
         {}},
        {"configurationNode",
         {script, image, {"stageNames", {ValueTag::kTextList}, false}},
         true,
         true,
         {}},
    };
    std::vector<EdgeKindSpec> edges = {
        {"dependsOn", {{"job", "job"}}, {}, false, {}, {}},
        {"appliesTo", {{"target", "job"}}, {}, false, {}, {}},
        {"configures", {{"configurationNode", "job"}}, {}, false, {}, {}},
    };
    return new Metamodel(ModelType::kPipeline, std::move(nodes),
                         std::move(edges));
  }();
  return *meta;
}

namespace {

struct Target {
  std::string name;
  std::map<std::string, std::string> parameters;
};

std::string TargetName(const Node& n) {
  const std::string* name = graph::GetText(n.properties, "name");
  return name != nullptr ? *name : n.id;
}

// "key=value" lines; returns false on the first malformed entry.
bool ParseParameters(const Node& n, std::map<std::string, std::string>* out,
                     std::string* bad) {
  const graph::TextList* list = graph::GetTextList(n.properties, "parameters");
  if (list == nullptr) return true;
  for (const std::string& line : *list) {
    auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) {
      *bad = line;
      return false;
    }
    (*out)[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return true;
}

// Configuration nodes in id order, later ones overriding earlier; the job's
// own properties win.
PropertyMap EffectiveProperties(const GraphModel& m, const Node& job) {
  PropertyMap merged;
  for (const graph::Edge* e : m.Incoming(job.id, "configures")) {
    for (const auto& [k, v] : m.FindNode(e->source)->properties) {
      merged.insert_or_assign(k, v);
    }
  }
  for (const auto& [k, v] : job.properties) merged.insert_or_assign(k, v);
  return merged;
}

// Attached targets sorted by name.
std::vector<Target> TargetsOf(const GraphModel& m, const Node& job) {
  std::vector<Target> out;
  for (const graph::Edge* e : m.Incoming(job.id, "appliesTo")) {
    const Node* t = m.FindNode(e->source);
    Target target{TargetName(*t), {}};
    std::string ignored;
    ParseParameters(*t, &target.parameters, &ignored);
    out.push_back(std::move(target));
  }
  std::sort(out.begin(), out.end(),
            [](const Target& a, const Target& b) { return a.name < b.name; });
  return out;
}

std::map<std::string, std::string> Variables(const GraphModel& m) {
  std::map<std::string, std::string> vars;
  for (const Node& n : m.nodes()) {
    if (n.kind != "variable") continue;
    const std::string* name = graph::GetText(n.properties, "name");
    const std::string* value = graph::GetText(n.properties, "value");
    if (name != nullptr && value != nullptr) vars.emplace(*name, *value);
  }
  return vars;
}

enum class Subst { kOk, kMalformed, kUnresolved };

// Replaces every ${name}. On failure *what holds the offending name or text.
Subst Substitute(const std::string& text, const Target* target,
                 const std::map<std::string, std::string>& vars,
                 std::string* out, std::string* what) {
  out->clear();
  std::size_t pos = 0;
  while (true) {
    std::size_t open = text.find("${", pos);
    if (open == std::string::npos) {
      out->append(text, pos);
      return Subst::kOk;
    }
    out->append(text, pos, open - pos);
    std::size_t close = text.find('}', open + 2);
    if (close == std::string::npos || close == open + 2) {
      *what = text.substr(open);
      return Subst::kMalformed;
    }
    std::string name = text.substr(open + 2, close - open - 2);
    const std::string* value = nullptr;
    if (target != nullptr) {
      auto it = target->parameters.find(name);
      if (it != target->parameters.end()) value = &it->second;
    }
    if (value == nullptr) {
      auto it = vars.find(name);
      if (it != vars.end()) value = &it->second;
    }
    if (value == nullptr) {
      *what = name;
      return Subst::kUnresolved;
    }
    out->append(*value);
    pos = close + 1;
  }
}

std::vector<std::string> Lines(const PropertyMap& props) {
  const graph::TextList* s = graph::GetTextList(props, "scriptTemplate");
  return s != nullptr ? *s : std::vector<std::string>{};
}

const graph::TextList* DeclaredStageNames(const GraphModel& m) {
  for (const Node& n : m.nodes()) {
    if (n.kind == "configurationNode" &&
        m.Outgoing(n.id, "configures").empty()) {
      if (const auto* names = graph::GetTextList(n.properties, "stageNames")) {
        return names;
      }
    }
  }
  return nullptr;
}

// Longest-path layer per job id. Throws CycleError.
std::map<std::string, std::size_t> JobStages(const GraphModel& m) {
  std::vector<std::string> order =
      graph::TopologicalOrder(m, {"dependsOn"}, {"job"});
  std::map<std::string, std::size_t> stage;
  for (const std::string& id : order) {
    std::size_t s = 0;
    for (const graph::Edge* e : m.Incoming(id, "dependsOn")) {
      s = std::max(s, stage.at(e->source) + 1);
    }
    stage[id] = s;
  }
  return stage;
}

std::set<std::string> TargetNames(const GraphModel& m, const std::string& job) {
  std::set<std::string> names;
  for (const graph::Edge* e : m.Incoming(job, "appliesTo")) {
    names.insert(TargetName(*m.FindNode(e->source)));
  }
  return names;
}

std::string JoinNames(const std::set<std::string>& names) {
  std::string out = "{";
  for (const auto& n : names) {
    if (out.size() > 1) out += ", ";
    out += n;
  }
  return out + "}";
}

}  // namespace

std::vector<ValidationIssue> ValidatePipeline(const GraphModel& model) {
  std::vector<ValidationIssue> issues;
  const auto vars = Variables(model);

  std::map<std::string, std::string> variable_names;
  std::map<std::string, std::string> target_names;
  for (const Node& n : model.nodes()) {
    if (n.kind == "variable") {
      const std::string* name = graph::GetText(n.properties, "name");
      if (name->empty()) {
        issues.push_back(
            MakeError("variable.name", "variable name is empty", n.id));
        continue;
      }
      auto [it, fresh] = variable_names.emplace(*name, n.id);
      if (!fresh) {
        issues.push_back(MakeError(
            "variable.duplicate",
            "variable '" + *name + "' already declared by " + it->second, n.id));
      }
    } else if (n.kind == "target") {
      std::string name = TargetName(n);
      auto [it, fresh] = target_names.emplace(name, n.id);
      if (!fresh) {
        issues.push_back(MakeError(
            "target.duplicate",
            "target '" + name + "' already declared by " + it->second, n.id));
      }
      std::map<std::string, std::string> params;
      std::string bad;
      if (!ParseParameters(n, &params, &bad)) {
        issues.push_back(MakeError(
            "parameter.format",
            "parameter must be 'key=value', got '" + bad + "'", n.id));
      }
    }
  }

  for (const Node& n : model.nodes()) {
    if (n.kind != "job") continue;
    PropertyMap props = EffectiveProperties(model, n);
    std::vector<std::string> lines = Lines(props);
    if (lines.empty()) {
      issues.push_back(
          MakeError("job.script.missing", "job has no script", n.id));
    }
    if (const std::string* image = graph::GetText(props, "image")) {
      lines.push_back(*image);
    }
    std::vector<Target> targets = TargetsOf(model, n);
    std::vector<const Target*> contexts;
    for (const Target& t : targets) contexts.push_back(&t);
    if (contexts.empty()) contexts.push_back(nullptr);
    for (const Target* t : contexts) {
      for (const std::string& line : lines) {
        std::string out, what;
        switch (Substitute(line, t, vars, &out, &what)) {
          case Subst::kOk:
            break;
          case Subst::kMalformed:
            issues.push_back(MakeError(
                "placeholder.malformed",
                "unterminated or empty placeholder at '" + what + "'", n.id));
            break;
          case Subst::kUnresolved:
            issues.push_back(MakeError(
                "placeholder.unresolved",
                "'${" + what + "}' resolves to no " +
                    (t != nullptr ? "parameter of target '" + t->name + "' or "
                                  : std::string()) +
                    "variable",
                n.id));
            break;
        }
      }
    }
  }

  for (const graph::Edge& e : model.edges()) {
    if (e.kind != "dependsOn") continue;
    auto producer = TargetNames(model, e.source);
    auto consumer = TargetNames(model, e.target);
    if (!producer.empty() && !consumer.empty() && producer != consumer) {
      issues.push_back(MakeError(
          "targets.mismatch",
          e.source + " expands over " + JoinNames(producer) + " but " +
              e.target + " over " + JoinNames(consumer),
          e.id));
    }
  }

  std::size_t stage_count = 0;
  try {
    for (const auto& [id, s] : JobStages(model)) {
      stage_count = std::max(stage_count, s + 1);
    }
  } catch (const CycleError& err) {
    std::string path;
    for (const auto& id : err.witness()) path += id + " -> ";
    issues.push_back(MakeError("dag.cycle",
                               "jobs depend on each other: " + path +
                                   err.witness().front(),
                               err.witness().front()));
  }

  std::size_t pipeline_configs = 0;
  for (const Node& n : model.nodes()) {
    if (n.kind != "configurationNode") continue;
    bool attached = !model.Outgoing(n.id, "configures").empty();
    const auto* names = graph::GetTextList(n.properties, "stageNames");
    if (names == nullptr) continue;
    if (attached) {
      issues.push_back(MakeError(
          "stage.names", "stageNames only applies to a pipeline-level "
                         "configuration node (one without configures edges)",
          n.id));
    } else if (++pipeline_configs > 1) {
      issues.push_back(MakeError("stage.names",
                                 "stageNames declared more than once", n.id));
    } else if (names->size() < stage_count) {
      issues.push_back(MakeError(
          "stage.names",
          "pipeline needs " + std::to_string(stage_count) +
              " stage names, declared " + std::to_string(names->size()),
          n.id));
    }
  }

  graph::SortIssues(issues);
  return issues;
}

PipelineInstanceSet ExpandTargets(const GraphModel& model) {
  const auto vars = Variables(model);
  PipelineInstanceSet set;
  for (const Node& n : model.nodes()) {
    if (n.kind != "job") continue;
    PropertyMap props = EffectiveProperties(model, n);
    const std::vector<std::string> lines = Lines(props);
    const std::string* image = graph::GetText(props, "image");
    std::vector<Target> targets = TargetsOf(model, n);

    auto resolve = [&](const std::string& text, const Target* t) {
      std::string out, what;
      if (Substitute(text, t, vars, &out, &what) != Subst::kOk) {
        throw Error(ErrorCode::kInvalidModel,
                    "job '" + n.id + "': cannot resolve '" + what + "'");
      }
      return out;
    };
    auto make = [&](const Target* t) {
      JobInstance inst;
      inst.job = n.id;
      inst.name = t != nullptr ? n.id + ":" + t->name : n.id;
      if (t != nullptr) inst.target = t->name;
      for (const auto& line : lines) inst.script.push_back(resolve(line, t));
      if (image != nullptr) inst.image = resolve(*image, t);
      set.instances.push_back(std::move(inst));
    };
    if (targets.empty()) {
      make(nullptr);
    } else {
      for (const Target& t : targets) make(&t);
    }
  }
  std::sort(set.instances.begin(), set.instances.end(),
            [](const JobInstance& a, const JobInstance& b) {
              return a.name < b.name;
            });
  return set;
}

PipelineInstanceSet AssignStages(PipelineInstanceSet set,
                                 const GraphModel& model) {
  const auto stages = JobStages(model);
  std::size_t count = 0;
  for (JobInstance& inst : set.instances) {
    inst.stage = stages.at(inst.job);
    count = std::max(count, inst.stage + 1);
  }
  set.stage_names.clear();
  if (const graph::TextList* declared = DeclaredStageNames(model)) {
    if (declared->size() < count) {
      throw Error(ErrorCode::kStageNameArity,
                  "pipeline '" + model.id() + "' needs " +
                      std::to_string(count) + " stage names, declared " +
                      std::to_string(declared->size()));
    }
    set.stage_names.assign(declared->begin(), declared->begin() + count);
  } else {
    for (std::size_t k = 0; k < count; ++k) {
      set.stage_names.push_back("stage_" + std::to_string(k));
    }
  }
  std::stable_sort(set.instances.begin(), set.instances.end(),
                   [](const JobInstance& a, const JobInstance& b) {
                     return std::tie(a.stage, a.name) <
                            std::tie(b.stage, b.name);
                   });
  return set;
}

PipelineInstanceSet DeriveNeeds(PipelineInstanceSet set,
                                const GraphModel& model) {
  std::map<std::string, std::vector<JobInstance*>> by_job;
  for (JobInstance& inst : set.instances) {
    inst.needs.clear();
    by_job[inst.job].push_back(&inst);
  }
  for (const graph::Edge& e : model.edges()) {
    if (e.kind != "dependsOn") continue;
    const auto& producers = by_job[e.source];
    const auto& consumers = by_job[e.target];
    const bool p_expanded = !producers.empty() && producers.front()->target;
    const bool c_expanded = !consumers.empty() && consumers.front()->target;
    if (p_expanded && c_expanded) {
      std::set<std::string> p_targets, c_targets;
      for (const auto* p : producers) p_targets.insert(*p->target);
      for (const auto* c : consumers) c_targets.insert(*c->target);
      if (p_targets != c_targets) {
        throw Error(ErrorCode::kTargetSetMismatch,
                    "dependency " + e.id + ": " + e.source + " expands over " +
                        JoinNames(p_targets) + " but " + e.target + " over " +
                        JoinNames(c_targets));
      }
      for (JobInstance* c : consumers) {
        for (const JobInstance* p : producers) {
          if (p->target == c->target) c->needs.push_back(p->name);
        }
      }
    } else {
      for (JobInstance* c : consumers) {
        for (const JobInstance* p : producers) c->needs.push_back(p->name);
      }
    }
  }
  for (JobInstance& inst : set.instances) {
    std::sort(inst.needs.begin(), inst.needs.end());
    inst.needs.erase(std::unique(inst.needs.begin(), inst.needs.end()),
                     inst.needs.end());
  }
  return set;
}

namespace {

bool IsPlainSafe(const std::string& s) {
  if (s.empty() || s.front() == ' ' || s.back() == ' ') return false;
  static const std::string kFirst = "_./$";
  const char c0 = s.front();
  if (!std::isalpha(static_cast<unsigned char>(c0)) &&
      kFirst.find(c0) == std::string::npos) {
    return false;
  }
  if (c0 == '.' && s.size() > 1 &&
      std::isdigit(static_cast<unsigned char>(s[1]))) {
    return false;
  }
  static const std::string kOther = "_./$-+=,@%:{}()";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == ' ') continue;
    if (kOther.find(c) == std::string::npos) return false;
    if (c == ':' && (i + 1 == s.size() || s[i + 1] == ' ')) return false;
  }
  // Words a YAML reader would turn into booleans or null.
  std::string lower;
  for (char c : s) lower += static_cast<char>(std::tolower(c));
  static const std::set<std::string> kReserved = {
      "true", "false", "yes", "no", "on", "off", "null", "y", "n", ".nan",
      ".inf"};
  return kReserved.count(lower) == 0;
}

std::string Scalar(const std::string& s) {
  if (IsPlainSafe(s)) return s;
  return nlohmann::json(s).dump();
}

}  // namespace

std::string EmitCiYaml(const PipelineInstanceSet& set) {
  std::string out;
  if (set.stage_names.empty()) {
    out += "stages: []\n";
  } else {
    out += "stages:\n";
    for (const auto& s : set.stage_names) out += "  - " + Scalar(s) + "\n";
  }
  std::vector<const JobInstance*> order;
  for (const auto& inst : set.instances) order.push_back(&inst);
  std::sort(order.begin(), order.end(),
            [](const JobInstance* a, const JobInstance* b) {
              return std::tie(a->stage, a->name) < std::tie(b->stage, b->name);
            });
  for (const JobInstance* inst : order) {
    out += "\n" + Scalar(inst->name) + ":\n";
    out += "  stage: " + Scalar(set.stage_names.at(inst->stage)) + "\n";
    if (inst->image) out += "  image: " + Scalar(*inst->image) + "\n";
    out += "  script:";
    if (inst->script.empty()) out += " []";
    out += "\n";
    for (const auto& line : inst->script) out += "    - " + Scalar(line) + "\n";
    if (!inst->needs.empty()) {
      out += "  needs:\n";
      for (const auto& n : inst->needs) out += "    - " + Scalar(n) + "\n";
    }
  }
  return out;
}

PipelineInstanceSet CompilePipeline(const GraphModel& model) {
  auto issues = graph::ValidateStructure(model, PipelineMetamodel());
  if (!graph::HasErrors(issues)) {
    auto more = ValidatePipeline(model);
    issues.insert(issues.end(), more.begin(), more.end());
  }
  if (graph::HasErrors(issues)) {
    std::string message = "pipeline '" + model.id() + "' is invalid:";
    for (const auto& i : issues) {
      if (i.severity == graph::Severity::kError) {
        message += "\n  " + graph::FormatIssue(i);
      }
    }
    throw Error(ErrorCode::kInvalidModel, message);
  }
  return DeriveNeeds(AssignStages(ExpandTargets(model), model), model);
}

}  // namespace ldekit::rig
