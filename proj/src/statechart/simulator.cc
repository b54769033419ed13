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

#include "ldekit/error.h"
#include "ldekit/expr/eval.h"
#include "ldekit/expr/parser.h"
#include "ldekit/statechart/statechart.h"

namespace ldekit::statechart {

namespace {

NodeKind KindFromName(const std::string& name) {
  static const std::map<std::string, NodeKind, std::less<>> kKinds = {
      {"start", NodeKind::kStart},
      {"end", NodeKind::kEnd},
      {"state", NodeKind::kState},
      {"hierarchicalState", NodeKind::kHierarchical},
      {"concurrentState", NodeKind::kConcurrent},
      {"region", NodeKind::kRegion},
      {"decision", NodeKind::kDecision},
      {"history", NodeKind::kHistory},
      {"declarations", NodeKind::kDeclarations},
      {"variable", NodeKind::kVariable},
      {"trigger", NodeKind::kTrigger},
  };
  return kKinds.at(name);
}

bool IsVertex(NodeKind k) {
  return k == NodeKind::kStart || k == NodeKind::kEnd ||
         k == NodeKind::kState || k == NodeKind::kHierarchical ||
         k == NodeKind::kConcurrent || k == NodeKind::kDecision ||
         k == NodeKind::kHistory;
}

// Kinds that may remain active at the end of a macrostep.
bool IsStable(NodeKind k) {
  return k == NodeKind::kEnd || k == NodeKind::kState ||
         k == NodeKind::kHierarchical || k == NodeKind::kConcurrent;
}

const std::vector<std::string> kNoIds;

}  // namespace

Statechart Statechart::Compile(graph::GraphModel model) {
  auto issues = graph::ValidateStructure(model, StatechartMetamodel());
  if (!graph::HasErrors(issues)) {
    auto more = ValidateStatechart(model);
    issues.insert(issues.end(), more.begin(), more.end());
  }
  if (graph::HasErrors(issues)) {
    std::string message = "statechart '" + model.id() + "' is invalid:";
    for (const auto& i : issues) {
      if (i.severity == graph::Severity::kError) {
        message += "\n  " + graph::FormatIssue(i);
      }
    }
    throw Error(ErrorCode::kInvalidModel, message);
  }

  auto data = std::make_shared<Data>(std::move(model));
  const graph::GraphModel& m = data->model;
  data->members[""];
  for (const graph::Node& n : m.nodes()) {
    NodeKind kind = KindFromName(n.kind);
    data->kinds.emplace(n.id, kind);
    std::string scope = n.parent.value_or("");
    data->scope.emplace(n.id, scope);
    if (IsVertex(kind)) data->members[scope].push_back(n.id);
    if (kind == NodeKind::kStart) data->start[scope] = n.id;
    if (kind == NodeKind::kHistory) data->history[scope] = n.id;
    if (kind == NodeKind::kRegion) data->regions[scope].push_back(n.id);
    if (kind == NodeKind::kTrigger) {
      data->triggers.insert(*graph::GetText(n.properties, "name"));
    }
    if (kind == NodeKind::kVariable) {
      const std::string& name = *graph::GetText(n.properties, "name");
      bool is_bool = *graph::GetText(n.properties, "varType") == "boolean";
      expr::Value initial = is_bool ? expr::Value(false)
                                    : expr::Value(std::int64_t{0});
      if (auto b = graph::GetBoolean(n.properties, "initial")) initial = *b;
      if (auto i = graph::GetInteger(n.properties, "initial")) initial = *i;
      data->initial_env.Declare(name, initial);
    }
  }

  auto ancestors = [&](const std::string& id) {
    std::vector<std::string> out;
    const graph::Node* cur = m.FindNode(id);
    while (cur->parent) {
      out.push_back(*cur->parent);
      cur = m.FindNode(*cur->parent);
    }
    return out;
  };

  for (const graph::Edge& e : m.edges()) {
    Transition t;
    t.id = e.id;
    t.source = e.source;
    t.target = e.target;
    if (const auto* s = graph::GetText(e.properties, "trigger")) t.trigger = *s;
    if (const auto* s = graph::GetText(e.properties, "guard")) {
      t.guard = expr::ParseExpression(*s);
    }
    if (const auto* s = graph::GetText(e.properties, "action")) {
      t.actions = expr::ParseActions(*s);
      t.action_text = *s;
    }
    auto up_src = ancestors(t.source);
    auto up_dst = ancestors(t.target);
    for (const auto& a : up_src) {
      if (std::find(up_dst.begin(), up_dst.end(), a) != up_dst.end()) {
        t.scope = a;
        break;
      }
    }
    data->outgoing[t.source].push_back(t.id);
    NodeKind src_kind = data->kinds.at(t.source);
    if (!t.trigger && (src_kind == NodeKind::kHierarchical ||
                       src_kind == NodeKind::kConcurrent)) {
      data->defaults[t.source] = t.id;
    }
    data->transitions.emplace(t.id, std::move(t));
  }
  return Statechart(std::move(data));
}

NodeKind Statechart::kind(std::string_view node_id) const {
  return data_->kinds.find(node_id)->second;
}

const std::string& Statechart::scope_of(std::string_view node_id) const {
  return data_->scope.find(node_id)->second;
}

const std::string& Statechart::start_of(std::string_view scope) const {
  return data_->start.find(scope)->second;
}

const std::string* Statechart::history_of(std::string_view scope) const {
  auto it = data_->history.find(scope);
  return it == data_->history.end() ? nullptr : &it->second;
}

const std::vector<std::string>& Statechart::regions_of(
    std::string_view concurrent) const {
  auto it = data_->regions.find(concurrent);
  return it == data_->regions.end() ? kNoIds : it->second;
}

const std::vector<std::string>& Statechart::members_of(
    std::string_view scope) const {
  auto it = data_->members.find(scope);
  return it == data_->members.end() ? kNoIds : it->second;
}

const Transition& Statechart::transition(std::string_view id) const {
  return data_->transitions.find(id)->second;
}

const std::vector<std::string>& Statechart::outgoing(
    std::string_view node_id) const {
  auto it = data_->outgoing.find(node_id);
  return it == data_->outgoing.end() ? kNoIds : it->second;
}

const std::string* Statechart::default_transition(
    std::string_view composite) const {
  auto it = data_->defaults.find(composite);
  return it == data_->defaults.end() ? nullptr : &it->second;
}

namespace {

// Mutable working copy for one macrostep. Callers only publish the result
// when the step finishes without throwing.
class Stepper {
 public:
  Stepper(const Statechart& chart, Configuration config)
      : chart_(chart), config_(std::move(config)) {}

  Configuration& config() { return config_; }
  SimulationEvent& event() { return event_; }

  bool IsActive(const std::string& id) const {
    return config_.active_states.contains(id);
  }

  bool GuardHolds(const Transition& t) const {
    if (!t.guard) return true;
    return std::get<bool>(expr::Evaluate(*t.guard, config_.env));
  }

  void EnterScope(const std::string& scope) {
    TakeTransition(chart_.transition(chart_.outgoing(chart_.start_of(scope)).front()));
  }

  void EnterNode(const std::string& id) {
    switch (chart_.kind(id)) {
      case NodeKind::kStart:
        EnterScope(chart_.scope_of(id));
        break;
      case NodeKind::kEnd:
        config_.active_states.insert(id);
        if (chart_.scope_of(id).empty()) config_.terminated = true;
        break;
      case NodeKind::kHierarchical:
        config_.active_states.insert(id);
        EnterScope(id);
        break;
      case NodeKind::kConcurrent:
        config_.active_states.insert(id);
        for (const auto& r : chart_.regions_of(id)) {
          config_.active_states.insert(r);
          EnterScope(r);
        }
        break;
      case NodeKind::kHistory:
        EnterHistory(id);
        break;
      default:
        // Plain states, and decisions which stay active until the completion
        // cascade resolves them.
        config_.active_states.insert(id);
        break;
    }
  }

  void EnterHistory(const std::string& history_node) {
    const std::string& scope = chart_.scope_of(history_node);
    auto it = config_.history.find(scope);
    if (it == config_.history.end() || it->second.empty()) {
      EnterScope(scope);
      return;
    }
    const std::set<std::string> stored = it->second;
    for (const auto& id : stored) EnterNode(id);
  }

  void StoreHistory(const std::string& scope) {
    if (chart_.history_of(scope) == nullptr) return;
    std::set<std::string> stored;
    for (const auto& m : chart_.members_of(scope)) {
      if (IsActive(m) && IsStable(chart_.kind(m))) stored.insert(m);
    }
    config_.history[scope] = std::move(stored);
  }

  void ExitMembers(const std::string& scope) {
    for (const auto& m : chart_.members_of(scope)) {
      if (IsActive(m)) Exit(m);
    }
  }

  void Exit(const std::string& id) {
    switch (chart_.kind(id)) {
      case NodeKind::kHierarchical:
        StoreHistory(id);
        ExitMembers(id);
        break;
      case NodeKind::kConcurrent:
        for (const auto& r : chart_.regions_of(id)) {
          StoreHistory(r);
          ExitMembers(r);
          config_.active_states.erase(r);
        }
        break;
      case NodeKind::kRegion:
        StoreHistory(id);
        ExitMembers(id);
        break;
      default:
        break;
    }
    config_.active_states.erase(id);
  }

  void TakeTransition(const Transition& t) {
    // The ancestor-or-self of the source that sits directly in t.scope.
    std::string exit_root = t.source;
    while (chart_.scope_of(exit_root) != t.scope) {
      exit_root = chart_.scope_of(exit_root);
    }
    if (IsActive(exit_root)) Exit(exit_root);

    event_.taken_transitions.push_back(t.id);
    if (!t.actions.empty()) {
      config_.env = expr::ApplyActions(t.actions, config_.env);
      event_.executed_actions.push_back(t.action_text);
    }

    std::vector<std::string> path = {t.target};
    while (chart_.scope_of(path.back()) != t.scope) {
      path.push_back(chart_.scope_of(path.back()));
    }
    std::reverse(path.begin(), path.end());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const std::string& id = path[i];
      config_.active_states.insert(id);
      if (chart_.kind(id) == NodeKind::kConcurrent) {
        for (const auto& r : chart_.regions_of(id)) {
          if (r == path[i + 1]) continue;
          config_.active_states.insert(r);
          EnterScope(r);
        }
      }
    }
    EnterNode(path.back());
  }

  // Decision resolutions first (by id), then default transitions of
  // completed composites, innermost first.
  const Transition* NextCompletion(std::string* completed) {
    for (const auto& id : config_.active_states) {
      if (chart_.kind(id) != NodeKind::kDecision) continue;
      for (const auto& tid : chart_.outgoing(id)) {
        const Transition& t = chart_.transition(tid);
        if (GuardHolds(t)) return &t;
      }
      throw Error(ErrorCode::kStuckAtDecision,
                  "no outgoing guard of decision '" + id + "' holds");
    }
    const Transition* best = nullptr;
    std::size_t best_depth = 0;
    for (const auto& id : config_.active_states) {
      NodeKind kind = chart_.kind(id);
      if (kind != NodeKind::kHierarchical && kind != NodeKind::kConcurrent) {
        continue;
      }
      const std::string* def = chart_.default_transition(id);
      if (def == nullptr || !IsComplete(id)) continue;
      std::size_t depth = chart_.model().Depth(id);
      if (best == nullptr || depth > best_depth) {
        best = &chart_.transition(*def);
        best_depth = depth;
        *completed = id;
      }
    }
    return best;
  }

  bool ScopeAtEnd(const std::string& scope) const {
    const auto& members = chart_.members_of(scope);
    return std::any_of(members.begin(), members.end(), [&](const auto& m) {
      return IsActive(m) && chart_.kind(m) == NodeKind::kEnd;
    });
  }

  bool IsComplete(const std::string& composite) const {
    if (chart_.kind(composite) == NodeKind::kHierarchical) {
      return ScopeAtEnd(composite);
    }
    const auto& regions = chart_.regions_of(composite);
    return std::all_of(regions.begin(), regions.end(),
                       [&](const auto& r) { return ScopeAtEnd(r); });
  }

  void Complete() {
    const std::size_t cap = chart_.transition_count();
    std::size_t steps = 0;
    while (!config_.terminated) {
      std::string completed;
      const Transition* t = NextCompletion(&completed);
      if (t == nullptr) break;
      if (++steps > cap) {
        throw Error(ErrorCode::kNonterminatingCompletion,
                    "completion cascade exceeded " + std::to_string(cap) +
                        " transitions");
      }
      if (!completed.empty()) event_.completions.push_back(completed);
      TakeTransition(*t);
    }
  }

  // Outermost enabled transition per branch; every region of an active
  // concurrent state is searched independently.
  void Select(const std::string& scope, std::string_view trigger,
              std::vector<const Transition*>& chosen) const {
    for (const auto& m : chart_.members_of(scope)) {
      if (!IsActive(m)) continue;
      const Transition* pick = nullptr;
      for (const auto& tid : chart_.outgoing(m)) {
        const Transition& t = chart_.transition(tid);
        if (t.trigger && *t.trigger == trigger && GuardHolds(t)) {
          pick = &t;
          break;
        }
      }
      if (pick != nullptr) {
        chosen.push_back(pick);
      } else if (chart_.kind(m) == NodeKind::kHierarchical) {
        Select(m, trigger, chosen);
      } else if (chart_.kind(m) == NodeKind::kConcurrent) {
        for (const auto& r : chart_.regions_of(m)) Select(r, trigger, chosen);
      }
    }
  }

 private:
  const Statechart& chart_;
  Configuration config_;
  SimulationEvent event_;
};

}  // namespace

Configuration InitConfiguration(const Statechart& chart) {
  Configuration start;
  start.env = chart.initial_environment();
  Stepper stepper(chart, std::move(start));
  stepper.EnterScope("");
  stepper.Complete();
  return std::move(stepper.config());
}

std::pair<Configuration, SimulationEvent> FireTrigger(
    const Statechart& chart, const Configuration& config,
    std::string_view trigger) {
  SimulationEvent event;
  event.fired_trigger = std::string(trigger);
  if (config.terminated) return {config, event};
  if (!chart.triggers().contains(std::string(trigger))) {
    throw Error(ErrorCode::kUnknownTrigger,
                "unknown trigger '" + std::string(trigger) + "'");
  }
  Stepper stepper(chart, config);
  std::vector<const Transition*> chosen;
  stepper.Select("", trigger, chosen);
  if (chosen.empty()) return {config, event};
  stepper.event().fired_trigger = event.fired_trigger;
  for (const Transition* t : chosen) {
    // An earlier region transition may have left the enclosing state.
    if (stepper.IsActive(t->source)) stepper.TakeTransition(*t);
  }
  stepper.Complete();
  return {std::move(stepper.config()), std::move(stepper.event())};
}

std::pair<Configuration, std::vector<std::string>> RunCompletion(
    const Statechart& chart, const Configuration& config) {
  Stepper stepper(chart, config);
  stepper.Complete();
  return {std::move(stepper.config()), std::move(stepper.event().completions)};
}

std::vector<std::string> CheckConfiguration(const Statechart& chart,
                                            const Configuration& config) {
  std::vector<std::string> violations;
  auto active = [&](const std::string& id) {
    return config.active_states.contains(id);
  };
  for (const auto& id : config.active_states) {
    if (chart.model().FindNode(id) == nullptr) {
      violations.push_back("unknown active node '" + id + "'");
      continue;
    }
    NodeKind kind = chart.kind(id);
    if (!IsStable(kind) && kind != NodeKind::kRegion) {
      violations.push_back("transient node '" + id + "' left active");
    }
    const std::string& parent = chart.scope_of(id);
    if (!parent.empty() && !active(parent)) {
      violations.push_back("'" + id + "' active inside inactive '" + parent +
                           "'");
    }
  }
  auto count_active = [&](const std::string& scope) {
    const auto& members = chart.members_of(scope);
    return std::count_if(members.begin(), members.end(), active);
  };
  if (count_active("") != 1) {
    violations.push_back("expected one active top-level state, found " +
                         std::to_string(count_active("")));
  }
  for (const auto& id : config.active_states) {
    if (chart.model().FindNode(id) == nullptr) continue;
    NodeKind kind = chart.kind(id);
    if (kind == NodeKind::kHierarchical || kind == NodeKind::kRegion) {
      if (count_active(id) != 1) {
        violations.push_back("scope '" + id + "' has " +
                             std::to_string(count_active(id)) +
                             " active states");
      }
    }
    if (kind == NodeKind::kConcurrent) {
      for (const auto& r : chart.regions_of(id)) {
        if (!active(r)) {
          violations.push_back("region '" + r + "' of active '" + id +
                               "' is inactive");
        }
      }
    }
  }
  bool top_end = false;
  for (const auto& m : chart.members_of("")) {
    if (active(m) && chart.kind(m) == NodeKind::kEnd) top_end = true;
  }
  if (top_end != config.terminated) {
    violations.push_back("terminated flag disagrees with top-level end");
  }
  if (config.env.schema() != chart.initial_environment().schema()) {
    violations.push_back("variable environment changed its schema");
  }
  return violations;
}

}  // namespace ldekit::statechart
