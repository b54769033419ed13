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

#ifndef LDEKIT_STATECHART_STATECHART_H_
#define LDEKIT_STATECHART_STATECHART_H_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ldekit/expr/ast.h"
#include "ldekit/graph/graph_model.h"
#include "ldekit/graph/issue.h"
#include "ldekit/graph/metamodel.h"

namespace ldekit::statechart {

// Node kinds: start, end, state, hierarchicalState, concurrentState, region,
// decision, history, declarations, variable, trigger. Edge kind: transition
// with optional text properties trigger, guard and action.
const graph::Metamodel& StatechartMetamodel();

// Statechart-specific rules on a structurally valid model.
std::vector<graph::ValidationIssue> ValidateStatechart(
    const graph::GraphModel& model);

enum class NodeKind {
  kStart,
  kEnd,
  kState,
  kHierarchical,
  kConcurrent,
  kRegion,
  kDecision,
  kHistory,
  kDeclarations,
  kVariable,
  kTrigger,
};

struct Transition {
  std::string id;
  std::string source;
  std::string target;
  std::optional<std::string> trigger;
  std::optional<expr::Expression> guard;
  expr::ActionList actions;
  std::string action_text;
  // Deepest proper common ancestor of source and target; empty for the root.
  std::string scope;
};

// Pre-indexed, immutable view of a valid statechart. Cheap to copy.
class Statechart {
 public:
  // Runs structural and statechart validation; throws Error(kInvalidModel)
  // listing the errors if there are any.
  static Statechart Compile(graph::GraphModel model);

  const graph::GraphModel& model() const { return data_->model; }
  const std::set<std::string>& triggers() const { return data_->triggers; }
  const expr::Environment& initial_environment() const {
    return data_->initial_env;
  }
  std::size_t transition_count() const { return data_->transitions.size(); }

  NodeKind kind(std::string_view node_id) const;
  // Parent id, empty for top-level nodes.
  const std::string& scope_of(std::string_view node_id) const;
  const std::string& start_of(std::string_view scope) const;
  const std::string* history_of(std::string_view scope) const;
  const std::vector<std::string>& regions_of(std::string_view concurrent) const;
  // State-like and pseudo-state children of a scope ("" is the root).
  const std::vector<std::string>& members_of(std::string_view scope) const;
  const Transition& transition(std::string_view id) const;
  const std::vector<std::string>& outgoing(std::string_view node_id) const;
  const std::string* default_transition(std::string_view composite) const;

 private:
  struct Data {
    explicit Data(graph::GraphModel m) : model(std::move(m)) {}

    graph::GraphModel model;
    std::map<std::string, NodeKind, std::less<>> kinds;
    std::map<std::string, std::string, std::less<>> scope;
    std::map<std::string, std::string, std::less<>> start;
    std::map<std::string, std::string, std::less<>> history;
    std::map<std::string, std::vector<std::string>, std::less<>> regions;
    std::map<std::string, std::vector<std::string>, std::less<>> members;
    std::map<std::string, Transition, std::less<>> transitions;
    std::map<std::string, std::vector<std::string>, std::less<>> outgoing;
    std::map<std::string, std::string, std::less<>> defaults;
    std::set<std::string> triggers;
    expr::Environment initial_env;
  };

  explicit Statechart(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// Live simulation state. Active sets include composites and regions, so the
// set is closed under taking parents.
struct Configuration {
  std::set<std::string> active_states;
  expr::Environment env;
  // Keyed by hierarchicalState or region id; holds the state that was
  // directly active in that scope when it was last exited (shallow history).
  std::map<std::string, std::set<std::string>> history;
  bool terminated = false;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct SimulationEvent {
  std::string fired_trigger;
  // Every transition taken in the macrostep, in execution order, including
  // start transitions on entry, decision branches and default transitions.
  std::vector<std::string> taken_transitions;
  std::vector<std::string> executed_actions;
  // Composites whose default transition fired on completion.
  std::vector<std::string> completions;

  bool empty() const { return taken_transitions.empty(); }
  friend bool operator==(const SimulationEvent&,
                         const SimulationEvent&) = default;
};

// Enters the chart from its top-level start node and runs the completion
// cascade. Throws Error(kStuckAtDecision) or kNonterminatingCompletion.
Configuration InitConfiguration(const Statechart& chart);

// One macrostep for an external trigger. Outermost enabled source wins within
// a branch (ties by edge id); concurrent regions each take at most one
// transition, in region id order. Actions run after exit and before entry.
// Identity when terminated or when nothing is enabled. Throws
// Error(kUnknownTrigger) for undeclared triggers; expression and completion
// errors propagate and leave the input untouched.
std::pair<Configuration, SimulationEvent> FireTrigger(
    const Statechart& chart, const Configuration& config,
    std::string_view trigger);

// Resolves active decision nodes and takes default transitions of completed
// composites until nothing changes. Capped at transition_count() steps.
std::pair<Configuration, std::vector<std::string>> RunCompletion(
    const Statechart& chart, const Configuration& config);

inline const std::set<std::string>& ActiveStates(const Configuration& config) {
  return config.active_states;
}

// Describes every violated configuration invariant; empty when well-formed.
std::vector<std::string> CheckConfiguration(const Statechart& chart,
                                            const Configuration& config);

}  // namespace ldekit::statechart

#endif  // LDEKIT_STATECHART_STATECHART_H_
