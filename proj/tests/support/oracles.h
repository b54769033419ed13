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

#ifndef LDEKIT_TESTS_SUPPORT_ORACLES_H_
#define LDEKIT_TESTS_SUPPORT_ORACLES_H_

#include <map>
#include <set>
#include <string>
#include <tuple>

#include "ldekit/dataflow/dataflow.h"
#include "ldekit/graph/graph_model.h"
#include "ldekit/webstory/webstory.h"

namespace ldekit::testing {

// Story semantics computed straight from the graph: every (screen, valuation)
// pair is enumerated, its clicks interpreted edge by edge, and the reachable
// part kept by fixpoint iteration.
struct StoryOracle {
  using State = webstory::GameState;
  std::set<State> states;
  std::set<std::tuple<State, std::string, State>> transitions;
  std::map<State, std::set<std::string>> labels;
  State initial;
};

StoryOracle ExhaustStory(const graph::GraphModel& model);

// Same, in the shape of a derived KTS, for direct comparison.
StoryOracle FromKts(const webstory::KripkeTransitionSystem& kts);

// Stub execution: every function returns the text of its own call, so a
// value records the whole computation that produced it. External inputs
// evaluate to their names.
std::map<std::string, std::string> RunFlatStub(
    const dataflow::ControlFlowPlan& plan);

// Demand-driven evaluation straight on the (hierarchical) model, without
// flattening or ordering. Returns boundary outputs by name.
std::map<std::string, std::string> RunHierarchicalStub(
    const graph::GraphModel& model, const dataflow::SignatureTable& signatures,
    const dataflow::ModelTable& submodels);

// Every r_* name used on a line was assigned on an earlier line.
bool DefinedBeforeUse(const std::string& script);

}  // namespace ldekit::testing

#endif  // LDEKIT_TESTS_SUPPORT_ORACLES_H_
