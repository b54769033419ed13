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

#ifndef LDEKIT_TESTS_SUPPORT_RANDOM_MODELS_H_
#define LDEKIT_TESTS_SUPPORT_RANDOM_MODELS_H_

#include <array>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ldekit/dataflow/dataflow.h"
#include "ldekit/graph/graph_model.h"

namespace ldekit::testing {

using Rng = std::mt19937_64;

// Arbitrary envelope-valid model (random kinds, parents, properties of all
// four tags). Not meant to satisfy any metamodel.
graph::GraphModel RandomGraphModel(Rng& rng);

// Random DAG over n nodes named "n00".."n<n-1>", edges in shuffled order.
std::vector<std::pair<std::string, std::string>> RandomDagEdges(
    Rng& rng, int n, double density);

// Valid statechart with hierarchical, concurrent, decision and history
// nodes over boolean variables b0, b1, integer n0 and triggers T0..T3.
graph::GraphModel RandomStatechart(Rng& rng);
std::vector<std::string> RandomTriggerSequence(Rng& rng, std::size_t length);

// Valid story with 1-4 screens, 0-3 variables and acyclic chains of
// conditions and modifiers.
graph::GraphModel RandomStory(Rng& rng);

// Acyclic flat dataflow over random signatures with types A, B, C; about a
// third of the wires join ports of different types.
struct RandomFlowCase {
  dataflow::SignatureTable signatures;
  graph::GraphModel model;
};
RandomFlowCase RandomFlow(Rng& rng);

// Valid pipeline: 0-9 jobs j00.. over a random DAG, targets attached so that
// dependent expanded jobs share their target set, scripts with resolvable
// placeholders and some lines that need YAML quoting.
graph::GraphModel RandomPipeline(Rng& rng);

// Same model with edge ids permuted.
graph::GraphModel ShuffleEdgeIds(const graph::GraphModel& model, Rng& rng);

// Fully parenthesized boolean formula over p, q, r, sometimes comparing small
// integer subterms, with a direct evaluator built alongside the text.
struct BoolFormula {
  std::string text;
  std::function<bool(const std::array<bool, 3>&)> oracle;
};
BoolFormula RandomBoolFormula(Rng& rng, int depth);

}  // namespace ldekit::testing

#endif  // LDEKIT_TESTS_SUPPORT_RANDOM_MODELS_H_
