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

#ifndef LDEKIT_DATAFLOW_DATAFLOW_H_
#define LDEKIT_DATAFLOW_DATAFLOW_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ldekit/graph/graph_model.h"
#include "ldekit/graph/issue.h"
#include "ldekit/graph/metamodel.h"

namespace ldekit::dataflow {

struct PortSpec {
  std::string name;
  std::string type;

  friend bool operator==(const PortSpec&, const PortSpec&) = default;
};

struct FunctionSignature {
  std::string name;
  std::vector<PortSpec> inputs;
  PortSpec output;
  std::string origin;  // source path as given to ParseSignatures
  std::size_t line = 0;  // line of the "# Method:" comment, 1-based

  friend bool operator==(const FunctionSignature&,
                         const FunctionSignature&) = default;
};

// Finds annotation blocks of the form
//
//   # Method: cluster
//   # Inputs: data:Table, x:text, y:text, clusters:num
//   # Output: res:Clu_Model
//   def cluster(data,x,y,clusters):
//
// in file order. Functions without a block are skipped. Throws
// AnnotationError with rule tuple.malformed, duplicate.port,
// annotation.incomplete or method.mismatch.
std::vector<FunctionSignature> ParseSignatures(std::string_view source,
                                               std::string origin = "");

using SignatureTable = std::map<std::string, FunctionSignature, std::less<>>;
using ModelTable = std::map<std::string, graph::GraphModel, std::less<>>;

// Indexes by function name; a later duplicate replaces an earlier one.
SignatureTable IndexSignatures(const std::vector<FunctionSignature>& sigs);

// Node kinds functionNode (signatureRef), subprocessNode (modelRef),
// inputPort and outputPort (name, optional portType). Ports nested in a node
// belong to it; top-level ports are the model's own boundary. Edge kind
// dataFlow runs from a producer (nested outputPort or boundary inputPort) to a
// consumer (nested inputPort or boundary outputPort).
const graph::Metamodel& DataflowMetamodel();

struct NominalType {
  std::string name;
  bool is_variable = false;

  friend bool operator==(const NominalType&, const NominalType&) = default;
};

std::string FormatType(const NominalType& type);

struct FlowAnalysis {
  std::vector<graph::ValidationIssue> issues;
  // Inferred type of every port node. Unresolved ports share a variable
  // named after the smallest port id of their component.
  std::map<std::string, NominalType> port_types;
};

// Throws Error(kUnknownSignature) or Error(kUnknownSubmodel) for dangling
// references.
FlowAnalysis AnalyzeFlow(const graph::GraphModel& model,
                         const SignatureTable& signatures,
                         const ModelTable& submodels);

std::vector<graph::ValidationIssue> ValidateFlow(
    const graph::GraphModel& model, const SignatureTable& signatures,
    const ModelTable& submodels);

struct ArgSource {
  enum class Kind { kStep, kExternal } kind = Kind::kStep;
  std::string name;  // step id or boundary input name

  friend bool operator==(const ArgSource&, const ArgSource&) = default;
};

struct PlanStep {
  // Flattened id; inlined steps are "<subprocess>__<inner>".
  std::string id;
  std::string function;
  // In the signature's input order: (input port name, producer).
  std::vector<std::pair<std::string, ArgSource>> arguments;

  friend bool operator==(const PlanStep&, const PlanStep&) = default;
};

struct ControlFlowPlan {
  std::string model_id;
  std::vector<PlanStep> steps;
  // Boundary outputs by port name when the model declares any; otherwise
  // every step whose result nothing consumes, named by step id.
  std::vector<std::pair<std::string, ArgSource>> sinks;

  friend bool operator==(const ControlFlowPlan&,
                         const ControlFlowPlan&) = default;
};

// Topological order with lexicographic tie-break per model level;
// subprocesses are spliced in place. Throws CycleError, or Error(kInvalidModel)
// when validation reports errors.
ControlFlowPlan OrderNodes(const graph::GraphModel& model,
                           const SignatureTable& signatures,
                           const ModelTable& submodels);

// Python 3 text: a header comment, one "r_<id> = fn(args)" line per step and
// a final print of the sinks.
std::string EmitHostScript(const ControlFlowPlan& plan);

}  // namespace ldekit::dataflow

#endif  // LDEKIT_DATAFLOW_DATAFLOW_H_
