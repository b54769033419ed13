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

#ifndef LDEKIT_RIG_RIG_H_
#define LDEKIT_RIG_RIG_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ldekit/graph/graph_model.h"
#include "ldekit/graph/issue.h"
#include "ldekit/graph/metamodel.h"

namespace ldekit::rig {

// Node kinds: job (name, scriptTemplate, image), target (name, parameters as
// "key=value" lines), variable (name, value), configurationNode (property
// bag; without configures edges it may carry the pipeline's stageNames).
// Edge kinds: dependsOn (producer job to dependent job), appliesTo (target to
// job), configures (configurationNode to job). Jobs and configuration nodes
// accept arbitrary extra properties.
const graph::Metamodel& PipelineMetamodel();

// Pipeline rules on a structurally valid model.
std::vector<graph::ValidationIssue> ValidatePipeline(
    const graph::GraphModel& model);

struct JobInstance {
  std::string name;  // "<job>" or "<job>:<target>"
  std::string job;   // job node id
  std::optional<std::string> target;  // target name
  std::vector<std::string> script;
  std::optional<std::string> image;
  std::size_t stage = 0;
  std::vector<std::string> needs;

  friend bool operator==(const JobInstance&, const JobInstance&) = default;
};

struct PipelineInstanceSet {
  // Sorted by name until stages are assigned, then by (stage, name).
  std::vector<JobInstance> instances;
  std::vector<std::string> stage_names;

  friend bool operator==(const PipelineInstanceSet&,
                         const PipelineInstanceSet&) = default;
};

// One instance per attached target, or one for a job without targets.
//  placeholders in scripts and images resolve against the target's
// parameters, then variables. Throws Error(kInvalidModel) on unresolved
// placeholders.
PipelineInstanceSet ExpandTargets(const graph::GraphModel& model);

// Longest-path layering of the job DAG. Stage names come from the
// pipeline-level stageNames (extra names are dropped) or default to
// "stage_<k>". Throws Error(kStageNameArity) when too few names are declared
// and CycleError on cyclic dependencies.
PipelineInstanceSet AssignStages(PipelineInstanceSet set,
                                 const graph::GraphModel& model);

// Lifts dependsOn edges to instances: per target when both jobs expand over
// the same targets, to every instance when either side has none. Throws
// Error(kTargetSetMismatch) when both expand over different target sets.
PipelineInstanceSet DeriveNeeds(PipelineInstanceSet set,
                                const graph::GraphModel& model);

// GitLab CI document: the stages list, then one mapping per instance with
// keys stage, image, script, needs.
std::string EmitCiYaml(const PipelineInstanceSet& set);

// Validation, expansion, staging and needs in one go. Throws
// Error(kInvalidModel) listing validation errors.
PipelineInstanceSet CompilePipeline(const graph::GraphModel& model);

}  // namespace ldekit::rig

#endif  // LDEKIT_RIG_RIG_H_
