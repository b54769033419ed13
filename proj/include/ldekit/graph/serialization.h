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

#ifndef LDEKIT_GRAPH_SERIALIZATION_H_
#define LDEKIT_GRAPH_SERIALIZATION_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "ldekit/graph/graph_model.h"

namespace ldekit::graph {

// Parses the JSON model envelope:
//   {"id", "modelType", "nodes": [{"id","kind","parent"?,"properties"}],
//    "edges": [{"id","kind","source","target","properties"}]}
// Unknown fields are rejected. Throws kSyntax, kEnvelope, kDanglingReference,
// kDuplicateId or kContainmentCycle.
GraphModel LoadModel(std::string_view document);
GraphModel LoadModelFile(const std::filesystem::path& path);

// Canonical form: UTF-8, 2-space indent, keys in envelope order, property
// keys sorted, nodes and edges sorted by id, trailing newline.
std::string SaveModel(const GraphModel& model);

}  // namespace ldekit::graph

#endif  // LDEKIT_GRAPH_SERIALIZATION_H_
