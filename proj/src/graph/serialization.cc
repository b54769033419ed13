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

#include "ldekit/graph/serialization.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ldekit/error.h"

namespace ldekit::graph {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void Envelope(const std::string& message) {
  throw Error(ErrorCode::kEnvelope, message);
}

void RejectUnknownKeys(const Json& object, const std::set<std::string>& known,
                       const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (!known.contains(key)) {
      Envelope("unknown field '" + key + "' in " + where);
    }
  }
}

const Json& RequireField(const Json& object, const char* key,
                         const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) {
    Envelope("missing field '" + std::string(key) + "' in " + where);
  }
  return *it;
}

std::string RequireString(const Json& object, const char* key,
                          const std::string& where) {
  const Json& v = RequireField(object, key, where);
  if (!v.is_string()) {
    Envelope("field '" + std::string(key) + "' in " + where +
             " must be a string");
  }
  return v.get<std::string>();
}

PropertyValue ParseValue(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() &&
        v.get<std::uint64_t>() >
            static_cast<std::uint64_t>(INT64_MAX)) {
      Envelope("integer property out of range in " + where);
    }
    return v.get<std::int64_t>();
  }
  if (v.is_array()) {
    TextList list;
    for (const auto& item : v) {
      if (!item.is_string()) {
        Envelope("list property in " + where + " must contain only strings");
      }
      list.push_back(item.get<std::string>());
    }
    return list;
  }
  Envelope("unsupported property value in " + where +
           " (expected string, integer, boolean or array of strings)");
}

PropertyMap ParseProperties(const Json& object, const std::string& where) {
  PropertyMap props;
  auto it = object.find("properties");
  if (it == object.end()) return props;
  if (!it->is_object()) Envelope("'properties' in " + where + " must be an object");
  for (const auto& [key, value] : it->items()) {
    props.emplace(key, ParseValue(value, where + " property '" + key + "'"));
  }
  return props;
}

OrderedJson WriteValue(const PropertyValue& value) {
  return std::visit(
      [](const auto& v) -> OrderedJson {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, TextList>) {
          OrderedJson arr = OrderedJson::array();
          for (const auto& s : v) arr.push_back(s);
          return arr;
        } else {
          return OrderedJson(v);
        }
      },
      value);
}

OrderedJson WriteProperties(const PropertyMap& props) {
  OrderedJson out = OrderedJson::object();
  for (const auto& [key, value] : props) out[key] = WriteValue(value);
  return out;
}

}  // namespace

GraphModel LoadModel(std::string_view document) {
  Json root;
  try {
    root = Json::parse(document.begin(), document.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kSyntax, std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) Envelope("model document must be a JSON object");
  RejectUnknownKeys(root, {"id", "modelType", "nodes", "edges"}, "model");

  std::string id = RequireString(root, "id", "model");
  std::string type_name = RequireString(root, "modelType", "model");
  auto type = ParseModelType(type_name);
  if (!type) Envelope("unknown modelType '" + type_name + "'");

  const Json& jnodes = RequireField(root, "nodes", "model");
  const Json& jedges = RequireField(root, "edges", "model");
  if (!jnodes.is_array()) Envelope("'nodes' must be an array");
  if (!jedges.is_array()) Envelope("'edges' must be an array");

  std::vector<Node> nodes;
  for (const auto& jn : jnodes) {
    if (!jn.is_object()) Envelope("node entries must be objects");
    RejectUnknownKeys(jn, {"id", "kind", "parent", "properties"}, "node");
    Node n;
    n.id = RequireString(jn, "id", "node");
    const std::string where = "node '" + n.id + "'";
    n.kind = RequireString(jn, "kind", where);
    if (jn.contains("parent")) n.parent = RequireString(jn, "parent", where);
    n.properties = ParseProperties(jn, where);
    nodes.push_back(std::move(n));
  }

  std::vector<Edge> edges;
  for (const auto& je : jedges) {
    if (!je.is_object()) Envelope("edge entries must be objects");
    RejectUnknownKeys(je, {"id", "kind", "source", "target", "properties"},
                      "edge");
    Edge e;
    e.id = RequireString(je, "id", "edge");
    const std::string where = "edge '" + e.id + "'";
    e.kind = RequireString(je, "kind", where);
    e.source = RequireString(je, "source", where);
    e.target = RequireString(je, "target", where);
    e.properties = ParseProperties(je, where);
    edges.push_back(std::move(e));
  }

  return GraphModel(std::move(id), *type, std::move(nodes), std::move(edges));
}

GraphModel LoadModelFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return LoadModel(buf.str());
}

std::string SaveModel(const GraphModel& model) {
  OrderedJson root = OrderedJson::object();
  root["id"] = model.id();
  root["modelType"] = std::string(ModelTypeName(model.type()));
  OrderedJson nodes = OrderedJson::array();
  for (const Node& n : model.nodes()) {
    OrderedJson jn = OrderedJson::object();
    jn["id"] = n.id;
    jn["kind"] = n.kind;
    if (n.parent) jn["parent"] = *n.parent;
    jn["properties"] = WriteProperties(n.properties);
    nodes.push_back(std::move(jn));
  }
  root["nodes"] = std::move(nodes);
  OrderedJson edges = OrderedJson::array();
  for (const Edge& e : model.edges()) {
    OrderedJson je = OrderedJson::object();
    je["id"] = e.id;
    je["kind"] = e.kind;
    je["source"] = e.source;
    je["target"] = e.target;
    je["properties"] = WriteProperties(e.properties);
    edges.push_back(std::move(je));
  }
  root["edges"] = std::move(edges);
  return root.dump(2, ' ', false) + "\n";
}

}  // namespace ldekit::graph
