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

#include <cctype>
#include <set>

#include "ldekit/dataflow/dataflow.h"
#include "ldekit/error.h"

namespace ldekit::dataflow {

namespace {

constexpr std::string_view kMethod = "# Method:";
constexpr std::string_view kInputs = "# Inputs:";
constexpr std::string_view kOutput = "# Output:";

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool IsIdentifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool IsTypeName(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ':') {
      return false;
    }
  }
  return true;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

[[noreturn]] void Fail(std::size_t line, const std::string& rule,
                       const std::string& message) {
  throw AnnotationError(line, rule,
                        "line " + std::to_string(line) + ": " + message);
}

PortSpec ParseTuple(std::string_view item, std::size_t line) {
  item = Trim(item);
  auto colon = item.find(':');
  if (colon == std::string_view::npos) {
    Fail(line, "tuple.malformed",
         "expected name:Type, got '" + std::string(item) + "'");
  }
  std::string_view name = Trim(item.substr(0, colon));
  std::string_view type = Trim(item.substr(colon + 1));
  if (!IsIdentifier(name) || !IsTypeName(type)) {
    Fail(line, "tuple.malformed",
         "expected name:Type, got '" + std::string(item) + "'");
  }
  return {std::string(name), std::string(type)};
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

std::vector<FunctionSignature> ParseSignatures(std::string_view source,
                                               std::string origin) {
  auto lines = SplitLines(source);
  std::vector<FunctionSignature> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!StartsWith(lines[i], kMethod)) continue;
    const std::size_t method_line = i + 1;
    FunctionSignature sig;
    sig.name = std::string(Trim(lines[i].substr(kMethod.size())));
    sig.origin = origin;
    sig.line = method_line;
    if (sig.name.empty()) {
      Fail(method_line, "annotation.incomplete", "missing method name");
    }

    if (i + 1 >= lines.size() || !StartsWith(lines[i + 1], kInputs)) {
      Fail(method_line + 1, "annotation.incomplete",
           "expected '# Inputs:' after '# Method: " + sig.name + "'");
    }
    std::string_view inputs = Trim(lines[i + 1].substr(kInputs.size()));
    if (!inputs.empty()) {
      std::size_t start = 0;
      while (true) {
        auto comma = inputs.find(',', start);
        sig.inputs.push_back(ParseTuple(
            inputs.substr(start, comma == std::string_view::npos
                                     ? std::string_view::npos
                                     : comma - start),
            method_line + 1));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }

    if (i + 2 >= lines.size() || !StartsWith(lines[i + 2], kOutput)) {
      Fail(method_line + 2, "annotation.incomplete",
           "expected '# Output:' after '# Inputs:'");
    }
    std::string_view output = lines[i + 2].substr(kOutput.size());
    if (output.find(',') != std::string_view::npos) {
      Fail(method_line + 2, "tuple.malformed", "exactly one output expected");
    }
    sig.output = ParseTuple(output, method_line + 2);

    std::set<std::string> names;
    for (const auto& p : sig.inputs) {
      if (!names.insert(p.name).second) {
        Fail(method_line + 1, "duplicate.port",
             "port '" + p.name + "' declared twice");
      }
    }
    if (!names.insert(sig.output.name).second) {
      Fail(method_line + 2, "duplicate.port",
           "output '" + sig.output.name + "' reuses an input name");
    }

    std::string_view def = i + 3 < lines.size() ? Trim(lines[i + 3]) : "";
    if (!StartsWith(def, "def ")) {
      Fail(method_line + 3, "annotation.incomplete",
           "annotation for '" + sig.name + "' is not followed by a def line");
    }
    def.remove_prefix(4);
    std::string_view def_name = Trim(def.substr(0, def.find('(')));
    if (def_name != sig.name) {
      Fail(method_line + 3, "method.mismatch",
           "annotation names '" + sig.name + "' but the function is '" +
               std::string(def_name) + "'");
    }
    out.push_back(std::move(sig));
    i += 3;
  }
  return out;
}

SignatureTable IndexSignatures(const std::vector<FunctionSignature>& sigs) {
  SignatureTable table;
  for (const auto& s : sigs) table.insert_or_assign(s.name, s);
  return table;
}

}  // namespace ldekit::dataflow
