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

#include "support/random_models.h"

#include <algorithm>
#include <map>

namespace ldekit::testing {

namespace {

using graph::Edge;
using graph::GraphModel;
using graph::ModelType;
using graph::Node;
using graph::PropertyMap;

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Chance(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

template <typename T>
const T& Pick(Rng& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(
      Uniform(rng, 0, static_cast<int>(items.size()) - 1))];
}

std::string Id(const std::string& prefix, int i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02d", i);
  return prefix + buf;
}

}  // namespace

GraphModel RandomGraphModel(Rng& rng) {
  int n = Uniform(rng, 0, 8);
  std::vector<Node> nodes;
  for (int i = 0; i < n; ++i) {
    Node node{Id("n", i), Pick(rng, std::vector<std::string>{"a", "b", "c"}),
              std::nullopt, {}};
    if (i > 0 && Chance(rng, 0.4)) node.parent = Id("n", Uniform(rng, 0, i - 1));
    int props = Uniform(rng, 0, 3);
    for (int p = 0; p < props; ++p) {
      std::string key = "p" + std::to_string(Uniform(rng, 0, 5));
      switch (Uniform(rng, 0, 3)) {
        case 0:
          node.properties[key] = std::string("text \"quoted\" é ") +
                                 std::to_string(Uniform(rng, 0, 99));
          break;
        case 1:
          node.properties[key] =
              std::int64_t{Uniform(rng, -1000000, 1000000)} * 1000003;
          break;
        case 2: node.properties[key] = Chance(rng, 0.5); break;
        default:
          node.properties[key] = graph::TextList{"x", std::to_string(p), ""};
      }
    }
    nodes.push_back(std::move(node));
  }
  std::vector<Edge> edges;
  if (n > 0) {
    int m = Uniform(rng, 0, 10);
    for (int i = 0; i < m; ++i) {
      Edge e{Id("e", i), Chance(rng, 0.5) ? "x" : "y",
             Id("n", Uniform(rng, 0, n - 1)), Id("n", Uniform(rng, 0, n - 1)),
             {}};
      if (Chance(rng, 0.3)) e.properties["w"] = std::int64_t{i};
      edges.push_back(std::move(e));
    }
  }
  std::shuffle(nodes.begin(), nodes.end(), rng);
  std::shuffle(edges.begin(), edges.end(), rng);
  auto type = static_cast<ModelType>(Uniform(rng, 0, 3));
  return GraphModel("random", type, std::move(nodes), std::move(edges));
}

std::vector<std::pair<std::string, std::string>> RandomDagEdges(
    Rng& rng, int n, double density) {
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(i)] = i;
  std::shuffle(rank.begin(), rank.end(), rng);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (Chance(rng, density)) {
        edges.emplace_back(Id("n", rank[static_cast<std::size_t>(i)]),
                           Id("n", rank[static_cast<std::size_t>(j)]));
      }
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return edges;
}

namespace {

class StatechartBuilder {
 public:
  explicit StatechartBuilder(Rng& rng) : rng_(rng) {}

  GraphModel Build() {
    Add("decls", "declarations", "", {});
    Add("v_b0", "variable", "decls",
        {{"name", std::string("b0")}, {"varType", std::string("boolean")}});
    Add("v_b1", "variable", "decls",
        {{"name", std::string("b1")},
         {"varType", std::string("boolean")},
         {"initial", true}});
    Add("v_n0", "variable", "decls",
        {{"name", std::string("n0")}, {"varType", std::string("integer")}});
    for (int i = 0; i < 4; ++i) {
      Add("trg" + std::to_string(i), "trigger", "decls",
          {{"name", "T" + std::to_string(i)}});
    }
    GenScope("", 0);
    GenTransitions();
    return GraphModel("random_chart", ModelType::kStatechart, nodes_, edges_);
  }

 private:
  struct Info {
    std::string kind;
    std::string scope;
  };

  void Add(const std::string& id, const std::string& kind,
           const std::string& parent, PropertyMap props) {
    Node n{id, kind, std::nullopt, std::move(props)};
    if (!parent.empty()) n.parent = parent;
    nodes_.push_back(std::move(n));
    info_[id] = {kind, parent};
  }

  std::string Fresh(const std::string& prefix) {
    return prefix + std::to_string(counter_++);
  }

  void GenScope(const std::string& scope, int depth) {
    std::vector<std::string> targets;
    int states = Uniform(rng_, 1, 3);
    for (int i = 0; i < states; ++i) {
      int roll = depth < 2 ? Uniform(rng_, 0, 5) : 0;
      std::string kind = roll <= 3 ? "state"
                         : roll == 4 ? "hierarchicalState"
                                     : "concurrentState";
      std::string id = Fresh(kind == "state"               ? "s"
                             : kind == "hierarchicalState" ? "h"
                                                           : "c");
      Add(id, kind, scope, {});
      targets.push_back(id);
      if (kind == "hierarchicalState") {
        GenScope(id, depth + 1);
      } else if (kind == "concurrentState") {
        int regions = Uniform(rng_, 2, 3);
        for (int r = 0; r < regions; ++r) {
          std::string rid = Fresh("r");
          Add(rid, "region", id, {});
          GenScope(rid, depth + 1);
        }
      }
    }
    std::string start = Fresh("start");
    Add(start, "start", scope, {});
    starts_.push_back({start, Pick(rng_, targets)});
    if (Chance(rng_, 0.6)) Add(Fresh("end"), "end", scope, {});
    if (Chance(rng_, 0.4)) Add(Fresh("d"), "decision", scope, {});
    if (!scope.empty() && Chance(rng_, 0.5)) {
      Add(Fresh("hist"), "history", scope, {});
    }
  }

  std::vector<std::string> Ancestors(const std::string& id) const {
    std::vector<std::string> out;
    std::string cur = info_.at(id).scope;
    while (!cur.empty()) {
      out.push_back(cur);
      cur = info_.at(cur).scope;
    }
    return out;
  }

  bool CrossesRegions(const std::string& a, const std::string& b) const {
    auto ua = Ancestors(a);
    auto ub = Ancestors(b);
    for (const auto& x : ua) {
      if (std::find(ub.begin(), ub.end(), x) != ub.end()) {
        return info_.at(x).kind == "concurrentState";
      }
    }
    return false;
  }

  bool IsInside(const std::string& node, const std::string& container) const {
    auto up = Ancestors(node);
    return std::find(up.begin(), up.end(), container) != up.end();
  }

  void Connect(const std::string& src, const std::string& dst,
               PropertyMap props) {
    edges_.push_back(
        {"t" + Id("", edge_counter_++), "transition", src, dst, std::move(props)});
  }

  std::string RandomGuard() {
    static const std::vector<std::string> kGuards = {
        "b0", "not b1", "n0 < 3", "b0 or n0 = 0", "n0 >= 1 and not b0"};
    return Pick(rng_, kGuards);
  }

  std::string RandomAction() {
    static const std::vector<std::string> kActions = {
        "b0 := not b0", "n0 := n0 + 1", "n0 := 0; b1 := b0",
        "b1 := n0 > 2"};
    return Pick(rng_, kActions);
  }

  void GenTransitions() {
    for (const auto& [start, target] : starts_) Connect(start, target, {});

    std::vector<std::string> targets;
    std::vector<std::string> sources;
    std::vector<std::string> decisions;
    for (const auto& [id, info] : info_) {
      const auto& k = info.kind;
      if (k == "state" || k == "hierarchicalState" || k == "concurrentState" ||
          k == "end" || k == "history" || k == "decision") {
        targets.push_back(id);
      }
      if (k == "state" || k == "hierarchicalState" || k == "concurrentState") {
        sources.push_back(id);
      }
      if (k == "decision") decisions.push_back(id);
    }
    // Decision branches never target decisions, keeping cascades finite.
    std::vector<std::string> stable_targets;
    for (const auto& t : targets) {
      if (info_.at(t).kind != "decision") stable_targets.push_back(t);
    }

    auto legal_target = [&](const std::string& src,
                            const std::vector<std::string>& pool,
                            bool outside_only) -> std::string {
      for (int attempt = 0; attempt < 20; ++attempt) {
        const std::string& t = Pick(rng_, pool);
        if (CrossesRegions(src, t)) continue;
        if (outside_only && (t == src || IsInside(t, src))) continue;
        return t;
      }
      return "";
    };

    for (const auto& src : sources) {
      int count = Uniform(rng_, 0, 2);
      for (int i = 0; i < count; ++i) {
        std::string dst = legal_target(src, targets, false);
        if (dst.empty()) continue;
        PropertyMap props{{"trigger", "T" + std::to_string(Uniform(rng_, 0, 3))}};
        if (Chance(rng_, 0.4)) props["guard"] = RandomGuard();
        if (Chance(rng_, 0.4)) props["action"] = RandomAction();
        Connect(src, dst, std::move(props));
      }
      const std::string& kind = info_.at(src).kind;
      if ((kind == "hierarchicalState" || kind == "concurrentState") &&
          Chance(rng_, 0.7)) {
        std::string dst = legal_target(src, stable_targets, true);
        if (!dst.empty()) {
          PropertyMap props;
          if (Chance(rng_, 0.3)) props["action"] = RandomAction();
          Connect(src, dst, std::move(props));
        }
      }
    }
    for (const auto& d : decisions) {
      std::string a = legal_target(d, stable_targets, false);
      std::string b = legal_target(d, stable_targets, false);
      if (a.empty() || b.empty()) {
        // Fall back to a sibling so the decision stays well-formed.
        a = b = "";
        for (const auto& t : stable_targets) {
          if (info_.at(t).scope == info_.at(d).scope) {
            a = b = t;
            break;
          }
        }
      }
      std::string guard = RandomGuard();
      Connect(d, a, {{"guard", guard}});
      Connect(d, b, {{"guard", "not (" + guard + ")"}});
    }
  }

  Rng& rng_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::map<std::string, Info> info_;
  std::vector<std::pair<std::string, std::string>> starts_;
  int counter_ = 0;
  int edge_counter_ = 0;
};

}  // namespace

GraphModel RandomStatechart(Rng& rng) { return StatechartBuilder(rng).Build(); }

std::vector<std::string> RandomTriggerSequence(Rng& rng, std::size_t length) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < length; ++i) {
    out.push_back("T" + std::to_string(Uniform(rng, 0, 3)));
  }
  return out;
}

namespace {

struct IntTerm {
  std::string text;
  std::function<std::int64_t(const std::array<bool, 3>&)> eval;
};

IntTerm RandomIntTerm(Rng& rng, int depth) {
  if (depth <= 0 || Chance(rng, 0.4)) {
    int v = Uniform(rng, -5, 9);
    return {std::to_string(v), [v](const auto&) { return std::int64_t{v}; }};
  }
  IntTerm a = RandomIntTerm(rng, depth - 1);
  IntTerm b = RandomIntTerm(rng, depth - 1);
  switch (Uniform(rng, 0, 3)) {
    case 0:
      return {"(" + a.text + " + " + b.text + ")",
              [a, b](const auto& e) { return a.eval(e) + b.eval(e); }};
    case 1:
      return {"(" + a.text + " - " + b.text + ")",
              [a, b](const auto& e) { return a.eval(e) - b.eval(e); }};
    case 2:
      return {"(" + a.text + " * " + b.text + ")",
              [a, b](const auto& e) { return a.eval(e) * b.eval(e); }};
    default:
      return {"(-" + a.text + ")",
              [a](const auto& e) { return -a.eval(e); }};
  }
}

}  // namespace

BoolFormula RandomBoolFormula(Rng& rng, int depth) {
  if (depth <= 0 || Chance(rng, 0.25)) {
    int pick = Uniform(rng, 0, 5);
    if (pick < 3) {
      static const char* kNames[] = {"p", "q", "r"};
      std::size_t i = static_cast<std::size_t>(pick);
      return {kNames[i], [i](const auto& e) { return e[i]; }};
    }
    if (pick == 3) {
      bool v = Chance(rng, 0.5);
      return {v ? "true" : "false", [v](const auto&) { return v; }};
    }
    IntTerm a = RandomIntTerm(rng, 2);
    IntTerm b = RandomIntTerm(rng, 2);
    static const char* kOps[] = {"=", "!=", "<", "<=", ">", ">="};
    int op = Uniform(rng, 0, 5);
    return {"(" + a.text + " " + kOps[op] + " " + b.text + ")",
            [a, b, op](const auto& e) {
              std::int64_t x = a.eval(e);
              std::int64_t y = b.eval(e);
              switch (op) {
                case 0: return x == y;
                case 1: return x != y;
                case 2: return x < y;
                case 3: return x <= y;
                case 4: return x > y;
                default: return x >= y;
              }
            }};
  }
  BoolFormula a = RandomBoolFormula(rng, depth - 1);
  switch (Uniform(rng, 0, 4)) {
    case 0:
      return {"(not " + a.text + ")",
              [a](const auto& e) { return !a.oracle(e); }};
    case 1: {
      BoolFormula b = RandomBoolFormula(rng, depth - 1);
      return {"(" + a.text + " and " + b.text + ")",
              [a, b](const auto& e) { return a.oracle(e) && b.oracle(e); }};
    }
    case 2: {
      BoolFormula b = RandomBoolFormula(rng, depth - 1);
      return {"(" + a.text + " or " + b.text + ")",
              [a, b](const auto& e) { return a.oracle(e) || b.oracle(e); }};
    }
    case 3: {
      BoolFormula b = RandomBoolFormula(rng, depth - 1);
      return {"(" + a.text + " = " + b.text + ")",
              [a, b](const auto& e) { return a.oracle(e) == b.oracle(e); }};
    }
    default: {
      BoolFormula b = RandomBoolFormula(rng, depth - 1);
      return {"(" + a.text + " != " + b.text + ")",
              [a, b](const auto& e) { return a.oracle(e) != b.oracle(e); }};
    }
  }
}

GraphModel RandomStory(Rng& rng) {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  int edge_id = 0;
  auto connect = [&](const std::string& kind, const std::string& src,
                     const std::string& dst) {
    edges.push_back({Id("f", edge_id++), kind, src, dst, {}});
  };

  int screens = Uniform(rng, 1, 4);
  int vars = Uniform(rng, 0, 3);
  int chain = vars == 0 ? 0 : Uniform(rng, 0, 4);
  std::vector<std::string> screen_ids;
  for (int i = 0; i < screens; ++i) {
    screen_ids.push_back(Id("s", i));
    nodes.push_back({screen_ids.back(), "screen", std::nullopt, {}});
  }
  for (int i = 0; i < vars; ++i) {
    PropertyMap props{{"name", "x" + std::to_string(i)}};
    if (Chance(rng, 0.5)) props["initial"] = Chance(rng, 0.5);
    nodes.push_back({Id("v", i), "variable", std::nullopt, std::move(props)});
  }
  // Chain node i only flows to screens or chain nodes with a larger index.
  std::vector<std::string> chain_ids;
  std::vector<bool> is_condition;
  for (int i = 0; i < chain; ++i) {
    is_condition.push_back(Chance(rng, 0.5));
    chain_ids.push_back(Id(is_condition.back() ? "c" : "m", i));
  }
  auto successor = [&](int from) {
    int later = chain - from - 1;
    if (later > 0 && Chance(rng, 0.4)) {
      return chain_ids[static_cast<std::size_t>(Uniform(rng, from + 1, chain - 1))];
    }
    return Pick(rng, screen_ids);
  };
  for (int i = 0; i < chain; ++i) {
    const std::string& id = chain_ids[static_cast<std::size_t>(i)];
    std::string var = Id("v", Uniform(rng, 0, vars - 1));
    if (is_condition[static_cast<std::size_t>(i)]) {
      nodes.push_back({id, "condition", std::nullopt, {}});
      connect("trueFlow", id, successor(i));
      connect("falseFlow", id, successor(i));
      connect("dataRead", id, var);
    } else {
      nodes.push_back(
          {id, "variableModifier", std::nullopt, {{"targetValue", Chance(rng, 0.5)}}});
      connect("controlFlow", id, successor(i));
      connect("dataWrite", id, var);
    }
  }
  int area = 0;
  for (const auto& screen : screen_ids) {
    int areas = Uniform(rng, 0, 3);
    for (int i = 0; i < areas; ++i) {
      std::string id = Id("a", area++);
      nodes.push_back({id, "clickArea", screen,
                       {{"rect", std::to_string(i * 100) + ",0,90,60"}}});
      connect("controlFlow", id,
              chain > 0 && Chance(rng, 0.5) ? successor(-1) : Pick(rng, screen_ids));
    }
  }
  nodes.push_back({"start", "startMarker", std::nullopt, {}});
  connect("controlFlow", "start", Pick(rng, screen_ids));
  return GraphModel("random_story", ModelType::kWebstory, std::move(nodes),
                    std::move(edges));
}

RandomFlowCase RandomFlow(Rng& rng) {
  static const std::vector<std::string> kTypes = {"A", "B", "C"};
  std::vector<dataflow::FunctionSignature> sigs;
  for (int f = 0; f < 5; ++f) {
    dataflow::FunctionSignature sig;
    sig.name = "f" + std::to_string(f);
    int inputs = Uniform(rng, 0, 3);
    for (int i = 0; i < inputs; ++i) {
      sig.inputs.push_back({"i" + std::to_string(i), Pick(rng, kTypes)});
    }
    sig.output = {"o", Pick(rng, kTypes)};
    sigs.push_back(std::move(sig));
  }

  std::vector<Node> nodes;
  std::vector<Edge> edges;
  int n = Uniform(rng, 1, 7);
  std::vector<std::string> out_type;
  int edge_id = 0;
  auto flow = [&](const std::string& src, const std::string& dst) {
    edges.push_back({Id("e", edge_id++), "dataFlow", src, dst, {}});
  };
  for (int j = 0; j < n; ++j) {
    const auto& sig = Pick(rng, sigs);
    std::string id = Id("n", j);
    nodes.push_back({id, "functionNode", std::nullopt,
                     {{"signatureRef", sig.name}}});
    nodes.push_back({id + "_o", "outputPort", id, {{"name", std::string("o")}}});
    out_type.push_back(sig.output.type);
    for (const auto& in : sig.inputs) {
      std::string port = id + "_" + in.name;
      nodes.push_back({port, "inputPort", id, {{"name", in.name}}});
      if (j > 0 && Chance(rng, 0.8)) {
        std::vector<int> matching;
        for (int i = 0; i < j; ++i) {
          if (out_type[static_cast<std::size_t>(i)] == in.type) matching.push_back(i);
        }
        int src = !matching.empty() && Chance(rng, 0.7) ? Pick(rng, matching)
                                                        : Uniform(rng, 0, j - 1);
        flow(Id("n", src) + "_o", port);
      } else {
        std::string ext = "x_" + port;
        PropertyMap props{{"name", ext}};
        if (Chance(rng, 0.3)) props["portType"] = Pick(rng, kTypes);
        nodes.push_back({ext, "inputPort", std::nullopt, std::move(props)});
        flow(ext, port);
      }
    }
  }
  std::shuffle(nodes.begin(), nodes.end(), rng);
  return {dataflow::IndexSignatures(sigs),
          GraphModel("random_flow", ModelType::kDataflow, std::move(nodes),
                     std::move(edges))};
}

GraphModel ShuffleEdgeIds(const GraphModel& model, Rng& rng) {
  std::vector<Edge> edges(model.edges().begin(), model.edges().end());
  std::vector<std::string> ids;
  for (const auto& e : edges) ids.push_back(e.id);
  std::shuffle(ids.begin(), ids.end(), rng);
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].id = ids[i];
  return GraphModel(model.id(), model.type(),
                    std::vector<Node>(model.nodes().begin(), model.nodes().end()),
                    std::move(edges));
}

GraphModel RandomPipeline(Rng& rng) {
  static const std::vector<std::string> kTargets = {"linux", "mac", "win",
                                                    "arm"};
  static const std::vector<std::string> kOddLines = {
      "echo 'a: b' # note", "true", "- dash", "42", "{x}", "say \"hi\"",
      "tab\there", "$HOME/bin/run", "key: ${V0}"};
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  int edge_count = 0;
  auto edge = [&](const char* kind, const std::string& s, const std::string& t) {
    edges.push_back({Id("e", edge_count++), kind, s, t, {}});
  };

  int vars = Uniform(rng, 1, 3);
  for (int v = 0; v < vars; ++v) {
    nodes.push_back({Id("v", v), "variable", std::nullopt,
                     {{"name", "V" + std::to_string(v)},
                      {"value", "val" + std::to_string(v)}}});
  }
  // Two candidate target sets; every target sets os and may shadow V0.
  std::vector<std::vector<std::string>> sets(2);
  for (const auto& t : kTargets) {
    graph::TextList params{"os=" + t};
    if (Chance(rng, 0.3)) params.push_back("V0=" + t + "-override");
    nodes.push_back({"t_" + t, "target", std::nullopt,
                     {{"name", t}, {"parameters", params}}});
    for (auto& set : sets) {
      if (Chance(rng, 0.5)) set.push_back(t);
    }
  }
  for (auto& set : sets) {
    if (set.empty()) set.push_back(Pick(rng, kTargets));
  }

  int jobs = Uniform(rng, 0, 9);
  std::vector<int> choice(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) {
    choice[j] = Uniform(rng, -1, 1);  // -1: no targets
    graph::TextList script;
    int lines = Uniform(rng, 1, 3);
    for (int l = 0; l < lines; ++l) {
      switch (Uniform(rng, 0, 3)) {
        case 0:
          script.push_back("run ${V" + std::to_string(Uniform(rng, 0, vars - 1)) +
                           "} step" + std::to_string(l));
          break;
        case 1:
          script.push_back(choice[j] >= 0 ? "build --os ${os}" : "build");
          break;
        case 2: script.push_back(Pick(rng, kOddLines)); break;
        default: script.push_back("make all");
      }
    }
    PropertyMap props{{"scriptTemplate", script}};
    if (Chance(rng, 0.5)) props["image"] = std::string("img:${V0}");
    nodes.push_back({Id("j", j), "job", std::nullopt, std::move(props)});
    if (choice[j] >= 0) {
      for (const auto& t : sets[choice[j]]) edge("appliesTo", "t_" + t, Id("j", j));
    }
  }
  for (int a = 0; a < jobs; ++a) {
    for (int b = a + 1; b < jobs; ++b) {
      bool clash = choice[a] >= 0 && choice[b] >= 0 &&
                   sets[choice[a]] != sets[choice[b]];
      if (!clash && Chance(rng, 0.3)) edge("dependsOn", Id("j", a), Id("j", b));
    }
  }
  if (jobs > 0 && Chance(rng, 0.5)) {
    nodes.push_back({"cfg", "configurationNode", std::nullopt,
                     {{"image", std::string("shared:1")}}});
    edge("configures", "cfg", Id("j", Uniform(rng, 0, jobs - 1)));
  }
  if (Chance(rng, 0.5)) {
    graph::TextList names;
    for (int k = 0; k < jobs + Uniform(rng, 0, 2); ++k) {
      names.push_back("S" + std::to_string(k));
    }
    nodes.push_back({"pipeline", "configurationNode", std::nullopt,
                     {{"stageNames", names}}});
  }
  return GraphModel("random_pipeline", ModelType::kPipeline, std::move(nodes),
                    std::move(edges));
}

}  // namespace ldekit::testing
