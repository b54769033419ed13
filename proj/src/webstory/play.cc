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
#include <deque>
#include <map>

#include "ldekit/error.h"
#include "ldekit/webstory/webstory.h"

namespace ldekit::webstory {

namespace {

const std::vector<std::string> kNoIds;

const std::string& Target(const graph::GraphModel& m, const std::string& id,
                          std::string_view kind) {
  return m.Outgoing(id, kind).front()->target;
}

const std::string& VariableName(const graph::GraphModel& m,
                                const std::string& id, std::string_view kind) {
  const graph::Node* var = m.FindNode(Target(m, id, kind));
  return *graph::GetText(var->properties, "name");
}

}  // namespace

WebStory WebStory::Compile(graph::GraphModel model) {
  auto issues = graph::ValidateStructure(model, WebStoryMetamodel());
  if (!graph::HasErrors(issues)) {
    auto more = ValidateWebStory(model);
    issues.insert(issues.end(), more.begin(), more.end());
  }
  if (graph::HasErrors(issues)) {
    std::string message = "webstory '" + model.id() + "' is invalid:";
    for (const auto& i : issues) {
      if (i.severity == graph::Severity::kError) {
        message += "\n  " + graph::FormatIssue(i);
      }
    }
    throw Error(ErrorCode::kInvalidModel, message);
  }

  auto data = std::make_shared<Data>(std::move(model));
  const graph::GraphModel& m = data->model;
  for (const graph::Node& n : m.nodes()) {
    if (n.kind == "screen") {
      data->screens.push_back(n.id);
      auto& areas = data->click_areas[n.id];
      for (const graph::Node* c : m.Children(n.id)) areas.push_back(c->id);
    } else if (n.kind == "clickArea") {
      data->click_targets[n.id] = {*n.parent, Target(m, n.id, "controlFlow")};
    } else if (n.kind == "startMarker") {
      data->start_screen = Target(m, n.id, "controlFlow");
    } else if (n.kind == "variable") {
      const std::string& name = *graph::GetText(n.properties, "name");
      data->variables.push_back(name);
      data->initial[name] = graph::GetBoolean(n.properties, "initial").value_or(false);
    } else if (n.kind == "variableModifier") {
      Step step{Step::Kind::kModifier, VariableName(m, n.id, "dataWrite"),
                *graph::GetBoolean(n.properties, "targetValue"),
                Target(m, n.id, "controlFlow"), ""};
      data->steps.emplace(n.id, std::move(step));
    } else if (n.kind == "condition") {
      Step step{Step::Kind::kCondition, VariableName(m, n.id, "dataRead"), false,
                Target(m, n.id, "trueFlow"), Target(m, n.id, "falseFlow")};
      data->steps.emplace(n.id, std::move(step));
    }
  }
  std::sort(data->variables.begin(), data->variables.end());
  return WebStory(std::move(data));
}

const std::vector<std::string>& WebStory::click_areas(
    std::string_view screen) const {
  auto it = data_->click_areas.find(screen);
  return it == data_->click_areas.end() ? kNoIds : it->second;
}

GameState InitialState(const WebStory& story) {
  return {story.data_->start_screen, story.data_->initial};
}

bool IsFinished(const WebStory& story, const GameState& state) {
  return story.click_areas(state.screen).empty();
}

GameState Click(const WebStory& story, const GameState& state,
                std::string_view click_area) {
  const WebStory::Data& d = *story.data_;
  auto area = d.click_targets.find(click_area);
  if (area == d.click_targets.end()) {
    throw Error(ErrorCode::kUnknownElement,
                "'" + std::string(click_area) + "' is not a click area");
  }
  if (area->second.first != state.screen) {
    throw Error(ErrorCode::kWrongScreen,
                "click area '" + std::string(click_area) + "' belongs to screen '" +
                    area->second.first + "', not '" + state.screen + "'");
  }
  GameState next = state;
  std::string at = area->second.second;
  // Validation guarantees every chain ends on a screen; the bound is a guard.
  for (std::size_t hops = 0; hops <= d.steps.size(); ++hops) {
    auto step = d.steps.find(at);
    if (step == d.steps.end()) {
      next.screen = at;
      return next;
    }
    const WebStory::Step& s = step->second;
    if (s.kind == WebStory::Step::Kind::kModifier) {
      next.valuation[s.variable] = s.value;
      at = s.next;
    } else {
      at = next.valuation.at(s.variable) ? s.next : s.next_false;
    }
  }
  throw Error(ErrorCode::kInvalidModel, "control flow chain does not end");
}

KripkeTransitionSystem DeriveKts(const WebStory& story) {
  KripkeTransitionSystem kts;
  for (const auto& s : story.screens()) kts.propositions.insert("screen:" + s);
  for (const auto& v : story.variables()) kts.propositions.insert("var:" + v);

  std::map<GameState, std::size_t> index;
  auto intern = [&](GameState s) {
    auto [it, fresh] = index.emplace(s, kts.states.size());
    if (fresh) {
      std::set<std::string> label = {"screen:" + s.screen};
      for (const auto& [name, value] : s.valuation) {
        if (value) label.insert("var:" + name);
      }
      kts.labels.push_back(std::move(label));
      kts.states.push_back(std::move(s));
    }
    return it->second;
  };
  intern(InitialState(story));
  for (std::size_t i = 0; i < kts.states.size(); ++i) {
    for (const auto& area : story.click_areas(kts.states[i].screen)) {
      GameState next = Click(story, kts.states[i], area);
      std::size_t to = intern(std::move(next));
      kts.transitions.push_back({i, area, to});
    }
  }
  return kts;
}

ReachabilityResult CheckReachability(const KripkeTransitionSystem& kts,
                                     std::string_view goal) {
  if (!kts.propositions.count(std::string(goal))) {
    throw Error(ErrorCode::kUnknownProposition,
                "unknown proposition '" + std::string(goal) + "'");
  }
  ReachabilityResult result;
  if (kts.states.empty()) return result;
  std::vector<std::vector<const KripkeTransitionSystem::Transition*>> out(
      kts.states.size());
  for (const auto& t : kts.transitions) out[t.from].push_back(&t);

  std::vector<const KripkeTransitionSystem::Transition*> via(kts.states.size());
  std::vector<bool> seen(kts.states.size());
  std::deque<std::size_t> queue = {0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    if (kts.labels[s].count(std::string(goal))) {
      result.reachable = true;
      result.goal_state = s;
      for (std::size_t at = s; via[at] != nullptr; at = via[at]->from) {
        result.witness.emplace_back(via[at]->from, via[at]->click_area);
      }
      std::reverse(result.witness.begin(), result.witness.end());
      return result;
    }
    for (const auto* t : out[s]) {
      if (!seen[t->to]) {
        seen[t->to] = true;
        via[t->to] = t;
        queue.push_back(t->to);
      }
    }
  }
  return result;
}

}  // namespace ldekit::webstory
