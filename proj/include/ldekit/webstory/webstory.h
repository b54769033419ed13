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

#ifndef LDEKIT_WEBSTORY_WEBSTORY_H_
#define LDEKIT_WEBSTORY_WEBSTORY_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ldekit/graph/graph_model.h"
#include "ldekit/graph/issue.h"
#include "ldekit/graph/metamodel.h"

namespace ldekit::webstory {

// Node kinds: screen (backgroundImage), clickArea (child of a screen; rect as
// "x,y,w,h"), startMarker, variable (name, initial), variableModifier
// (targetValue), condition. Edge kinds: controlFlow, trueFlow, falseFlow,
// dataRead (condition to variable), dataWrite (modifier to variable).
const graph::Metamodel& WebStoryMetamodel();

// Story rules on a structurally valid model.
std::vector<graph::ValidationIssue> ValidateWebStory(
    const graph::GraphModel& model);

struct GameState {
  std::string screen;
  // Variable name to value; covers every declared variable.
  std::map<std::string, bool> valuation;

  friend bool operator==(const GameState&, const GameState&) = default;
  friend auto operator<=>(const GameState&, const GameState&) = default;
};

class WebStory {
 public:
  // Throws Error(kInvalidModel) listing the validation errors.
  static WebStory Compile(graph::GraphModel model);

  const graph::GraphModel& model() const { return data_->model; }
  const std::string& start_screen() const { return data_->start_screen; }
  // Screen ids in id order.
  const std::vector<std::string>& screens() const { return data_->screens; }
  // Declared variable names, sorted.
  const std::vector<std::string>& variables() const { return data_->variables; }
  // Click areas of a screen in id order.
  const std::vector<std::string>& click_areas(std::string_view screen) const;

 private:
  friend GameState InitialState(const WebStory&);
  friend GameState Click(const WebStory&, const GameState&, std::string_view);

  struct Step {
    enum class Kind { kScreen, kModifier, kCondition } kind;
    std::string variable;  // written or read variable name
    bool value = false;    // modifier target value
    std::string next;      // controlFlow target, or trueFlow for conditions
    std::string next_false;
  };

  struct Data {
    explicit Data(graph::GraphModel m) : model(std::move(m)) {}

    graph::GraphModel model;
    std::string start_screen;
    std::vector<std::string> screens;
    std::vector<std::string> variables;
    std::map<std::string, bool> initial;
    std::map<std::string, std::vector<std::string>, std::less<>> click_areas;
    // clickArea id to (screen, controlFlow target).
    std::map<std::string, std::pair<std::string, std::string>, std::less<>>
        click_targets;
    std::map<std::string, Step, std::less<>> steps;
  };

  explicit WebStory(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

GameState InitialState(const WebStory& story);

// A screen without click areas ends the game.
bool IsFinished(const WebStory& story, const GameState& state);

// Follows the control-flow chain behind a click area until it reaches a
// screen, applying modifiers and branching on conditions. Throws
// Error(kUnknownElement) for ids that are not click areas and
// Error(kWrongScreen) for click areas of another screen.
GameState Click(const WebStory& story, const GameState& state,
                std::string_view click_area);

struct KripkeTransitionSystem {
  struct Transition {
    std::size_t from;
    std::string click_area;
    std::size_t to;

    friend bool operator==(const Transition&, const Transition&) = default;
  };

  // Breadth-first discovery order; states[0] is the initial state.
  std::vector<GameState> states;
  std::vector<Transition> transitions;
  // Per state: "screen:<id>" plus "var:<name>" for every true variable.
  std::vector<std::set<std::string>> labels;
  // Every proposition the story can mention, reachable or not.
  std::set<std::string> propositions;
};

KripkeTransitionSystem DeriveKts(const WebStory& story);

struct ReachabilityResult {
  bool reachable = false;
  // Shortest path as (source state index, click area) pairs; empty when the
  // initial state already satisfies the goal.
  std::vector<std::pair<std::size_t, std::string>> witness;
  std::size_t goal_state = 0;
};

// Throws Error(kUnknownProposition) if goal is not in kts.propositions.
ReachabilityResult CheckReachability(const KripkeTransitionSystem& kts,
                                     std::string_view goal);

struct SiteFile {
  std::string path;  // relative, '/' separated
  std::string content;
};

// index.html, runtime.js, style.css, model.json and assets/<image> for every
// referenced background image, sorted by path. Throws Error(kMissingAsset)
// for images that cannot be read below assets_dir.
std::vector<SiteFile> GenerateSite(const WebStory& story,
                                   const std::filesystem::path& assets_dir);

// The browser runtime. Exposes a pure step(modelJson, stateJson, clickAreaId)
// returning the next state as JSON, also exported for Node.
std::string_view RuntimeScript();

}  // namespace ldekit::webstory

#endif  // LDEKIT_WEBSTORY_WEBSTORY_H_
