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

#include <istream>
#include <ostream>
#include <sstream>

#include "ldekit/error.h"
#include "ldekit/service/service.h"

namespace ldekit::service {

namespace {

Json ValueToJson(const expr::Value& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b;
  return std::get<std::int64_t>(v);
}

std::string Join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

Json ConfigurationToJson(const statechart::Configuration& config) {
  Json vars = Json::object();
  for (const auto& [name, value] : config.env.values()) {
    vars[name] = ValueToJson(value);
  }
  Json history = Json::object();
  for (const auto& [scope, states] : config.history) {
    history[scope] = Json(std::vector<std::string>(states.begin(), states.end()));
  }
  return Json{{"activeStates", std::vector<std::string>(config.active_states.begin(),
                                                         config.active_states.end())},
              {"variables", vars},
              {"history", history},
              {"terminated", config.terminated}};
}

Json EventToJson(const statechart::SimulationEvent& event) {
  return Json{{"trigger", event.fired_trigger},
              {"takenTransitions", event.taken_transitions},
              {"executedActions", event.executed_actions},
              {"completions", event.completions}};
}

Json GameStateToJson(const webstory::WebStory& story,
                     const webstory::GameState& state) {
  Json valuation = Json::object();
  for (const auto& [name, value] : state.valuation) valuation[name] = value;
  return Json{{"screen", state.screen},
              {"valuation", valuation},
              {"clickAreas", story.click_areas(state.screen)},
              {"finished", webstory::IsFinished(story, state)}};
}

namespace {

void PrintVariables(const statechart::Configuration& config, std::ostream& out) {
  out << "variables:\n";
  if (config.env.values().empty()) out << "  (none)\n";
  for (const auto& [name, value] : config.env.values()) {
    out << "  " << name << " = " << expr::FormatValue(value) << "\n";
  }
}

void PrintActive(const statechart::Configuration& config, std::ostream& out) {
  out << "active: "
      << Join(std::vector<std::string>(config.active_states.begin(),
                                       config.active_states.end()))
      << "\n";
  if (config.terminated) out << "terminated\n";
}

}  // namespace

void RunRepl(const statechart::Statechart& chart, std::istream& in,
             std::ostream& out) {
  statechart::Configuration config;
  try {
    config = statechart::InitConfiguration(chart);
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return;
  }
  PrintActive(config, out);
  PrintVariables(config, out);

  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string command, arg, extra;
    words >> command >> arg >> extra;
    if (command.empty()) continue;
    if (command == "quit" || command == "exit") {
      break;
    } else if (command == "vars" && arg.empty()) {
      PrintVariables(config, out);
    } else if (command == "dump" && arg.empty()) {
      out << ConfigurationToJson(config).dump() << "\n";
    } else if (command == "help") {
      out << "commands: fire <trigger>, vars, dump, quit\n";
    } else if (command == "fire" && !arg.empty() && extra.empty()) {
      try {
        auto [next, event] = statechart::FireTrigger(chart, config, arg);
        config = std::move(next);
        if (event.empty()) {
          out << "fired " << arg << ": nothing enabled\n";
        } else {
          out << "fired " << arg << ": " << Join(event.taken_transitions) << "\n";
          if (!event.executed_actions.empty()) {
            out << "actions: " << Join(event.executed_actions) << "\n";
          }
          if (!event.completions.empty()) {
            out << "completed: " << Join(event.completions) << "\n";
          }
        }
        PrintActive(config, out);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kUnknownTrigger) {
          out << "unknown trigger '" << arg << "'\n";
        } else {
          out << "error: " << e.what() << "\n";
        }
      }
    } else {
      out << "unknown command; try help\n";
    }
  }
}

}  // namespace ldekit::service
