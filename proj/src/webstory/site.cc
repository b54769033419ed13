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
#include <fstream>
#include <iterator>
#include <set>

#include "ldekit/error.h"
#include "ldekit/graph/serialization.h"
#include "ldekit/webstory/webstory.h"

namespace ldekit::webstory {

namespace {

constexpr std::string_view kRuntime = R"JS('use strict';
// WebStory player. step() is pure so it can be exercised without a browser.
(function (root) {
  function parse(value) {
    return typeof value === 'string' ? JSON.parse(value) : value;
  }

  function index(model) {
    const nodes = {};
    const out = {};
    for (const n of model.nodes) {
      nodes[n.id] = n;
      out[n.id] = {};
    }
    for (const e of model.edges) out[e.source][e.kind] = e.target;
    return { nodes, out };
  }

  function clickAreas(model, screen) {
    return model.nodes
      .filter((n) => n.kind === 'clickArea' && n.parent === screen)
      .map((n) => n.id)
      .sort();
  }

  function finished(model, screen) {
    return clickAreas(model, screen).length === 0;
  }

  function varName(ix, id, kind) {
    return ix.nodes[ix.out[id][kind]].properties.name;
  }

  function sortedValuation(valuation) {
    const out = {};
    for (const k of Object.keys(valuation).sort()) out[k] = valuation[k];
    return out;
  }

  function initialState(modelJson) {
    const model = parse(modelJson);
    const ix = index(model);
    const valuation = {};
    let screen = null;
    for (const n of model.nodes) {
      if (n.kind === 'variable') valuation[n.properties.name] = n.properties.initial === true;
      if (n.kind === 'startMarker') screen = ix.out[n.id].controlFlow;
    }
    return JSON.stringify({
      screen,
      valuation: sortedValuation(valuation),
      finished: finished(model, screen),
    });
  }

  function step(modelJson, stateJson, clickAreaId) {
    const model = parse(modelJson);
    const state = parse(stateJson);
    const ix = index(model);
    const area = ix.nodes[clickAreaId];
    if (!area || area.kind !== 'clickArea') {
      throw new Error('UnknownElement: ' + clickAreaId);
    }
    if (area.parent !== state.screen) {
      throw new Error('WrongScreen: ' + clickAreaId);
    }
    const valuation = Object.assign({}, state.valuation);
    let at = ix.out[clickAreaId].controlFlow;
    for (let hops = 0; hops <= model.nodes.length; hops++) {
      const node = ix.nodes[at];
      if (node.kind === 'screen') {
        return JSON.stringify({
          screen: at,
          valuation: sortedValuation(valuation),
          finished: finished(model, at),
        });
      }
      if (node.kind === 'variableModifier') {
        valuation[varName(ix, at, 'dataWrite')] = node.properties.targetValue;
        at = ix.out[at].controlFlow;
      } else {
        at = valuation[varName(ix, at, 'dataRead')] ? ix.out[at].trueFlow : ix.out[at].falseFlow;
      }
    }
    throw new Error('control flow chain does not end');
  }

  function render(model, state, stage, play) {
    const screen = model.nodes.find((n) => n.id === state.screen);
    stage.innerHTML = '';
    stage.dataset.screen = state.screen;
    if (screen.properties.backgroundImage) {
      stage.style.backgroundImage = 'url("assets/' + screen.properties.backgroundImage + '")';
    } else {
      stage.style.backgroundImage = 'none';
    }
    for (const id of clickAreas(model, state.screen)) {
      const area = model.nodes.find((n) => n.id === id);
      const [x, y, w, h] = area.properties.rect.split(',').map(Number);
      const button = document.createElement('button');
      button.className = 'click-area';
      button.dataset.clickArea = id;
      button.title = area.properties.label || id;
      Object.assign(button.style, {
        left: x + 'px', top: y + 'px', width: w + 'px', height: h + 'px',
      });
      button.addEventListener('click', () => play(id));
      stage.appendChild(button);
    }
    if (state.finished) {
      const end = document.createElement('div');
      end.className = 'finished';
      end.textContent = screen.properties.name || 'The end';
      stage.appendChild(end);
    }
  }

  function boot() {
    const modelJson = document.getElementById('model').textContent;
    const model = JSON.parse(modelJson);
    const stage = document.getElementById('stage');
    let state = JSON.parse(initialState(model));
    const play = (id) => {
      state = JSON.parse(step(model, state, id));
      render(model, state, stage, play);
    };
    render(model, state, stage, play);
  }

  const api = { step, initialState };
  if (typeof module !== 'undefined' && module.exports) module.exports = api;
  root.WebStory = api;
  if (typeof document !== 'undefined') {
    if (document.readyState === 'loading') {
      document.addEventListener('DOMContentLoaded', boot);
    } else {
      boot();
    }
  }
})(typeof globalThis !== 'undefined' ? globalThis : this);
)JS";

constexpr std::string_view kStyle = R"CSS(body {
  margin: 0;
  background: #111;
  font-family: sans-serif;
}

#stage {
  position: relative;
  width: 800px;
  height: 600px;
  margin: 2em auto;
  background-color: #333;
  background-size: cover;
}

.click-area {
  position: absolute;
  border: 2px dashed rgba(255, 255, 255, 0.4);
  background: transparent;
  cursor: pointer;
}

.click-area:hover {
  border-color: #fff;
}

.finished {
  position: absolute;
  bottom: 1em;
  width: 100%;
  text-align: center;
  color: #fff;
  font-size: 2em;
}
)CSS";

std::string EscapeHtml(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// '<' only occurs inside JSON strings, where its unicode escape is equivalent.
std::string EmbedJson(std::string_view json) {
  std::string out;
  for (char c : json) {
    if (c == '<') {
      out += "\\u003c";
    } else {
      out += c;
    }
  }
  return out;
}

std::string IndexPage(const std::string& title, const std::string& model_json) {
  return "<!DOCTYPE html>\n"
         "<html lang=\"en\">\n"
         "<head>\n"
         "<meta charset=\"utf-8\">\n"
         "<title>" + EscapeHtml(title) + "</title>\n"
         "<link rel=\"stylesheet\" href=\"style.css\">\n"
         "</head>\n"
         "<body>\n"
         "<div id=\"stage\"></div>\n"
         "<script type=\"application/json\" id=\"model\">" +
         EmbedJson(model_json) +
         "</script>\n"
         "<script src=\"runtime.js\"></script>\n"
         "</body>\n"
         "</html>\n";
}

bool SafeRelative(const std::filesystem::path& p) {
  if (p.empty() || p.is_absolute() || p.has_root_name()) return false;
  for (const auto& part : p) {
    if (part == "..") return false;
  }
  return true;
}

}  // namespace

std::string_view RuntimeScript() { return kRuntime; }

std::vector<SiteFile> GenerateSite(const WebStory& story,
                                   const std::filesystem::path& assets_dir) {
  std::string model_json = graph::SaveModel(story.model());
  std::vector<SiteFile> files = {
      {"index.html", IndexPage(story.model().id(), model_json)},
      {"model.json", model_json},
      {"runtime.js", std::string(kRuntime)},
      {"style.css", std::string(kStyle)},
  };

  std::set<std::string> images;
  for (const auto& screen : story.screens()) {
    const graph::Node* n = story.model().FindNode(screen);
    if (const std::string* img = graph::GetText(n->properties, "backgroundImage")) {
      images.insert(*img);
    }
  }
  for (const auto& image : images) {
    std::filesystem::path rel = std::filesystem::path(image).lexically_normal();
    if (!SafeRelative(rel)) {
      throw Error(ErrorCode::kMissingAsset,
                  "background image '" + image + "' must be a relative path");
    }
    std::ifstream in(assets_dir / rel, std::ios::binary);
    if (assets_dir.empty() || !in) {
      throw Error(ErrorCode::kMissingAsset,
                  "background image '" + image + "' not found under '" +
                      assets_dir.string() + "'");
    }
    std::string bytes((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
    files.push_back({"assets/" + rel.generic_string(), std::move(bytes)});
  }
  std::sort(files.begin(), files.end(),
            [](const SiteFile& a, const SiteFile& b) { return a.path < b.path; });
  return files;
}

}  // namespace ldekit::webstory
