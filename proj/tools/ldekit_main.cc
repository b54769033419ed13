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

// ldekit command-line front end: validate, generate, simulate, serve.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ldekit/dataflow/dataflow.h"
#include "ldekit/error.h"
#include "ldekit/graph/metamodel.h"
#include "ldekit/graph/serialization.h"
#include "ldekit/rig/rig.h"
#include "ldekit/service/service.h"
#include "ldekit/statechart/statechart.h"
#include "ldekit/webstory/webstory.h"

namespace fs = std::filesystem;

namespace ldekit {
namespace {

constexpr int kOk = 0;
constexpr int kSemantic = 1;
constexpr int kIoOrUsage = 2;

struct OutputFile {
  std::string path;
  std::string content;
};

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Signatures from the given files, or from every *.py next to the model.
// Submodels are the other dataflow models in the model's directory.
struct DataflowContext {
  dataflow::SignatureTable signatures;
  dataflow::ModelTable submodels;
};

DataflowContext LoadDataflowContext(const fs::path& model_path,
                                    const std::vector<std::string>& sig_files) {
  fs::path dir = model_path.parent_path();
  if (dir.empty()) dir = ".";
  std::vector<fs::path> sources(sig_files.begin(), sig_files.end());
  std::vector<fs::path> jsons;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (sig_files.empty() && entry.path().extension() == ".py") {
      sources.push_back(entry.path());
    }
    if (entry.path().extension() == ".json") jsons.push_back(entry.path());
  }
  std::sort(sources.begin(), sources.end());
  std::sort(jsons.begin(), jsons.end());
  std::vector<dataflow::FunctionSignature> all;
  for (const fs::path& src : sources) {
    auto sigs = dataflow::ParseSignatures(ReadText(src), src.filename().string());
    all.insert(all.end(), sigs.begin(), sigs.end());
  }
  DataflowContext ctx{dataflow::IndexSignatures(all), {}};
  for (const fs::path& p : jsons) {
    try {
      graph::GraphModel m = graph::LoadModelFile(p);
      if (m.type() == graph::ModelType::kDataflow) ctx.submodels.emplace(m.id(), m);
    } catch (const Error&) {
      // Unrelated or broken neighbours are reported when validated directly.
    }
  }
  return ctx;
}

std::vector<graph::ValidationIssue> ValidateModel(
    const graph::GraphModel& model, const fs::path& path,
    const std::vector<std::string>& sig_files) {
  using graph::ModelType;
  const graph::Metamodel* meta = nullptr;
  switch (model.type()) {
    case ModelType::kStatechart: meta = &statechart::StatechartMetamodel(); break;
    case ModelType::kWebstory: meta = &webstory::WebStoryMetamodel(); break;
    case ModelType::kDataflow: meta = &dataflow::DataflowMetamodel(); break;
    case ModelType::kPipeline: meta = &rig::PipelineMetamodel(); break;
  }
  auto issues = graph::ValidateStructure(model, *meta);
  if (graph::HasErrors(issues)) return issues;
  std::vector<graph::ValidationIssue> more;
  switch (model.type()) {
    case ModelType::kStatechart: more = statechart::ValidateStatechart(model); break;
    case ModelType::kWebstory: more = webstory::ValidateWebStory(model); break;
    case ModelType::kPipeline: more = rig::ValidatePipeline(model); break;
    case ModelType::kDataflow: {
      DataflowContext ctx = LoadDataflowContext(path, sig_files);
      try {
        more = dataflow::ValidateFlow(model, ctx.signatures, ctx.submodels);
      } catch (const Error& e) {
        more.push_back(graph::MakeError(std::string(ErrorCodeName(e.code())),
                                        e.what()));
      }
      break;
    }
  }
  issues.insert(issues.end(), more.begin(), more.end());
  graph::SortIssues(issues);
  return issues;
}

int CmdValidate(const std::vector<std::string>& files, bool verbose,
                const std::vector<std::string>& sig_files) {
  int status = kOk;
  for (const std::string& file : files) {
    try {
      graph::GraphModel model = graph::LoadModelFile(file);
      for (const auto& issue : ValidateModel(model, file, sig_files)) {
        if (issue.severity == graph::Severity::kInfo && !verbose) continue;
        std::cout << file << ": " << graph::FormatIssue(issue) << "\n";
        if (issue.severity == graph::Severity::kError) {
          status = std::max(status, kSemantic);
        }
      }
    } catch (const Error& e) {
      std::cout << file << ": error " << ErrorCodeName(e.code()) << ": "
                << e.what() << "\n";
      status = std::max(status, e.code() == ErrorCode::kIo ? kIoOrUsage : kSemantic);
    }
  }
  return status;
}

std::vector<OutputFile> Generate(const fs::path& path,
                                 const std::optional<std::string>& assets,
                                 const std::vector<std::string>& sig_files) {
  graph::GraphModel model = graph::LoadModelFile(path);
  switch (model.type()) {
    case graph::ModelType::kWebstory: {
      webstory::WebStory story = webstory::WebStory::Compile(model);
      fs::path dir = assets ? fs::path(*assets) : path.parent_path();
      std::vector<OutputFile> out;
      for (auto& f : webstory::GenerateSite(story, dir)) {
        out.push_back({std::move(f.path), std::move(f.content)});
      }
      return out;
    }
    case graph::ModelType::kPipeline:
      return {{".gitlab-ci.yml", rig::EmitCiYaml(rig::CompilePipeline(model))}};
    case graph::ModelType::kDataflow: {
      DataflowContext ctx = LoadDataflowContext(path, sig_files);
      auto plan = dataflow::OrderNodes(model, ctx.signatures, ctx.submodels);
      return {{model.id() + ".py", dataflow::EmitHostScript(plan)}};
    }
    case graph::ModelType::kStatechart:
      break;
  }
  throw Error(ErrorCode::kInvalidModel,
              "no generator for statechart models; use 'ldekit simulate'");
}

// Writes into a staging directory next to out_dir, then renames into place,
// so failures leave out_dir as it was.
void WriteAtomically(const fs::path& out_dir, const std::vector<OutputFile>& files) {
  fs::path target = fs::absolute(out_dir);
  fs::path parent = target.parent_path();
  fs::create_directories(parent);
  std::random_device rd;
  fs::path staging =
      parent / ("." + target.filename().string() + ".tmp" + std::to_string(rd()));
  try {
    for (const OutputFile& f : files) {
      fs::path p = staging / f.path;
      fs::create_directories(p.parent_path());
      std::ofstream o(p, std::ios::binary);
      o << f.content;
      if (!o.flush()) throw Error(ErrorCode::kIo, "cannot write " + p.string());
    }
    if (!fs::exists(target)) {
      fs::create_directories(staging);
      fs::rename(staging, target);
      return;
    }
    for (const OutputFile& f : files) {
      fs::path dst = target / f.path;
      fs::create_directories(dst.parent_path());
      fs::rename(staging / f.path, dst);
    }
    fs::remove_all(staging);
  } catch (const fs::filesystem_error& e) {
    std::error_code ignored;
    fs::remove_all(staging, ignored);
    throw Error(ErrorCode::kIo, e.what());
  } catch (...) {
    std::error_code ignored;
    fs::remove_all(staging, ignored);
    throw;
  }
}

int CmdGenerate(const std::string& file, const std::string& out_dir,
                const std::optional<std::string>& assets,
                const std::vector<std::string>& sig_files) {
  try {
    std::vector<OutputFile> files = Generate(file, assets, sig_files);
    WriteAtomically(out_dir, files);
    for (const OutputFile& f : files) {
      std::cout << (fs::path(out_dir) / f.path).string() << "\n";
    }
    return kOk;
  } catch (const Error& e) {
    std::cerr << file << ": error " << ErrorCodeName(e.code()) << ": " << e.what()
              << "\n";
    return e.code() == ErrorCode::kIo ? kIoOrUsage : kSemantic;
  } catch (const fs::filesystem_error& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kIoOrUsage;
  }
}

int CmdSimulate(const std::string& file) {
  try {
    graph::GraphModel model = graph::LoadModelFile(file);
    if (model.type() != graph::ModelType::kStatechart) {
      std::cerr << file << ": simulate needs a statechart model\n";
      return kSemantic;
    }
    auto chart = statechart::Statechart::Compile(std::move(model));
    service::RunRepl(chart, std::cin, std::cout);
    return kOk;
  } catch (const Error& e) {
    std::cerr << file << ": error " << ErrorCodeName(e.code()) << ": " << e.what()
              << "\n";
    return e.code() == ErrorCode::kIo ? kIoOrUsage : kSemantic;
  }
}

int CmdServe(const std::string& dir, const std::string& host, int port,
             const std::optional<std::string>& ui) {
  try {
    service::ModelCatalog catalog = service::ModelCatalog::Load(dir);
    for (const auto& s : catalog.skipped()) std::cerr << "skipped " << s << "\n";
    service::SessionService api(std::move(catalog));
    std::optional<fs::path> ui_dir;
    if (ui) ui_dir = *ui;
    service::HttpServer server(api, ui_dir);
    int bound = server.Bind(host, port);
    std::cout << "listening on http://" << host << ":" << bound << std::endl;
    server.Run();
    return kOk;
  } catch (const Error& e) {
    std::cerr << "error " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return kIoOrUsage;
  }
}

}  // namespace
}  // namespace ldekit

int main(int argc, char** argv) {
  CLI::App app{"ldekit: validate, generate, simulate and serve graph models"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Validate model files");
  std::vector<std::string> validate_files;
  bool verbose = false;
  std::vector<std::string> validate_sigs;
  validate->add_option("files", validate_files, "Model files")->required();
  validate->add_flag("-v,--verbose", verbose, "Also print info diagnostics");
  validate->add_option("--signatures", validate_sigs,
                       "Annotated Python files for dataflow models");

  auto* generate = app.add_subcommand("generate", "Generate code from a model");
  std::string generate_file, out_dir;
  std::optional<std::string> assets;
  std::vector<std::string> generate_sigs;
  generate->add_option("file", generate_file, "Model file")->required();
  generate->add_option("-o,--out", out_dir, "Output directory")->required();
  generate->add_option("--assets", assets, "Directory holding story images");
  generate->add_option("--signatures", generate_sigs,
                       "Annotated Python files for dataflow models");

  auto* simulate = app.add_subcommand("simulate", "Simulate a statechart");
  std::string simulate_file;
  simulate->add_option("file", simulate_file, "Statechart model file")->required();

  auto* serve = app.add_subcommand("serve", "Serve the session API");
  std::string serve_dir, host = "127.0.0.1";
  int port = 8080;
  std::optional<std::string> ui;
  serve->add_option("dir", serve_dir, "Directory of model files")->required();
  serve->add_option("--port", port, "TCP port, 0 picks a free one");
  serve->add_option("--host", host, "Listen address");
  serve->add_option("--ui", ui, "Directory with the browser UI");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : ldekit::kIoOrUsage;
  }

  if (*validate) return ldekit::CmdValidate(validate_files, verbose, validate_sigs);
  if (*generate) {
    return ldekit::CmdGenerate(generate_file, out_dir, assets, generate_sigs);
  }
  if (*simulate) return ldekit::CmdSimulate(simulate_file);
  return ldekit::CmdServe(serve_dir, host, port, ui);
}
