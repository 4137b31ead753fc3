// Copyright 2026 The textnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "textnet/common.hpp"
#include "textnet/parallel.hpp"
#include "textnet/pipeline.hpp"

namespace {

struct Flags {
  std::string config;
  std::vector<std::string> windows;
  std::vector<std::string> overrides;
  std::string out;
  std::string dump;
  std::string manifest;
  unsigned threads = 0;
  std::string seed;
  bool count_raw_tokens = false;
  bool gap_convention = false;
  bool group_by_book = false;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("-c,--config", f.config, "key = value config file");
  cmd->add_option("--manifest", f.manifest, "book manifest CSV");
  cmd->add_option("-w,--window", f.windows,
                  "window (tokens, or full/third/quarter); repeatable");
  cmd->add_option("-o,--out", f.out, "output directory");
  cmd->add_option("--dump", f.dump, "write every subtext under this directory");
  cmd->add_option("-j,--threads", f.threads, "worker threads");
  cmd->add_option("--seed", f.seed, "random seed (required for classify)");
  cmd->add_option("--set", f.overrides, "override a config key: key=value");
  cmd->add_flag("--count-raw-tokens", f.count_raw_tokens,
                "measure windows in tokens before stopword removal");
  cmd->add_flag("--gap-convention", f.gap_convention,
                "recurrence time counts the words in between");
  cmd->add_flag("--group-by-book", f.group_by_book,
                "keep every book inside a single fold");
}

textnet::RunConfig build_config(const Flags& f) {
  textnet::RunConfig c;
  if (!f.config.empty()) c = textnet::load_config(f.config);
  for (const auto& kv : f.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw textnet::Error("--set expects key=value, got '" + kv + "'");
    }
    textnet::set_config_value(c, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!f.manifest.empty()) textnet::set_config_value(c, "manifest", f.manifest);
  if (!f.windows.empty()) {
    std::string joined;
    for (const auto& w : f.windows) joined += (joined.empty() ? "" : ",") + w;
    textnet::set_config_value(c, "windows", joined);
  }
  if (!f.out.empty()) c.out = f.out;
  if (!f.dump.empty()) c.dump = f.dump;
  if (!f.seed.empty()) textnet::set_config_value(c, "seed", f.seed);
  if (f.threads > 0) c.threads = f.threads;
  if (f.count_raw_tokens) c.count_raw_tokens = true;
  if (f.gap_convention) c.gap_convention = true;
  if (f.group_by_book) c.group_by_book = true;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word co-occurrence network stylometry"};
  app.require_subcommand(1);
  Flags flags;
  const char* help[] = {
      "preprocess the manifest books into token caches",
      "feature vectors for every subtext at every window",
      "coefficient of variation of each measurement across windows",
      "cross-validated authorship classification",
      "PCA projections and run summary",
  };
  const textnet::Command commands[] = {
      textnet::Command::kIngest, textnet::Command::kMeasure,
      textnet::Command::kVariability, textnet::Command::kClassify,
      textnet::Command::kReport};
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < 5; ++i) {
    auto* sub = app.add_subcommand(
        std::string(textnet::command_name(commands[i])), help[i]);
    add_flags(sub, flags);
    subs.push_back(sub);
  }
  CLI11_PARSE(app, argc, argv);

  try {
    const auto config = build_config(flags);
    textnet::Diagnostics diag;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!subs[i]->parsed()) continue;
      textnet::run_pipeline(config, commands[i], &diag);
    }
    for (const auto& w : diag.warnings()) std::cerr << "warning: " << w << '\n';
    std::cout << "config_hash=" << config.hash() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
