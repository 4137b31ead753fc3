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

#ifndef TEXTNET_PIPELINE_HPP_
#define TEXTNET_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textnet/common.hpp"

namespace textnet {

// Everything a run depends on. Outputs are a function of this and the
// input files; `out`, `dump` and `threads` do not change any result and
// are left out of the hash.
struct RunConfig {
  std::filesystem::path manifest;
  std::filesystem::path variability_manifest;  // defaults to `manifest`
  std::filesystem::path stoplist;
  std::filesystem::path lemmas;
  std::filesystem::path out = "out";
  std::filesystem::path dump;

  // numbers, or full / third / quarter of the shortest book
  std::vector<std::string> windows = {"500",  "1000",    "1500",  "2000", "2500",
                                      "3000", "quarter", "third", "full"};
  std::vector<std::size_t> variability_windows = {300,  600,  900, 1200,
                                                  1500, 1800, 2100};
  std::vector<std::string> pca_windows;  // empty means every window
  std::string audit_window;              // empty means the smallest window

  std::size_t f_min = 2;
  std::size_t knn_k = 1;
  double bayes_variance_floor = 1e-9;
  std::size_t c45_min_leaf = 2;
  double svm_c = 1.0;
  std::size_t folds = 10;
  std::optional<std::uint64_t> seed;
  double theta = 0.85;

  bool gap_convention = false;
  bool count_raw_tokens = false;
  bool group_by_book = false;
  bool strip_boilerplate = true;
  bool audit = true;
  // cut every classification book to the shortest one before sampling
  bool truncate_books = true;

  unsigned threads = 1;

  // Sorted `key=value` lines of every hashed setting.
  std::string canonical() const;
  std::string hash() const;
};

// Sets one key; relative paths resolve against `base_dir`. Throws Error
// naming the key on an unknown key or malformed value.
void set_config_value(RunConfig& config, std::string_view key,
                      std::string_view value,
                      const std::filesystem::path& base_dir = {});

// Flat `key = value` lines; '#' starts a comment line.
RunConfig parse_config(std::istream& in,
                       const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

enum class Command { kIngest, kMeasure, kVariability, kClassify, kReport };

Command parse_command(std::string_view name);
std::string_view command_name(Command command);

// Runs one stage, reading upstream artifacts from and writing into
// `config.out`. Throws Error on invalid configuration or missing inputs.
void run_pipeline(const RunConfig& config, Command command,
                  Diagnostics* diag = nullptr);

// A window label resolved against the corpus.
struct WindowSpec {
  std::string label;
  std::size_t window = 0;
  std::size_t max_subtexts = 0;  // 0 means unlimited
};

// Numeric labels map to themselves. full, third and quarter split the
// shortest book into 1, 3 and 4 parts and keep that many per book.
std::vector<WindowSpec> resolve_windows(const std::vector<std::string>& labels,
                                        std::size_t shortest_book);

}  // namespace textnet

#endif  // TEXTNET_PIPELINE_HPP_
