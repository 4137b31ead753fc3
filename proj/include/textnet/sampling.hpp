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

#ifndef TEXTNET_SAMPLING_HPP_
#define TEXTNET_SAMPLING_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "textnet/common.hpp"
#include "textnet/corpus.hpp"

namespace textnet {

// A contiguous window of a token stream. `start` is the offset of
// tokens[0] in the source stream, so tokens[k] == stream.tokens[start + k].
struct Subtext {
  std::vector<std::string> tokens;
  std::string book_id;
  std::size_t index = 0;
  std::size_t window = 0;
  std::size_t start = 0;
};

// Adjacent, non-overlapping windows of exactly `window` tokens; the
// trailing remainder is dropped. A stream shorter than the window yields
// no subtexts and a warning. Throws Error when window == 0.
std::vector<Subtext> split_subtexts(const TokenStream& stream,
                                    std::size_t window,
                                    Diagnostics* diag = nullptr);

// Same, but the window is measured in tokenizer output (before stopword
// removal). Subtext i holds the canonical tokens whose raw position lies
// in [i*window, (i+1)*window), so sizes vary. Incomplete trailing raw
// windows are dropped.
std::vector<Subtext> split_subtexts_raw(const TokenStream& stream,
                                        std::size_t window,
                                        Diagnostics* diag = nullptr);

// Writes each subtext to `root/<book_id>/<window>/<index>.txt`, one token
// per line.
void dump_subtexts(const std::filesystem::path& root,
                   const std::vector<Subtext>& subtexts);

}  // namespace textnet

#endif  // TEXTNET_SAMPLING_HPP_
