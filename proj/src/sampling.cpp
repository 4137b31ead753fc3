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

#include "textnet/sampling.hpp"

#include <algorithm>
#include <fstream>

namespace textnet {

std::vector<Subtext> split_subtexts(const TokenStream& stream,
                                    std::size_t window, Diagnostics* diag) {
  if (window == 0) throw Error("split_subtexts: window must be positive");
  const std::string book_id = stream.meta.book_id();
  const std::size_t count = stream.size() / window;
  if (count == 0) {
    warn(diag, "book " + book_id + " has " + std::to_string(stream.size()) +
                   " tokens, fewer than W=" + std::to_string(window) +
                   "; no subtexts");
  }
  std::vector<Subtext> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto first = stream.tokens.begin() + static_cast<std::ptrdiff_t>(i * window);
    out.push_back(Subtext{{first, first + static_cast<std::ptrdiff_t>(window)},
                          book_id, i, window, i * window});
  }
  return out;
}

std::vector<Subtext> split_subtexts_raw(const TokenStream& stream,
                                        std::size_t window,
                                        Diagnostics* diag) {
  if (window == 0) throw Error("split_subtexts_raw: window must be positive");
  if (stream.raw_positions.size() != stream.tokens.size()) {
    throw Error("split_subtexts_raw: stream lacks raw positions");
  }
  const std::string book_id = stream.meta.book_id();
  const std::size_t count = stream.raw_count / window;
  if (count == 0) {
    warn(diag, "book " + book_id + " has " + std::to_string(stream.raw_count) +
                   " raw tokens, fewer than W=" + std::to_string(window) +
                   "; no subtexts");
  }
  std::vector<Subtext> out;
  out.reserve(count);
  const auto& pos = stream.raw_positions;
  for (std::size_t i = 0; i < count; ++i) {
    const auto lo = std::lower_bound(pos.begin(), pos.end(), i * window);
    const auto hi = std::lower_bound(lo, pos.end(), (i + 1) * window);
    const auto a = static_cast<std::size_t>(lo - pos.begin());
    const auto b = static_cast<std::size_t>(hi - pos.begin());
    out.push_back(Subtext{{stream.tokens.begin() + static_cast<std::ptrdiff_t>(a),
                           stream.tokens.begin() + static_cast<std::ptrdiff_t>(b)},
                          book_id, i, window, a});
  }
  return out;
}

void dump_subtexts(const std::filesystem::path& root,
                   const std::vector<Subtext>& subtexts) {
  for (const auto& s : subtexts) {
    const auto dir = root / s.book_id / std::to_string(s.window);
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / (std::to_string(s.index) + ".txt"),
                      std::ios::binary);
    if (!out) throw Error("cannot write subtext dump under " + dir.string());
    for (const auto& t : s.tokens) out << t << '\n';
  }
}

}  // namespace textnet
