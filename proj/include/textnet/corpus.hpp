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

// Corpus ingestion: manifest loading, boilerplate removal, tokenization,
// stopword filtering and lemmatization into canonical token streams.

#ifndef TEXTNET_CORPUS_HPP_
#define TEXTNET_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "textnet/common.hpp"

namespace textnet {

struct ManifestEntry {
  std::string author;
  std::string title;
  int year = 0;
  std::filesystem::path source;

  // "<author-slug>__<title-slug>", unique within a manifest.
  std::string book_id() const;
};

struct Manifest {
  std::vector<ManifestEntry> entries;
};

// Reads CSV with header `author,title,year,path`. Relative paths resolve
// against `base_dir`. Throws Error naming the offending row.
Manifest parse_manifest(std::istream& in,
                        const std::filesystem::path& base_dir,
                        bool check_paths = true);
Manifest load_manifest(const std::filesystem::path& path);

struct RawDocument {
  std::string text;
  ManifestEntry meta;
};

RawDocument load_document(const ManifestEntry& entry);

// Keeps only the text between a "*** START OF" line and a "*** END OF"
// line (either may be missing). Without markers the input is returned
// unchanged and a warning is recorded. An END marker before the START
// marker throws "malformed boilerplate".
RawDocument strip_boilerplate(RawDocument doc, Diagnostics* diag = nullptr);

// Maximal runs of ASCII letters, lowercased. Everything else (digits,
// punctuation, apostrophes, hyphens, non-ASCII bytes) separates tokens.
std::vector<std::string> tokenize(std::string_view text);

class Stoplist {
 public:
  Stoplist() = default;
  explicit Stoplist(std::unordered_set<std::string> words)
      : words_(std::move(words)) {}

  // One word per line; '#' starts a comment; blank lines ignored.
  static Stoplist parse(std::istream& in);
  static Stoplist load(const std::filesystem::path& path);

  bool contains(std::string_view word) const {
    return words_.count(std::string(word)) != 0;
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

std::vector<std::string> remove_stopwords(std::span<const std::string> tokens,
                                          const Stoplist& stoplist);

class LemmaMap {
 public:
  LemmaMap() = default;

  // Lines `surface<TAB>lemma`; '#' comments and blank lines ignored.
  static LemmaMap parse(std::istream& in);
  static LemmaMap load(const std::filesystem::path& path);

  void add(std::string surface, std::string lemma) {
    map_[std::move(surface)] = std::move(lemma);
  }
  const std::string* find(std::string_view surface) const;
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::string, std::string> map_;
};

// A pre-processed document. raw_positions[k] is the index, in the
// tokenizer output, of the word that became tokens[k].
struct TokenStream {
  std::vector<std::string> tokens;
  std::vector<std::size_t> raw_positions;
  std::size_t raw_count = 0;
  ManifestEntry meta;

  std::size_t size() const { return tokens.size(); }
};

// Dictionary lookup first, inflectional stem otherwise. Length preserved.
TokenStream lemmatize(std::vector<std::string> tokens,
                      const LemmaMap* lemma_map, ManifestEntry meta = {});

struct PreprocessOptions {
  const Stoplist* stoplist = nullptr;
  const LemmaMap* lemma_map = nullptr;
  bool strip_boilerplate = true;
};

// strip_boilerplate -> tokenize -> remove_stopwords -> lemmatize, keeping
// raw token positions for raw-count windowing.
TokenStream preprocess(const RawDocument& doc, const PreprocessOptions& opts,
                       Diagnostics* diag = nullptr);

// Token cache files: one token per line after an optional "# " header.
// The file name is a hash of the source bytes and a pipeline fingerprint.
std::string token_cache_name(std::string_view source_bytes,
                             std::string_view pipeline_fingerprint);
void write_token_cache(const std::filesystem::path& path,
                       std::span<const std::string> tokens,
                       std::string_view header = {});
std::vector<std::string> read_token_cache(const std::filesystem::path& path);

// Lowercase ASCII slug: letters and digits kept, other runs become '-'.
std::string slugify(std::string_view text);

std::string read_file(const std::filesystem::path& path);

}  // namespace textnet

#endif  // TEXTNET_CORPUS_HPP_
