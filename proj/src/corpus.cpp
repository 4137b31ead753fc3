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

#include "textnet/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "textnet/csv.hpp"
#include "textnet/stemmer.hpp"

namespace textnet {
namespace {

bool is_ascii_alpha(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Marker lines look like "*** START OF THE PROJECT GUTENBERG EBOOK ...",
// occasionally without the space after the asterisks.
bool is_marker(std::string_view line, std::string_view keyword) {
  line = trim(line);
  if (line.substr(0, 3) != "***") return false;
  line.remove_prefix(3);
  line = trim(line);
  if (line.size() < keyword.size()) return false;
  for (std::size_t i = 0; i < keyword.size(); ++i) {
    if (std::toupper(static_cast<unsigned char>(line[i])) != keyword[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string slugify(std::string_view text) {
  std::string out;
  bool pending_dash = false;
  for (unsigned char c : text) {
    if (is_ascii_alpha(c) || (c >= '0' && c <= '9')) {
      if (pending_dash && !out.empty()) out.push_back('-');
      pending_dash = false;
      out.push_back(static_cast<char>(std::tolower(c)));
    } else {
      pending_dash = true;
    }
  }
  return out;
}

std::string ManifestEntry::book_id() const {
  return slugify(author) + "__" + slugify(title);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path.string());
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

Manifest parse_manifest(std::istream& in,
                        const std::filesystem::path& base_dir,
                        bool check_paths) {
  const auto records = csv::read(in);
  if (records.empty()) throw Error("manifest: no entries");

  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < records[0].fields.size(); ++i) {
    column[std::string(trim(records[0].fields[i]))] = i;
  }
  for (const char* name : {"author", "title", "year", "path"}) {
    if (!column.count(name)) {
      throw Error(std::string("manifest: header lacks column '") + name + "'");
    }
  }

  Manifest manifest;
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string where = "manifest row " + std::to_string(r) +
                              " (line " + std::to_string(rec.line) + ")";
    if (rec.fields.size() != records[0].fields.size()) {
      throw Error(where + ": expected " +
                  std::to_string(records[0].fields.size()) + " fields, got " +
                  std::to_string(rec.fields.size()));
    }
    auto field = [&](const char* name) {
      return std::string(trim(rec.fields[column.at(name)]));
    };
    ManifestEntry entry;
    entry.author = field("author");
    entry.title = field("title");
    if (entry.author.empty()) throw Error(where + ": missing author");
    if (entry.title.empty()) throw Error(where + ": missing title");
    const std::string year = field("year");
    const auto [ptr, ec] =
        std::from_chars(year.data(), year.data() + year.size(), entry.year);
    if (year.empty() || ec != std::errc() || ptr != year.data() + year.size()) {
      throw Error(where + ": year is not an integer: '" + year + "'");
    }
    const std::string path = field("path");
    if (path.empty()) throw Error(where + ": missing path");
    entry.source = std::filesystem::path(path);
    if (entry.source.is_relative()) entry.source = base_dir / entry.source;
    entry.source = entry.source.lexically_normal();
    if (check_paths && !std::filesystem::is_regular_file(entry.source)) {
      throw Error(where + ": source not found: " + entry.source.string());
    }
    if (!seen.emplace(entry.author, entry.title).second) {
      throw Error(where + ": duplicate (author, title) pair: " + entry.author +
                  ", " + entry.title);
    }
    manifest.entries.push_back(std::move(entry));
  }
  if (manifest.entries.empty()) throw Error("manifest: no entries");
  return manifest;
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("manifest: cannot open " + path.string());
  return parse_manifest(in, path.parent_path());
}

RawDocument load_document(const ManifestEntry& entry) {
  return RawDocument{read_file(entry.source), entry};
}

RawDocument strip_boilerplate(RawDocument doc, Diagnostics* diag) {
  const std::string& text = doc.text;
  std::optional<std::size_t> start_end;  // offset just past the START line
  std::optional<std::size_t> end_begin;  // offset of the END line
  std::optional<std::size_t> first_end;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    const std::size_t line_end = nl == std::string::npos ? text.size() : nl;
    const std::string_view line(text.data() + pos, line_end - pos);
    const std::size_t next = nl == std::string::npos ? text.size() : nl + 1;
    if (!start_end && is_marker(line, "START OF")) {
      start_end = next;
    } else if (is_marker(line, "END OF")) {
      if (!first_end) first_end = pos;
      if (start_end && !end_begin) end_begin = pos;
    }
    pos = next;
  }
  if (!start_end && !first_end) {
    warn(diag, "no boilerplate markers in " + doc.meta.source.string() +
                   "; text kept unchanged");
    return doc;
  }
  if (start_end && first_end && *first_end < *start_end) {
    throw Error("malformed boilerplate: END marker precedes START marker in " +
                doc.meta.source.string());
  }
  const std::size_t begin = start_end.value_or(0);
  const std::size_t end = start_end ? end_begin.value_or(text.size())
                                    : *first_end;
  doc.text = text.substr(begin, end - begin);
  return doc;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (is_ascii_alpha(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

Stoplist Stoplist::parse(std::istream& in) {
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view s = line;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) {
      s = s.substr(0, hash);
    }
    s = trim(s);
    if (s.empty()) continue;
    std::string word(s);
    std::transform(word.begin(), word.end(), word.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
    words.insert(std::move(word));
  }
  return Stoplist(std::move(words));
}

Stoplist Stoplist::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("stoplist: cannot open " + path.string());
  return parse(in);
}

std::vector<std::string> remove_stopwords(std::span<const std::string> tokens,
                                          const Stoplist& stoplist) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stoplist.contains(t)) out.push_back(t);
  }
  return out;
}

LemmaMap LemmaMap::parse(std::istream& in) {
  LemmaMap map;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    const auto tab = s.find('\t');
    if (tab == std::string_view::npos) {
      throw Error("lemma dictionary line " + std::to_string(number) +
                  ": expected surface<TAB>lemma");
    }
    const auto surface = trim(s.substr(0, tab));
    const auto lemma = trim(s.substr(tab + 1));
    if (surface.empty() || lemma.empty()) {
      throw Error("lemma dictionary line " + std::to_string(number) +
                  ": empty field");
    }
    map.add(std::string(surface), std::string(lemma));
  }
  return map;
}

LemmaMap LemmaMap::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("lemma dictionary: cannot open " + path.string());
  return parse(in);
}

const std::string* LemmaMap::find(std::string_view surface) const {
  const auto it = map_.find(std::string(surface));
  return it == map_.end() ? nullptr : &it->second;
}

TokenStream lemmatize(std::vector<std::string> tokens,
                      const LemmaMap* lemma_map, ManifestEntry meta) {
  TokenStream stream;
  stream.raw_count = tokens.size();
  stream.raw_positions.resize(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    stream.raw_positions[i] = i;
    const std::string* lemma =
        lemma_map != nullptr ? lemma_map->find(tokens[i]) : nullptr;
    tokens[i] = lemma != nullptr ? *lemma : inflectional_stem(tokens[i]);
  }
  stream.tokens = std::move(tokens);
  stream.meta = std::move(meta);
  return stream;
}

TokenStream preprocess(const RawDocument& doc, const PreprocessOptions& opts,
                       Diagnostics* diag) {
  const RawDocument body =
      opts.strip_boilerplate ? strip_boilerplate(doc, diag) : doc;
  const auto raw = tokenize(body.text);

  std::vector<std::string> kept;
  std::vector<std::size_t> positions;
  kept.reserve(raw.size());
  positions.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (opts.stoplist != nullptr && opts.stoplist->contains(raw[i])) continue;
    kept.push_back(raw[i]);
    positions.push_back(i);
  }
  TokenStream stream = lemmatize(std::move(kept), opts.lemma_map, doc.meta);
  stream.raw_positions = std::move(positions);
  stream.raw_count = raw.size();
  if (stream.tokens.empty()) {
    warn(diag, "document yields no tokens: " + doc.meta.source.string());
  }
  return stream;
}

std::string token_cache_name(std::string_view source_bytes,
                             std::string_view pipeline_fingerprint) {
  Fnv1a h;
  h.update(source_bytes);
  h.update(std::string_view("\0", 1));
  h.update(pipeline_fingerprint);
  return h.hex() + ".tokens";
}

void write_token_cache(const std::filesystem::path& path,
                       std::span<const std::string> tokens,
                       std::string_view header) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write token cache: " + path.string());
  if (!header.empty()) out << "# " << header << '\n';
  for (const auto& t : tokens) out << t << '\n';
}

std::vector<std::string> read_token_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read token cache: " + path.string());
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') tokens.push_back(line);
  }
  return tokens;
}

}  // namespace textnet
