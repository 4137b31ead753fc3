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

#include <gtest/gtest.h>

#include <filesystem>
#include <set>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "textnet/corpus.hpp"
#include "textnet/csv.hpp"
#include "textnet/stemmer.hpp"

namespace textnet {
namespace {

namespace fs = std::filesystem;
using Tokens = std::vector<std::string>;

const fs::path kFixtures = TEXTNET_FIXTURES_DIR;
const fs::path kData = TEXTNET_DATA_DIR;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("textnet_corpus_" + std::to_string(::testing::UnitTest::GetInstance()
                                                    ->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

  fs::path write(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name, std::ios::binary) << content;
    return path_ / name;
  }

 private:
  fs::path path_;
};

TEST(Tokenize, SampleSentence) {
  EXPECT_EQ(tokenize("Complex networks model several properties of texts."),
            (Tokens{"complex", "networks", "model", "several", "properties",
                    "of", "texts"}));
}

TEST(Tokenize, EmptyInput) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, ApostrophesHyphensAndDigitsSplit) {
  EXPECT_EQ(tokenize("don't stop-word 42"),
            (Tokens{"don", "t", "stop", "word"}));
}

TEST(Tokenize, NonAsciiBytesSeparateWords) {
  EXPECT_EQ(tokenize("caf\xc3\xa9 na\xc3\xafve"), (Tokens{"caf", "na", "ve"}));
}

TEST(Stopwords, SampleSentenceRemovals) {
  const auto stop = Stoplist::load(kData / "stopwords_en.txt");
  const Tokens in = {"complex",    "networks", "model", "several",
                     "properties", "of",       "texts"};
  EXPECT_EQ(remove_stopwords(in, stop),
            (Tokens{"complex", "networks", "model", "properties", "texts"}));
}

TEST(Stopwords, EmptyAndAllStopwords) {
  const auto stop = Stoplist::load(kData / "stopwords_en.txt");
  EXPECT_TRUE(remove_stopwords(Tokens{}, stop).empty());
  EXPECT_TRUE(remove_stopwords(Tokens{"of", "the", "a", "and"}, stop).empty());
}

TEST(Stopwords, ParseSkipsCommentsAndBlanks) {
  std::istringstream in("# header\n\nfoo\n  bar  \n");
  const auto stop = Stoplist::parse(in);
  EXPECT_EQ(stop.size(), 2u);
  EXPECT_TRUE(stop.contains("foo"));
  EXPECT_TRUE(stop.contains("bar"));
  EXPECT_FALSE(stop.contains("#"));
}

TEST(Stemmer, HandAppliedRules) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"networks", "network"},  {"properties", "property"},
      {"texts", "text"},        {"displays", "display"},
      {"classes", "class"},     {"boxes", "box"},
      {"churches", "church"},   {"ties", "tie"},
      {"walked", "walk"},       {"running", "run"},
      {"hoping", "hope"},       {"agreed", "agree"},
      {"feed", "feed"},         {"conflated", "conflate"},
      {"bus", "bus"},           {"analysis", "analysis"},
      {"sing", "sing"},         {"is", "is"},
  };
  for (const auto& [word, stem] : cases) {
    EXPECT_EQ(inflectional_stem(word), stem) << word;
  }
}

TEST(Stemmer, CanonicalFormsAreFixedPoints) {
  for (const char* w : {"network", "property", "text", "display", "complex",
                        "organization", "model"}) {
    EXPECT_EQ(inflectional_stem(w), w);
  }
}

TEST(Stemmer, PorterMeasure) {
  EXPECT_EQ(porter_measure("tr"), 0);
  EXPECT_EQ(porter_measure("tree"), 0);
  EXPECT_EQ(porter_measure("trouble"), 1);
  EXPECT_EQ(porter_measure("oats"), 1);
  EXPECT_EQ(porter_measure("troubles"), 2);
  EXPECT_EQ(porter_measure("private"), 2);
}

TEST(Lemmatize, SampleSentenceCanonicalForms) {
  const auto stream =
      lemmatize({"networks", "properties", "texts", "displays"}, nullptr);
  EXPECT_EQ(stream.tokens, (Tokens{"network", "property", "text", "display"}));
  EXPECT_EQ(stream.raw_positions, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Lemmatize, DictionaryWinsOverStemmer) {
  const auto lemmas = LemmaMap::load(kData / "lemmas.tsv");
  const auto stream =
      lemmatize({"went", "children", "species", "walked"}, &lemmas);
  EXPECT_EQ(stream.tokens, (Tokens{"go", "child", "species", "walk"}));
}

TEST(Lemmatize, LineWithoutTabIsRejected) {
  std::istringstream in("went go\n");
  EXPECT_THROW(LemmaMap::parse(in), Error);
}

TEST(Preprocess, SampleSentenceGivesCanonicalForms) {
  const auto stop = Stoplist::load(kData / "stopwords_en.txt");
  const auto lemmas = LemmaMap::load(kData / "lemmas.tsv");
  RawDocument doc{read_file(kFixtures / "sample_sentence.txt"), {}};
  Diagnostics diag;
  const auto stream = preprocess(doc, {&stop, &lemmas, false}, &diag);
  EXPECT_EQ(stream.tokens,
            (Tokens{"complex", "network", "model", "property", "text",
                    "complex", "text", "display", "complex", "organization"}));
  EXPECT_EQ(stream.raw_count, 14u);
  EXPECT_EQ(stream.raw_positions,
            (std::vector<std::size_t>{0, 1, 2, 4, 6, 8, 9, 10, 12, 13}));
  EXPECT_TRUE(diag.empty());
}

TEST(Preprocess, NeverLongerThanTokenizerOutput) {
  const auto stop = Stoplist::load(kData / "stopwords_en.txt");
  RawDocument doc{"Texts networks, complex models.", {}};
  const auto stream = preprocess(doc, {&stop, nullptr, false});
  EXPECT_EQ(stream.tokens.size(), tokenize(doc.text).size());
  doc.text = "The text of a model.";
  EXPECT_LT(preprocess(doc, {&stop, nullptr, false}).tokens.size(),
            tokenize(doc.text).size());
}

TEST(Preprocess, Deterministic) {
  const auto stop = Stoplist::load(kData / "stopwords_en.txt");
  RawDocument doc{read_file(kFixtures / "boilerplate.txt"), {}};
  const auto a = preprocess(doc, {&stop, nullptr, true});
  const auto b = preprocess(doc, {&stop, nullptr, true});
  EXPECT_EQ(a.tokens, b.tokens);
  EXPECT_EQ(a.raw_positions, b.raw_positions);
}

TEST(Boilerplate, KeepsInteriorOnly) {
  RawDocument doc{read_file(kFixtures / "boilerplate.txt"), {}};
  Diagnostics diag;
  const auto stripped = strip_boilerplate(doc, &diag);
  EXPECT_EQ(tokenize(stripped.text),
            (Tokens{"call", "me", "ishmael", "some", "years", "ago"}));
  EXPECT_TRUE(diag.empty());
  EXPECT_EQ(strip_boilerplate(stripped, nullptr).text, stripped.text);
}

TEST(Boilerplate, NoMarkersKeepsTextAndWarns) {
  RawDocument doc{"plain text only\n", {}};
  Diagnostics diag;
  EXPECT_EQ(strip_boilerplate(doc, &diag).text, doc.text);
  EXPECT_EQ(diag.warnings().size(), 1u);
}

TEST(Boilerplate, EndBeforeStartIsMalformed) {
  RawDocument doc{"*** END OF THE BOOK ***\nbody\n*** START OF THE BOOK ***\n",
                  {}};
  try {
    strip_boilerplate(doc, nullptr);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("malformed boilerplate"),
              std::string::npos);
  }
}

TEST(Manifest, TwentyRowAuthorshipManifest) {
  const auto m = load_manifest(kData / "corpus" / "authorship.csv");
  ASSERT_EQ(m.entries.size(), 20u);
  std::set<std::string> authors;
  for (const auto& e : m.entries) authors.insert(e.author);
  EXPECT_EQ(authors.size(), 4u);
  EXPECT_TRUE(fs::exists(m.entries.front().source));
}

TEST(Manifest, EmptyFileHasNoEntries) {
  std::istringstream in("");
  try {
    parse_manifest(in, ".", false);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("no entries"), std::string::npos);
  }
}

TEST(Manifest, MissingAuthorNamesTheRow) {
  std::istringstream in(
      "author,title,year,path\nA,One,1900,a.txt\n,Two,1901,b.txt\n");
  try {
    parse_manifest(in, ".", false);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("author"), std::string::npos);
  }
}

TEST(Manifest, RejectsDuplicatesBadYearsAndMissingFiles) {
  std::istringstream dup(
      "author,title,year,path\nA,One,1900,a.txt\nA,One,1901,b.txt\n");
  EXPECT_THROW(parse_manifest(dup, ".", false), Error);
  std::istringstream year("author,title,year,path\nA,One,nineteen,a.txt\n");
  EXPECT_THROW(parse_manifest(year, ".", false), Error);
  std::istringstream missing("author,title,year,path\nA,One,1900,nope.txt\n");
  EXPECT_THROW(parse_manifest(missing, kFixtures, true), Error);
  EXPECT_THROW(load_manifest(kFixtures / "does_not_exist.csv"), Error);
}

TEST(Manifest, QuotedFieldsAndRelativePaths) {
  std::istringstream in(
      "author,title,year,path\n\"Melville, Herman\",\"Moby, or the Whale\","
      "1851,sample_sentence.txt\n");
  const auto m = parse_manifest(in, kFixtures, true);
  ASSERT_EQ(m.entries.size(), 1u);
  EXPECT_EQ(m.entries[0].author, "Melville, Herman");
  EXPECT_EQ(m.entries[0].source, kFixtures / "sample_sentence.txt");
  EXPECT_EQ(m.entries[0].book_id(), "melville-herman__moby-or-the-whale");
}

TEST(TokenCache, RoundTripWithHeader) {
  TempDir tmp;
  const Tokens tokens = {"complex", "network", "model"};
  const auto path = tmp.path() / token_cache_name("bytes", "fingerprint");
  write_token_cache(path, tokens, "config_hash=abc");
  EXPECT_EQ(read_token_cache(path), tokens);
  EXPECT_NE(token_cache_name("bytes", "fingerprint"),
            token_cache_name("bytes", "other"));
  EXPECT_NE(token_cache_name("bytes", "fingerprint"),
            token_cache_name("byte", "sfingerprint"));
}

TEST(Csv, QuotesAndComments) {
  std::istringstream in(
      "\xEF\xBB\xBF# comment\na,\"b,c\",\"say \"\"hi\"\"\"\n\nx,y,z\n");
  const auto rows = csv::read(in);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].fields, (Tokens{"a", "b,c", "say \"hi\""}));
  EXPECT_EQ(rows[1].line, 4);
  std::ostringstream out;
  csv::write_row(out, {"a", "b,c", "q\""});
  EXPECT_EQ(out.str(), "a,\"b,c\",\"q\"\"\"\n");
  std::istringstream bad("a,\"open\n");
  EXPECT_THROW(csv::read(bad), Error);
}

}  // namespace
}  // namespace textnet
