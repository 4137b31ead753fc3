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

#include "textnet/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "textnet/corpus.hpp"
#include "textnet/csv.hpp"
#include "textnet/features.hpp"
#include "textnet/ml/classifiers.hpp"
#include "textnet/ml/dataset.hpp"
#include "textnet/ml/pca.hpp"
#include "textnet/ml/validation.hpp"
#include "textnet/parallel.hpp"
#include "textnet/sampling.hpp"

namespace textnet {
namespace fs = std::filesystem;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    const auto comma = value.find(',', start);
    const auto end = comma == std::string_view::npos ? value.size() : comma;
    auto item = trim(value.substr(start, end - start));
    if (!item.empty()) out.push_back(std::move(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw Error("config: bad value '" + std::string(value) + "' for " +
                std::string(key));
  }
  return out;
}

double parse_real(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    const std::string s(value);
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw Error("config: bad value '" + std::string(value) + "' for " +
                std::string(key));
  }
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") {
    return true;
  }
  if (value == "false" || value == "0" || value == "no" || value == "off") {
    return false;
  }
  throw Error("config: bad boolean '" + std::string(value) + "' for " +
              std::string(key));
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ',';
    out += s;
  }
  return out;
}

fs::path resolve(const fs::path& base, std::string_view value) {
  fs::path p{std::string(value)};
  if (p.empty() || p.is_absolute() || base.empty()) return p;
  return base / p;
}

// Every artifact starts with the config hash so stale files are visible.
void write_artifact(const fs::path& path, const std::string& hash,
                    const std::string& body) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << "# config_hash=" << hash << '\n' << body;
  if (!out) throw Error("write failed: " + path.string());
}

std::ifstream open_input(const fs::path& path, std::string_view hint) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("missing input " + path.string() + " (run '" +
                std::string(hint) + "' first)");
  }
  return in;
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Resources {
  Stoplist stoplist;
  LemmaMap lemmas;
  bool has_stoplist = false;
  bool has_lemmas = false;
  std::string fingerprint;

  PreprocessOptions options(bool strip) const {
    return {has_stoplist ? &stoplist : nullptr,
            has_lemmas ? &lemmas : nullptr, strip};
  }
};

Resources load_resources(const RunConfig& config) {
  Resources r;
  Fnv1a fp;
  fp.update("textnet-preprocess-1");
  if (!config.stoplist.empty()) {
    r.stoplist = Stoplist::load(config.stoplist);
    r.has_stoplist = true;
    fp.update("\nstop\n").update(read_file(config.stoplist));
  }
  if (!config.lemmas.empty()) {
    r.lemmas = LemmaMap::load(config.lemmas);
    r.has_lemmas = true;
    fp.update("\nlemma\n").update(read_file(config.lemmas));
  }
  fp.update(config.strip_boilerplate ? "\nstrip" : "\nkeep");
  r.fingerprint = fp.hex();
  return r;
}

const fs::path& variability_manifest(const RunConfig& c) {
  return c.variability_manifest.empty() ? c.manifest : c.variability_manifest;
}

void require_manifest(const fs::path& p) {
  if (p.empty()) throw Error("config: manifest is not set");
}

// ---- ingest --------------------------------------------------------------

void run_ingest(const RunConfig& config, Diagnostics* diag) {
  require_manifest(config.manifest);
  const auto resources = load_resources(config);
  std::vector<ManifestEntry> entries;
  std::set<std::string> seen;
  for (const auto& path : {config.manifest, variability_manifest(config)}) {
    for (auto& e : load_manifest(path).entries) {
      if (seen.insert(e.book_id()).second) entries.push_back(std::move(e));
    }
  }

  struct Row {
    std::string cache;
    std::size_t tokens = 0;
    std::size_t raw = 0;
  };
  std::vector<Row> rows(entries.size());
  std::vector<Diagnostics> local(entries.size());
  const std::string hash = config.hash();
  const fs::path cache_dir = config.out / "cache";
  fs::create_directories(cache_dir);
  parallel_for(entries.size(), config.threads, [&](std::size_t i) {
    auto doc = load_document(entries[i]);
    const auto name = token_cache_name(doc.text, resources.fingerprint);
    auto stream = preprocess(doc, resources.options(config.strip_boilerplate),
                             &local[i]);
    write_token_cache(cache_dir / name, stream.tokens,
                      "config_hash=" + hash);
    rows[i] = {name, stream.tokens.size(), stream.raw_count};
  });
  for (const auto& d : local) {
    if (diag) diag->merge(d);
  }

  std::ostringstream body;
  csv::write_row(body, {"book_id", "author", "title", "year", "source",
                        "tokens", "raw_tokens", "cache"});
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    csv::write_row(body, {e.book_id(), e.author, e.title,
                          std::to_string(e.year), e.source.generic_string(),
                          std::to_string(rows[i].tokens),
                          std::to_string(rows[i].raw), rows[i].cache});
  }
  write_artifact(config.out / "ingest" / "index.csv", hash, body.str());
}

// Token streams for a manifest, from the ingest caches. In raw-count mode
// the sources are preprocessed again to recover raw positions.
std::vector<TokenStream> load_books(const RunConfig& config,
                                    const fs::path& manifest_path,
                                    Diagnostics* diag) {
  auto in = open_input(config.out / "ingest" / "index.csv", "ingest");
  std::map<std::string, std::string> cache_of;
  for (const auto& r : csv::read(in)) {
    if (r.fields.size() != 8 || r.fields[0] == "book_id") continue;
    cache_of[r.fields[0]] = r.fields[7];
  }
  const auto manifest = load_manifest(manifest_path);
  std::vector<TokenStream> books(manifest.entries.size());
  Resources resources;
  if (config.count_raw_tokens) resources = load_resources(config);
  std::vector<Diagnostics> local(books.size());
  parallel_for(books.size(), config.threads, [&](std::size_t i) {
    const auto& e = manifest.entries[i];
    auto it = cache_of.find(e.book_id());
    if (it == cache_of.end()) {
      throw Error("book '" + e.book_id() + "' is not ingested (run 'ingest')");
    }
    if (config.count_raw_tokens) {
      books[i] = preprocess(load_document(e),
                            resources.options(config.strip_boilerplate),
                            &local[i]);
    } else {
      books[i] = lemmatize({}, nullptr, e);
      books[i].tokens = read_token_cache(config.out / "cache" / it->second);
      books[i].raw_positions.resize(books[i].tokens.size());
      for (std::size_t k = 0; k < books[i].tokens.size(); ++k) {
        books[i].raw_positions[k] = k;
      }
      books[i].raw_count = books[i].tokens.size();
    }
  });
  for (const auto& d : local) {
    if (diag) diag->merge(d);
  }
  return books;
}

std::vector<Subtext> split(const RunConfig& config, const TokenStream& book,
                           std::size_t window, Diagnostics* diag) {
  return config.count_raw_tokens ? split_subtexts_raw(book, window, diag)
                                 : split_subtexts(book, window, diag);
}

// Keeps the first `length` tokens, or in raw mode the tokens whose raw
// position is below `length`.
void truncate_stream(TokenStream& book, std::size_t length, bool raw) {
  std::size_t keep = length;
  if (raw) {
    keep = static_cast<std::size_t>(
        std::lower_bound(book.raw_positions.begin(), book.raw_positions.end(),
                         length) -
        book.raw_positions.begin());
    book.raw_count = std::min(book.raw_count, length);
  } else {
    book.raw_count = std::min(book.raw_count, keep);
  }
  keep = std::min(keep, book.tokens.size());
  book.tokens.resize(keep);
  book.raw_positions.resize(keep);
}

MeasureOptions measure_options(const RunConfig& config) {
  return {config.f_min, config.gap_convention ? RecurrenceConvention::kGap
                                              : RecurrenceConvention::kDifference};
}

// ---- measure -------------------------------------------------------------

void run_measure(const RunConfig& config, Diagnostics* diag) {
  require_manifest(config.manifest);
  auto books = load_books(config, config.manifest, diag);
  if (books.empty()) throw Error("manifest has no books");
  std::size_t shortest = SIZE_MAX;
  for (const auto& b : books) {
    shortest = std::min(shortest, config.count_raw_tokens ? b.raw_count
                                                          : b.tokens.size());
  }
  if (config.truncate_books) {
    for (auto& b : books) truncate_stream(b, shortest, config.count_raw_tokens);
  }
  const auto specs = resolve_windows(config.windows, shortest);
  const std::string hash = config.hash();
  const auto options = measure_options(config);

  std::ostringstream index;
  csv::write_row(index, {"label", "W", "max_subtexts", "rows"});
  for (const auto& spec : specs) {
    std::vector<Subtext> subtexts;
    std::vector<std::string> authors;
    for (const auto& book : books) {
      auto parts = split(config, book, spec.window, diag);
      if (spec.max_subtexts > 0 && parts.size() > spec.max_subtexts) {
        parts.resize(spec.max_subtexts);
      }
      for (auto& s : parts) {
        subtexts.push_back(std::move(s));
        authors.push_back(book.meta.author);
      }
    }
    if (!config.dump.empty()) dump_subtexts(config.dump, subtexts);
    const auto rows =
        measure_subtexts(subtexts, authors, options, config.threads, diag);
    std::ostringstream body;
    write_features_csv(body, rows);
    write_artifact(config.out / "features" / (spec.label + ".csv"), hash,
                   body.str());
    csv::write_row(index, {spec.label, std::to_string(spec.window),
                           std::to_string(spec.max_subtexts),
                           std::to_string(rows.size())});
  }
  write_artifact(config.out / "features" / "windows.csv", hash, index.str());
}

std::vector<WindowSpec> read_window_index(const RunConfig& config) {
  auto in = open_input(config.out / "features" / "windows.csv", "measure");
  std::vector<WindowSpec> specs;
  for (const auto& r : csv::read(in)) {
    if (r.fields.size() != 4 || r.fields[0] == "label") continue;
    specs.push_back({r.fields[0], parse_number<std::size_t>("W", r.fields[1]),
                     parse_number<std::size_t>("max_subtexts", r.fields[2])});
  }
  if (specs.empty()) throw Error("features/windows.csv lists no windows");
  return specs;
}

std::vector<FeatureVector> read_features(const RunConfig& config,
                                         const std::string& label) {
  auto in = open_input(config.out / "features" / (label + ".csv"), "measure");
  return read_features_csv(in);
}

// ---- variability ---------------------------------------------------------

void run_variability(const RunConfig& config, Diagnostics* diag) {
  require_manifest(variability_manifest(config));
  if (config.variability_windows.empty()) {
    throw Error("config: variability_windows is empty");
  }
  const auto books = load_books(config, variability_manifest(config), diag);
  const auto options = measure_options(config);
  std::vector<FeatureVector> rows;
  for (std::size_t w : config.variability_windows) {
    std::vector<Subtext> subtexts;
    std::vector<std::string> authors;
    for (const auto& book : books) {
      for (auto& s : split(config, book, w, diag)) {
        subtexts.push_back(std::move(s));
        authors.push_back(book.meta.author);
      }
    }
    auto part =
        measure_subtexts(subtexts, authors, options, config.threads, diag);
    rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  const auto report = variability_from_features(rows, diag);
  const std::string hash = config.hash();
  std::ostringstream cells;
  write_variability_csv(cells, report);
  write_artifact(config.out / "variability" / "variability.csv", hash,
                 cells.str());
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    std::ostringstream plot;
    write_plot_data(plot, report, f);
    write_artifact(config.out / "variability" /
                       ("plot_" + std::string(kFeatureNames[f]) + ".csv"),
                   hash, plot.str());
  }
}

// ---- classify ------------------------------------------------------------

ml::ClassifierConfig classifier_config(const RunConfig& config,
                                       ml::ClassifierKind kind) {
  ml::ClassifierConfig c;
  c.kind = kind;
  c.knn_k = config.knn_k;
  c.bayes_variance_floor = config.bayes_variance_floor;
  c.c45_min_leaf = config.c45_min_leaf;
  c.svm_c = config.svm_c;
  c.threads = 1;
  return c;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void run_classify(const RunConfig& config, Diagnostics* diag) {
  if (!config.seed) throw Error("classify requires a seed (--seed)");
  auto specs = read_window_index(config);
  std::stable_sort(specs.begin(), specs.end(),
                   [](const auto& a, const auto& b) { return a.window < b.window; });
  const std::string hash = config.hash();
  ml::CvOptions cv;
  cv.folds = config.folds;
  cv.seed = *config.seed;
  cv.group_by_book = config.group_by_book;
  cv.threads = config.threads;

  std::ostringstream folds, accuracy, summary;
  csv::write_row(folds, {"classifier", "W", "fold", "accuracy"});
  csv::write_row(accuracy, {"classifier", "W", "label", "correct", "total",
                            "accuracy", "p_value"});
  std::vector<std::string> header = {"W"};
  for (auto kind : ml::kAllClassifiers) {
    header.emplace_back(ml::classifier_name(kind));
  }
  csv::write_row(summary, header);

  std::map<ml::ClassifierKind, std::vector<ml::AccuracyPoint>> ladder;
  std::map<ml::ClassifierKind, double> afb;
  std::string afb_label;
  for (const auto& s : specs) {
    if (s.label == "full") afb_label = s.label;
  }
  if (afb_label.empty()) {
    afb_label = specs.back().label;
    warn(diag, "no 'full' window; AFB taken at W=" +
                   std::to_string(specs.back().window));
  }

  for (const auto& spec : specs) {
    const auto rows = read_features(config, spec.label);
    const auto data = ml::dataset_from_features(rows);
    std::vector<std::string> cells = {std::to_string(spec.window)};
    for (auto kind : ml::kAllClassifiers) {
      const auto report =
          ml::cross_validate(data, classifier_config(config, kind), cv, diag);
      const std::string name(ml::classifier_name(kind));
      for (std::size_t f = 0; f < report.folds; ++f) {
        csv::write_row(folds, {name, std::to_string(spec.window),
                               std::to_string(f),
                               format_double(report.fold_accuracy[f])});
      }
      csv::write_row(accuracy,
                     {name, std::to_string(spec.window), spec.label,
                      std::to_string(report.correct),
                      std::to_string(report.total),
                      format_double(report.accuracy),
                      format_double(report.p_value)});
      cells.push_back(fixed2(100.0 * report.accuracy));
      ladder[kind].push_back({spec.window, report.accuracy});
      if (spec.label == afb_label) afb[kind] = report.accuracy;

      std::ostringstream confusion;
      std::vector<std::string> head = {"true\\predicted"};
      for (const auto& c : data.class_names()) head.push_back(c);
      csv::write_row(confusion, head);
      for (std::size_t t = 0; t < report.confusion.size(); ++t) {
        std::vector<std::string> row = {data.class_names()[t]};
        for (auto v : report.confusion[t]) row.push_back(std::to_string(v));
        csv::write_row(confusion, row);
      }
      write_artifact(config.out / "classify" / "confusion" /
                         (name + "_" + spec.label + ".csv"),
                     hash, confusion.str());
    }
    csv::write_row(summary, cells);
  }

  std::ostringstream threshold;
  csv::write_row(threshold, {"classifier", "theta", "afb", "target", "W_L"});
  for (auto kind : ml::kAllClassifiers) {
    const auto wl = ml::threshold_window(ladder[kind], afb[kind], config.theta);
    csv::write_row(threshold, {std::string(ml::classifier_name(kind)),
                               format_double(config.theta),
                               format_double(afb[kind]),
                               format_double(config.theta * afb[kind]),
                               wl ? std::to_string(*wl) : ""});
  }

  const fs::path dir = config.out / "classify";
  write_artifact(dir / "folds.csv", hash, folds.str());
  write_artifact(dir / "accuracy.csv", hash, accuracy.str());
  write_artifact(dir / "summary.csv", hash, summary.str());
  write_artifact(dir / "threshold.csv", hash, threshold.str());

  if (config.audit) {
    const std::string label =
        config.audit_window.empty() ? specs.front().label : config.audit_window;
    const auto data = ml::permute_labels(
        ml::dataset_from_features(read_features(config, label)),
        derive_seed(*config.seed, 1));
    std::ostringstream audit;
    csv::write_row(audit, {"classifier", "label", "accuracy", "chance"});
    for (auto kind : ml::kAllClassifiers) {
      const auto report =
          ml::cross_validate(data, classifier_config(config, kind), cv, diag);
      csv::write_row(audit, {std::string(ml::classifier_name(kind)), label,
                             format_double(report.accuracy),
                             format_double(1.0 / static_cast<double>(
                                                     data.class_count()))});
    }
    write_artifact(dir / "audit.csv", hash, audit.str());
  }
}

// ---- report --------------------------------------------------------------

void run_report(const RunConfig& config, Diagnostics* diag) {
  auto specs = read_window_index(config);
  std::vector<std::string> labels = config.pca_windows;
  if (labels.empty()) {
    for (const auto& s : specs) labels.push_back(s.label);
  }
  const std::string hash = config.hash();
  std::ostringstream variance;
  csv::write_row(variance, {"label", "W", "component", "eigenvalue",
                            "explained", "rank_deficient"});
  for (const auto& label : labels) {
    auto it = std::find_if(specs.begin(), specs.end(),
                           [&](const auto& s) { return s.label == label; });
    if (it == specs.end()) throw Error("report: unknown window '" + label + "'");
    const auto rows = read_features(config, label);
    const auto data = ml::dataset_from_features(rows);
    if (data.size() <= 2) {
      warn(diag, "report: too few subtexts for PCA at window " + label);
      continue;
    }
    ml::Standardizer scaler;
    scaler.fit(data);
    const auto pca = ml::pca_project(scaler.transform(data), 2);
    if (pca.rank_deficient) {
      warn(diag, "report: covariance at window " + label + " is rank deficient");
    }
    std::ostringstream body;
    csv::write_row(body, {"pc1", "pc2", "author", "book_id", "W"});
    for (std::size_t i = 0; i < rows.size(); ++i) {
      csv::write_row(body, {format_double(pca.at(i, 0)),
                            format_double(pca.at(i, 1)), rows[i].author,
                            rows[i].book_id, std::to_string(rows[i].window)});
    }
    write_artifact(config.out / "report" / ("pca_" + label + ".csv"), hash,
                   body.str());
    for (std::size_t c = 0; c < pca.dims; ++c) {
      csv::write_row(variance, {label, std::to_string(it->window),
                                std::to_string(c + 1),
                                format_double(pca.eigenvalues[c]),
                                format_double(pca.explained[c]),
                                pca.rank_deficient ? "1" : "0"});
    }
  }
  write_artifact(config.out / "report" / "pca_variance.csv", hash,
                 variance.str());

  std::ostringstream summary;
  summary << "config:\n";
  std::istringstream lines(config.canonical());
  for (std::string line; std::getline(lines, line);) {
    summary << "  " << line << '\n';
  }
  summary << "windows:\n";
  for (const auto& s : specs) {
    summary << "  " << s.label << " W=" << s.window << '\n';
  }
  std::ifstream table(config.out / "classify" / "summary.csv",
                      std::ios::binary);
  if (table) {
    summary << "accuracy (%):\n";
    for (std::string line; std::getline(table, line);) {
      if (!line.empty() && line[0] != '#') summary << "  " << line << '\n';
    }
  }
  write_artifact(config.out / "report" / "run_summary.txt", hash,
                 summary.str());
}

}  // namespace

std::string RunConfig::canonical() const {
  std::map<std::string, std::string> kv;
  kv["manifest"] = manifest.generic_string();
  kv["variability_manifest"] = variability_manifest.generic_string();
  kv["stoplist"] = stoplist.generic_string();
  kv["lemmas"] = lemmas.generic_string();
  kv["windows"] = join(windows);
  std::vector<std::string> vw;
  for (auto w : variability_windows) vw.push_back(std::to_string(w));
  kv["variability_windows"] = join(vw);
  kv["pca_windows"] = join(pca_windows);
  kv["audit_window"] = audit_window;
  kv["f_min"] = std::to_string(f_min);
  kv["knn_k"] = std::to_string(knn_k);
  kv["bayes_variance_floor"] = format_double(bayes_variance_floor);
  kv["c45_min_leaf"] = std::to_string(c45_min_leaf);
  kv["svm_c"] = format_double(svm_c);
  kv["folds"] = std::to_string(folds);
  kv["seed"] = seed ? std::to_string(*seed) : "";
  kv["theta"] = format_double(theta);
  kv["gap_convention"] = gap_convention ? "true" : "false";
  kv["count_raw_tokens"] = count_raw_tokens ? "true" : "false";
  kv["group_by_book"] = group_by_book ? "true" : "false";
  kv["strip_boilerplate"] = strip_boilerplate ? "true" : "false";
  kv["audit"] = audit ? "true" : "false";
  kv["truncate_books"] = truncate_books ? "true" : "false";
  std::string out;
  for (const auto& [k, v] : kv) out += k + "=" + v + "\n";
  return out;
}

std::string RunConfig::hash() const {
  Fnv1a h;
  h.update(canonical());
  return h.hex();
}

void set_config_value(RunConfig& c, std::string_view key,
                      std::string_view raw, const fs::path& base) {
  const std::string value = trim(raw);
  if (key == "manifest") {
    c.manifest = resolve(base, value);
  } else if (key == "variability_manifest") {
    c.variability_manifest = resolve(base, value);
  } else if (key == "stoplist") {
    c.stoplist = resolve(base, value);
  } else if (key == "lemmas") {
    c.lemmas = resolve(base, value);
  } else if (key == "out") {
    c.out = resolve(base, value);
  } else if (key == "dump") {
    c.dump = resolve(base, value);
  } else if (key == "windows") {
    c.windows = split_list(value);
    resolve_windows(c.windows, SIZE_MAX);  // validates labels
  } else if (key == "variability_windows") {
    c.variability_windows.clear();
    for (const auto& w : split_list(value)) {
      c.variability_windows.push_back(parse_number<std::size_t>(key, w));
    }
  } else if (key == "pca_windows") {
    c.pca_windows = split_list(value);
  } else if (key == "audit_window") {
    c.audit_window = value;
  } else if (key == "f_min") {
    c.f_min = parse_number<std::size_t>(key, value);
  } else if (key == "knn_k") {
    c.knn_k = parse_number<std::size_t>(key, value);
    if (c.knn_k == 0 || c.knn_k % 2 == 0) {
      throw Error("config: knn_k must be a positive odd integer");
    }
  } else if (key == "bayes_variance_floor") {
    c.bayes_variance_floor = parse_real(key, value);
    if (!(c.bayes_variance_floor > 0.0)) {
      throw Error("config: bayes_variance_floor must be positive");
    }
  } else if (key == "c45_min_leaf") {
    c.c45_min_leaf = parse_number<std::size_t>(key, value);
    if (c.c45_min_leaf == 0) throw Error("config: c45_min_leaf must be positive");
  } else if (key == "svm_c") {
    c.svm_c = parse_real(key, value);
    if (!(c.svm_c > 0.0)) throw Error("config: svm_c must be positive");
  } else if (key == "folds") {
    c.folds = parse_number<std::size_t>(key, value);
    if (c.folds < 2) throw Error("config: folds must be at least 2");
  } else if (key == "seed") {
    c.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "theta") {
    c.theta = parse_real(key, value);
    if (!(c.theta > 0.0 && c.theta <= 1.0)) {
      throw Error("config: theta must lie in (0, 1]");
    }
  } else if (key == "gap_convention") {
    c.gap_convention = parse_bool(key, value);
  } else if (key == "count_raw_tokens") {
    c.count_raw_tokens = parse_bool(key, value);
  } else if (key == "group_by_book") {
    c.group_by_book = parse_bool(key, value);
  } else if (key == "strip_boilerplate") {
    c.strip_boilerplate = parse_bool(key, value);
  } else if (key == "truncate_books") {
    c.truncate_books = parse_bool(key, value);
  } else if (key == "audit") {
    c.audit = parse_bool(key, value);
  } else if (key == "threads") {
    c.threads = parse_number<unsigned>(key, value);
    if (c.threads == 0) throw Error("config: threads must be positive");
  } else {
    throw Error("config: unknown key '" + std::string(key) + "'");
  }
}

RunConfig parse_config(std::istream& in, const fs::path& base_dir) {
  RunConfig c;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw Error("config line " + std::to_string(number) + ": expected key = value");
    }
    try {
      set_config_value(c, trim(std::string_view(t).substr(0, eq)),
                       std::string_view(t).substr(eq + 1), base_dir);
    } catch (const Error& e) {
      throw Error("config line " + std::to_string(number) + ": " + e.what());
    }
  }
  return c;
}

RunConfig load_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open config " + path.string());
  return parse_config(in, path.parent_path());
}

Command parse_command(std::string_view name) {
  for (auto c : {Command::kIngest, Command::kMeasure, Command::kVariability,
                 Command::kClassify, Command::kReport}) {
    if (command_name(c) == name) return c;
  }
  throw Error("unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command command) {
  switch (command) {
    case Command::kIngest: return "ingest";
    case Command::kMeasure: return "measure";
    case Command::kVariability: return "variability";
    case Command::kClassify: return "classify";
    case Command::kReport: return "report";
  }
  return "unknown";
}

std::vector<WindowSpec> resolve_windows(const std::vector<std::string>& labels,
                                        std::size_t shortest_book) {
  std::vector<WindowSpec> out;
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) continue;
    std::size_t parts = 0;
    if (label == "full") parts = 1;
    else if (label == "third") parts = 3;
    else if (label == "quarter") parts = 4;
    WindowSpec spec{label, 0, parts};
    if (parts > 0) {
      spec.window = shortest_book / parts;
    } else {
      spec.window = parse_number<std::size_t>("windows", label);
    }
    if (spec.window == 0) {
      throw Error("window '" + label + "' resolves to zero tokens");
    }
    out.push_back(spec);
  }
  return out;
}

void run_pipeline(const RunConfig& config, Command command, Diagnostics* diag) {
  switch (command) {
    case Command::kIngest: return run_ingest(config, diag);
    case Command::kMeasure: return run_measure(config, diag);
    case Command::kVariability: return run_variability(config, diag);
    case Command::kClassify: return run_classify(config, diag);
    case Command::kReport: return run_report(config, diag);
  }
}

}  // namespace textnet
