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

#include "textnet/features.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iterator>
#include <map>

#include "textnet/csv.hpp"
#include "textnet/network.hpp"
#include "textnet/parallel.hpp"

namespace textnet {
namespace {

double mean_of(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double parse_double(const std::string& s, int line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("features csv line " + std::to_string(line) +
                ": not a number: '" + s + "'");
  }
  return value;
}

std::size_t parse_size(const std::string& s, int line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("features csv line " + std::to_string(line) +
                ": not an integer: '" + s + "'");
  }
  return value;
}

}  // namespace

Moments population_moments(std::span<const double> values) {
  if (values.empty()) throw Error("population_moments: empty sample");
  Moments m;
  m.mean = mean_of(values);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo == *hi) {
    m.mean = *lo;
    m.flat = true;
    return m;
  }
  double m2 = 0.0;
  double m3 = 0.0;
  for (double v : values) {
    const double d = v - m.mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  const auto n = static_cast<double>(values.size());
  m2 /= n;
  m3 /= n;
  m.std = std::sqrt(m2);
  m.skew = m3 / std::pow(m2, 1.5);
  return m;
}

FeatureVector feature_vector(const NodeMeasurements& nodes,
                             std::span<const WordIntermittency> words) {
  if (nodes.size() < 2) {
    throw Error("feature_vector: network has fewer than two nodes");
  }
  if (words.empty()) {
    throw Error("feature_vector: no word reaches the intermittency threshold");
  }
  std::vector<double> lengths;
  lengths.reserve(nodes.size());
  for (const auto& l : nodes.path_length) {
    if (l) lengths.push_back(*l);
  }
  if (lengths.empty()) throw Error("feature_vector: no node reaches another");
  std::vector<double> burst;
  burst.reserve(words.size());
  for (const auto& w : words) burst.push_back(w.value);

  FeatureVector fv;
  fv.values[kAlpha2] = mean_of(nodes.alpha2);
  fv.values[kAlpha3] = mean_of(nodes.alpha3);
  fv.values[kNeighborDegree] = mean_of(nodes.neighbor_degree);
  fv.values[kBetweenness] = mean_of(nodes.betweenness);
  fv.values[kClustering] = mean_of(nodes.clustering);
  const Moments im = population_moments(burst);
  fv.values[kIntermittencyMean] = im.mean;
  fv.values[kIntermittencyStd] = im.std;
  fv.values[kIntermittencySkew] = im.skew;
  fv.flat_intermittency = im.flat;
  const Moments lm = population_moments(lengths);
  fv.values[kPathLengthMean] = lm.mean;
  fv.values[kPathLengthStd] = lm.std;
  fv.values[kPathLengthSkew] = lm.skew;
  fv.flat_path_length = lm.flat;
  return fv;
}

std::optional<double> coefficient_of_variation(std::span<const double> values) {
  if (values.size() < 2) {
    throw Error("coefficient_of_variation: need at least two values");
  }
  const Moments m = population_moments(values);
  if (m.mean == 0.0) return std::nullopt;
  return m.std / std::abs(m.mean);
}

std::optional<FeatureVector> measure_subtext(const Subtext& subtext,
                                             const MeasureOptions& options,
                                             Diagnostics* diag) {
  const std::string where =
      subtext.book_id + " W=" + std::to_string(subtext.window) + " #" +
      std::to_string(subtext.index);
  if (subtext.tokens.size() < 2) {
    warn(diag, "subtext " + where + " rejected: fewer than two tokens");
    return std::nullopt;
  }
  const AdjacencyNetwork net = build_network(subtext);
  if (net.node_count() < 2) {
    warn(diag, "subtext " + where + " rejected: fewer than two distinct words");
    return std::nullopt;
  }
  const auto words =
      intermittency_all(subtext.tokens, options.f_min, options.convention);
  if (words.empty()) {
    warn(diag, "subtext " + where + " rejected: no word occurs " +
                   std::to_string(options.f_min) + " times");
    return std::nullopt;
  }
  FeatureVector fv = feature_vector(measure_nodes(net), words);
  for (double v : fv.values) {
    if (!std::isfinite(v)) {
      warn(diag, "subtext " + where + " rejected: non-finite feature");
      return std::nullopt;
    }
  }
  fv.book_id = subtext.book_id;
  fv.window = subtext.window;
  fv.index = subtext.index;
  return fv;
}

std::vector<FeatureVector> measure_subtexts(std::span<const Subtext> subtexts,
                                            std::span<const std::string> authors,
                                            const MeasureOptions& options,
                                            unsigned threads,
                                            Diagnostics* diag) {
  if (!authors.empty() && authors.size() != subtexts.size()) {
    throw Error("measure_subtexts: one author per subtext expected");
  }
  std::vector<std::optional<FeatureVector>> slots(subtexts.size());
  std::vector<Diagnostics> notes(subtexts.size());
  parallel_for(subtexts.size(), threads, [&](std::size_t i) {
    slots[i] = measure_subtext(subtexts[i], options, &notes[i]);
    if (slots[i] && !authors.empty()) slots[i]->author = authors[i];
  });
  std::vector<FeatureVector> out;
  out.reserve(subtexts.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (diag != nullptr) diag->merge(notes[i]);
    if (slots[i]) out.push_back(std::move(*slots[i]));
  }
  return out;
}

void write_features_csv(std::ostream& out, std::span<const FeatureVector> rows) {
  std::vector<std::string> header = {"book_id", "author", "W", "index"};
  for (auto name : kFeatureNames) header.emplace_back(name);
  csv::write_row(out, header);
  for (const auto& r : rows) {
    std::vector<std::string> fields = {r.book_id, r.author,
                                       std::to_string(r.window),
                                       std::to_string(r.index)};
    for (double v : r.values) fields.push_back(format_double(v));
    csv::write_row(out, fields);
  }
}

std::vector<FeatureVector> read_features_csv(std::istream& in) {
  const auto records = csv::read(in);
  if (records.empty()) throw Error("features csv: empty file");
  const auto& header = records[0].fields;
  if (header.size() != 4 + kFeatureCount || header[0] != "book_id" ||
      header[1] != "author" || header[2] != "W" || header[3] != "index") {
    throw Error("features csv: unexpected header");
  }
  for (std::size_t k = 0; k < kFeatureCount; ++k) {
    if (header[4 + k] != kFeatureNames[k]) {
      throw Error("features csv: unexpected column '" + header[4 + k] + "'");
    }
  }
  std::vector<FeatureVector> rows;
  rows.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& f = records[r].fields;
    const int line = records[r].line;
    if (f.size() != header.size()) {
      throw Error("features csv line " + std::to_string(line) +
                  ": wrong field count");
    }
    FeatureVector fv;
    fv.book_id = f[0];
    fv.author = f[1];
    fv.window = parse_size(f[2], line);
    fv.index = parse_size(f[3], line);
    for (std::size_t k = 0; k < kFeatureCount; ++k) {
      fv.values[k] = parse_double(f[4 + k], line);
      if (!std::isfinite(fv.values[k])) {
        throw Error("features csv line " + std::to_string(line) +
                    ": non-finite value");
      }
    }
    rows.push_back(std::move(fv));
  }
  return rows;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw Error("quantile: empty sample");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

std::optional<VariabilitySummary> VariabilityReport::find(
    std::size_t window, std::size_t feature) const {
  for (const auto& s : summary) {
    if (s.window == window && s.feature == feature) return s;
  }
  return std::nullopt;
}

VariabilityReport variability_from_features(std::span<const FeatureVector> rows,
                                            Diagnostics* diag) {
  // group keys keep first-seen book order so output follows the manifest
  std::vector<std::string> book_order;
  std::map<std::string, std::size_t> book_rank;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<const FeatureVector*>>
      groups;  // (book rank, W)
  for (const auto& r : rows) {
    auto [it, inserted] = book_rank.emplace(r.book_id, book_order.size());
    if (inserted) book_order.push_back(r.book_id);
    groups[{it->second, r.window}].push_back(&r);
  }

  VariabilityReport report;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<double>> per_cell;
  for (const auto& [key, members] : groups) {
    const auto& book = book_order[key.first];
    if (members.size() < 2) {
      warn(diag, "variability: book " + book + " has " +
                     std::to_string(members.size()) + " subtext(s) at W=" +
                     std::to_string(key.second) + "; skipped");
      continue;
    }
    for (std::size_t k = 0; k < kFeatureCount; ++k) {
      std::vector<double> values;
      values.reserve(members.size());
      for (const auto* m : members) values.push_back(m->values[k]);
      VariabilityCell cell{book, key.second, k,
                           coefficient_of_variation(values), members.size()};
      if (cell.nu) {
        per_cell[{key.second, k}].push_back(*cell.nu);
      } else {
        warn(diag, "variability: zero mean for " + std::string(kFeatureNames[k]) +
                       " in " + book + " at W=" + std::to_string(key.second));
      }
      report.cells.push_back(std::move(cell));
    }
  }
  for (const auto& [key, nus] : per_cell) {
    report.summary.push_back(VariabilitySummary{key.first, key.second,
                                                quantile(nus, 0.5),
                                                quantile(nus, 0.25),
                                                quantile(nus, 0.75), nus.size()});
  }
  return report;
}

VariabilityReport variability_sweep(std::span<const TokenStream> books,
                                    std::span<const std::size_t> windows,
                                    const MeasureOptions& options,
                                    unsigned threads, Diagnostics* diag) {
  std::vector<FeatureVector> rows;
  for (std::size_t w : windows) {
    std::vector<Subtext> subtexts;
    std::vector<std::string> authors;
    for (const auto& book : books) {
      for (auto& s : split_subtexts(book, w, diag)) {
        subtexts.push_back(std::move(s));
        authors.push_back(book.meta.author);
      }
    }
    auto part = measure_subtexts(subtexts, authors, options, threads, diag);
    rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  return variability_from_features(rows, diag);
}

void write_variability_csv(std::ostream& out, const VariabilityReport& report) {
  csv::write_row(out, {"book_id", "W", "measurement", "nu", "n_subtexts"});
  for (const auto& c : report.cells) {
    csv::write_row(out, {c.book_id, std::to_string(c.window),
                         std::string(kFeatureNames[c.feature]),
                         c.nu ? format_double(*c.nu) : "",
                         std::to_string(c.subtexts)});
  }
}

void write_plot_data(std::ostream& out, const VariabilityReport& report,
                     std::size_t feature) {
  csv::write_row(out, {"W", "median_nu", "q1", "q3"});
  for (const auto& s : report.summary) {
    if (s.feature != feature) continue;
    csv::write_row(out, {std::to_string(s.window), format_double(s.median),
                         format_double(s.q1), format_double(s.q3)});
  }
}

}  // namespace textnet
