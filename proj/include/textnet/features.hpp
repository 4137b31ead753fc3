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

#ifndef TEXTNET_FEATURES_HPP_
#define TEXTNET_FEATURES_HPP_

#include <array>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textnet/common.hpp"
#include "textnet/corpus.hpp"
#include "textnet/measures.hpp"
#include "textnet/sampling.hpp"

namespace textnet {

inline constexpr std::size_t kFeatureCount = 11;

// Column names, in feature-vector order.
inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "alpha2", "alpha3", "kn",     "B",     "C",     "I_mean",
    "I_std",  "I_skew", "l_mean", "l_std", "l_skew"};

enum Feature : std::size_t {
  kAlpha2,
  kAlpha3,
  kNeighborDegree,
  kBetweenness,
  kClustering,
  kIntermittencyMean,
  kIntermittencyStd,
  kIntermittencySkew,
  kPathLengthMean,
  kPathLengthStd,
  kPathLengthSkew,
};

struct FeatureVector {
  std::array<double, kFeatureCount> values{};
  std::string book_id;
  std::string author;
  std::size_t window = 0;
  std::size_t index = 0;
  // set when the distribution was constant and its skewness forced to 0
  bool flat_intermittency = false;
  bool flat_path_length = false;
};

// Population moments. Skewness is m3 / m2^(3/2); a constant sample has
// std 0 and skewness 0 with `flat` set.
struct Moments {
  double mean = 0.0;
  double std = 0.0;
  double skew = 0.0;
  bool flat = false;
};
Moments population_moments(std::span<const double> values);

// Means over all nodes for alpha, kn, B, C; mean/std/skew over the
// defined path lengths and over the word intermittencies. Throws Error
// when the network has fewer than two nodes or no word is given.
FeatureVector feature_vector(const NodeMeasurements& nodes,
                             std::span<const WordIntermittency> words);

// sqrt(<X^2>/<X>^2 - 1), i.e. population std over |mean|. nullopt when the
// mean is zero; throws Error with fewer than two values.
std::optional<double> coefficient_of_variation(std::span<const double> values);

struct MeasureOptions {
  std::size_t f_min = 2;
  RecurrenceConvention convention = RecurrenceConvention::kDifference;
};

// Network + intermittency + aggregation for one subtext. nullopt (with a
// warning) when the subtext is degenerate or yields a non-finite value.
std::optional<FeatureVector> measure_subtext(const Subtext& subtext,
                                             const MeasureOptions& options,
                                             Diagnostics* diag = nullptr);

// Feature vectors of many subtexts; output order matches input order
// regardless of the thread count. Rejected subtexts are dropped.
std::vector<FeatureVector> measure_subtexts(std::span<const Subtext> subtexts,
                                            std::span<const std::string> authors,
                                            const MeasureOptions& options,
                                            unsigned threads,
                                            Diagnostics* diag = nullptr);

// CSV `book_id,author,W,index,<11 feature columns>`.
void write_features_csv(std::ostream& out, std::span<const FeatureVector> rows);
std::vector<FeatureVector> read_features_csv(std::istream& in);

struct VariabilityCell {
  std::string book_id;
  std::size_t window = 0;
  std::size_t feature = 0;
  std::optional<double> nu;  // nullopt when the mean is zero
  std::size_t subtexts = 0;
};

// Cross-book distribution of nu for one (W, feature).
struct VariabilitySummary {
  std::size_t window = 0;
  std::size_t feature = 0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  std::size_t books = 0;
};

struct VariabilityReport {
  std::vector<VariabilityCell> cells;
  std::vector<VariabilitySummary> summary;

  // nullopt when no book contributed at this (W, feature)
  std::optional<VariabilitySummary> find(std::size_t window,
                                         std::size_t feature) const;
};

// Linear-interpolation quantile (R type 7) of a non-empty sample.
double quantile(std::vector<double> values, double q);

// Groups rows by (book, W). Books with fewer than two subtexts at a
// window are skipped with a warning.
VariabilityReport variability_from_features(std::span<const FeatureVector> rows,
                                            Diagnostics* diag = nullptr);

VariabilityReport variability_sweep(std::span<const TokenStream> books,
                                    std::span<const std::size_t> windows,
                                    const MeasureOptions& options,
                                    unsigned threads,
                                    Diagnostics* diag = nullptr);

// CSV `book_id,W,measurement,nu,n_subtexts`.
void write_variability_csv(std::ostream& out, const VariabilityReport& report);
// CSV `W,median_nu,q1,q3` for one feature.
void write_plot_data(std::ostream& out, const VariabilityReport& report,
                     std::size_t feature);

}  // namespace textnet

#endif  // TEXTNET_FEATURES_HPP_
