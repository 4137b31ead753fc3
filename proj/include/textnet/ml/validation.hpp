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

#ifndef TEXTNET_ML_VALIDATION_HPP_
#define TEXTNET_ML_VALIDATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "textnet/common.hpp"
#include "textnet/ml/classifiers.hpp"
#include "textnet/ml/dataset.hpp"

namespace textnet::ml {

struct CvOptions {
  std::size_t folds = 10;
  std::uint64_t seed = 0;
  bool group_by_book = false;
  unsigned threads = 1;  // folds run concurrently
};

// Fold index of every example. Stratified by class; with `group_by_book`
// whole books are dealt to folds instead. Falls back to a plain shuffled
// split, with a warning, when some class has fewer members than folds.
std::vector<std::size_t> assign_folds(const Dataset& data,
                                      const CvOptions& options,
                                      Diagnostics* diag = nullptr);

struct CvReport {
  std::string classifier;
  std::size_t folds = 0;
  std::vector<double> fold_accuracy;
  std::vector<std::size_t> fold_size;
  // confusion[true][predicted]
  std::vector<std::vector<std::size_t>> confusion;
  std::vector<int> predictions;  // per example, in dataset order
  std::size_t correct = 0;
  std::size_t total = 0;
  double accuracy = 0.0;
  double p_value = 1.0;
};

CvReport cross_validate(const Dataset& data, const ClassifierConfig& config,
                        const CvOptions& options, Diagnostics* diag = nullptr);

// P(X >= correct) for X ~ Binomial(total, 1/classes), summed in log space.
double pvalue_binomial(std::size_t correct, std::size_t total,
                       std::size_t classes);

struct AccuracyPoint {
  std::size_t window = 0;
  double accuracy = 0.0;
};

// Smallest window whose accuracy reaches theta * afb; nullopt if none.
std::optional<std::size_t> threshold_window(std::span<const AccuracyPoint> ladder,
                                            double afb, double theta = 0.85);

}  // namespace textnet::ml

#endif  // TEXTNET_ML_VALIDATION_HPP_
