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

#ifndef TEXTNET_ML_DATASET_HPP_
#define TEXTNET_ML_DATASET_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "textnet/common.hpp"
#include "textnet/features.hpp"

namespace textnet::ml {

// Dense row-major examples with integer class labels in [0, classes).
// `groups` carries the source book of each example for grouped folds.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::size_t dims, std::vector<std::string> class_names)
      : dims_(dims), class_names_(std::move(class_names)) {}

  void add(std::span<const double> row, int label, std::string group = {});

  std::size_t size() const { return labels_.size(); }
  std::size_t dims() const { return dims_; }
  std::size_t class_count() const { return class_names_.size(); }
  bool empty() const { return labels_.empty(); }

  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * dims_, dims_};
  }
  std::span<double> mutable_row(std::size_t i) {
    return {values_.data() + i * dims_, dims_};
  }
  int label(std::size_t i) const { return labels_[i]; }
  const std::string& group(std::size_t i) const { return groups_[i]; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::string>& class_names() const { return class_names_; }

  void set_label(std::size_t i, int label) { labels_[i] = label; }

  std::vector<std::size_t> class_counts() const;
  Dataset subset(std::span<const std::size_t> indices) const;

  // Throws Error unless every value is finite and there are >= 2 classes.
  void validate() const;

 private:
  std::size_t dims_ = 0;
  std::vector<double> values_;
  std::vector<int> labels_;
  std::vector<std::string> groups_;
  std::vector<std::string> class_names_;
};

// Labels are authors, numbered in lexicographic order of their names.
Dataset dataset_from_features(std::span<const FeatureVector> rows);

// Returns a copy whose labels are a seeded permutation of the originals.
Dataset permute_labels(const Dataset& data, std::uint64_t seed);

// z-score transform fitted on one dataset and applied to others.
// Attributes with zero spread pass through untouched and are flagged.
class Standardizer {
 public:
  void fit(const Dataset& train);
  Dataset transform(const Dataset& data) const;
  Dataset inverse_transform(const Dataset& data) const;
  void transform_row(std::span<const double> in, std::span<double> out) const;

  const std::vector<double>& means() const { return means_; }
  const std::vector<double>& scales() const { return scales_; }
  const std::vector<bool>& constant() const { return constant_; }

 private:
  std::vector<double> means_;
  std::vector<double> scales_;
  std::vector<bool> constant_;
};

}  // namespace textnet::ml

#endif  // TEXTNET_ML_DATASET_HPP_
