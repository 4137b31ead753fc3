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

#include "textnet/ml/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "textnet/ml/random.hpp"

namespace textnet::ml {

void Dataset::add(std::span<const double> row, int label, std::string group) {
  if (row.size() != dims_) {
    throw Error("dataset: row has " + std::to_string(row.size()) +
                " attributes, expected " + std::to_string(dims_));
  }
  if (label < 0 || static_cast<std::size_t>(label) >= class_names_.size()) {
    throw Error("dataset: label " + std::to_string(label) + " out of range");
  }
  values_.insert(values_.end(), row.begin(), row.end());
  labels_.push_back(label);
  groups_.push_back(std::move(group));
}

std::vector<std::size_t> Dataset::class_counts() const {
  std::vector<std::size_t> counts(class_names_.size(), 0);
  for (int y : labels_) ++counts[static_cast<std::size_t>(y)];
  return counts;
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  Dataset out(dims_, class_names_);
  out.values_.reserve(indices.size() * dims_);
  for (std::size_t i : indices) out.add(row(i), labels_[i], groups_[i]);
  return out;
}

void Dataset::validate() const {
  if (class_names_.size() < 2) throw Error("dataset: fewer than two classes");
  for (std::size_t i = 0; i < size(); ++i) {
    for (double v : row(i)) {
      if (!std::isfinite(v)) {
        throw Error("dataset: example " + std::to_string(i) +
                    " has a non-finite attribute");
      }
    }
  }
}

Dataset dataset_from_features(std::span<const FeatureVector> rows) {
  std::map<std::string, int> ids;
  for (const auto& r : rows) ids.emplace(r.author, 0);
  std::vector<std::string> names;
  for (auto& [name, id] : ids) {
    id = static_cast<int>(names.size());
    names.push_back(name);
  }
  Dataset data(kFeatureCount, std::move(names));
  for (const auto& r : rows) data.add(r.values, ids.at(r.author), r.book_id);
  return data;
}

Dataset permute_labels(const Dataset& data, std::uint64_t seed) {
  Dataset out = data;
  std::vector<int> labels = data.labels();
  std::mt19937_64 rng(seed);
  shuffle(std::span<int>(labels), rng);
  for (std::size_t i = 0; i < labels.size(); ++i) out.set_label(i, labels[i]);
  return out;
}

void Standardizer::fit(const Dataset& train) {
  if (train.empty()) throw Error("standardize: empty training set");
  const std::size_t d = train.dims();
  const double n = static_cast<double>(train.size());
  means_.assign(d, 0.0);
  scales_.assign(d, 1.0);
  constant_.assign(d, false);
  for (std::size_t i = 0; i < train.size(); ++i) {
    auto r = train.row(i);
    for (std::size_t k = 0; k < d; ++k) means_[k] += r[k];
  }
  for (double& m : means_) m /= n;
  std::vector<double> ss(d, 0.0);
  for (std::size_t i = 0; i < train.size(); ++i) {
    auto r = train.row(i);
    for (std::size_t k = 0; k < d; ++k) {
      const double dev = r[k] - means_[k];
      ss[k] += dev * dev;
    }
  }
  for (std::size_t k = 0; k < d; ++k) {
    const double sd = std::sqrt(ss[k] / n);
    if (sd > 0.0 && std::isfinite(sd)) {
      scales_[k] = sd;
    } else {
      constant_[k] = true;
      means_[k] = 0.0;
    }
  }
}

void Standardizer::transform_row(std::span<const double> in,
                                 std::span<double> out) const {
  for (std::size_t k = 0; k < means_.size(); ++k) {
    out[k] = (in[k] - means_[k]) / scales_[k];
  }
}

Dataset Standardizer::transform(const Dataset& data) const {
  if (data.dims() != means_.size()) throw Error("standardize: dimension mismatch");
  Dataset out = data;
  for (std::size_t i = 0; i < out.size(); ++i) {
    transform_row(data.row(i), out.mutable_row(i));
  }
  return out;
}

Dataset Standardizer::inverse_transform(const Dataset& data) const {
  if (data.dims() != means_.size()) throw Error("standardize: dimension mismatch");
  Dataset out = data;
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto src = data.row(i);
    auto dst = out.mutable_row(i);
    for (std::size_t k = 0; k < means_.size(); ++k) {
      dst[k] = src[k] * scales_[k] + means_[k];
    }
  }
  return out;
}

}  // namespace textnet::ml
