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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "textnet/ml/classifiers.hpp"

namespace textnet::ml {

GaussianBayes::GaussianBayes(double variance_floor) : floor_(variance_floor) {
  if (!(variance_floor > 0.0)) throw Error("bayes: variance floor must be > 0");
}

void GaussianBayes::fit(const Dataset& train) {
  const std::size_t classes = train.class_count();
  dims_ = train.dims();
  const auto counts = train.class_counts();
  for (std::size_t c = 0; c < classes; ++c) {
    if (counts[c] < 2) {
      throw Error("bayes: class '" + train.class_names()[c] + "' has " +
                  std::to_string(counts[c]) + " training examples, need 2");
    }
  }
  means_.assign(classes * dims_, 0.0);
  variances_.assign(classes * dims_, 0.0);
  log_priors_.assign(classes, 0.0);
  for (std::size_t i = 0; i < train.size(); ++i) {
    const auto c = static_cast<std::size_t>(train.label(i));
    auto r = train.row(i);
    for (std::size_t k = 0; k < dims_; ++k) means_[c * dims_ + k] += r[k];
  }
  for (std::size_t c = 0; c < classes; ++c) {
    for (std::size_t k = 0; k < dims_; ++k) {
      means_[c * dims_ + k] /= static_cast<double>(counts[c]);
    }
  }
  for (std::size_t i = 0; i < train.size(); ++i) {
    const auto c = static_cast<std::size_t>(train.label(i));
    auto r = train.row(i);
    for (std::size_t k = 0; k < dims_; ++k) {
      const double d = r[k] - means_[c * dims_ + k];
      variances_[c * dims_ + k] += d * d;
    }
  }
  const double n = static_cast<double>(train.size());
  for (std::size_t c = 0; c < classes; ++c) {
    log_priors_[c] = std::log(static_cast<double>(counts[c]) / n);
    for (std::size_t k = 0; k < dims_; ++k) {
      double& v = variances_[c * dims_ + k];
      v = std::max(v / static_cast<double>(counts[c]), floor_);
    }
  }
}

std::vector<double> GaussianBayes::log_posteriors(
    std::span<const double> x) const {
  std::vector<double> out(log_priors_);
  for (std::size_t c = 0; c < out.size(); ++c) {
    for (std::size_t k = 0; k < dims_; ++k) {
      const double var = variances_[c * dims_ + k];
      const double d = x[k] - means_[c * dims_ + k];
      out[c] += -0.5 * std::log(2.0 * std::numbers::pi * var) -
                d * d / (2.0 * var);
    }
  }
  return out;
}

int GaussianBayes::predict(std::span<const double> x) const {
  const auto lp = log_posteriors(x);
  return static_cast<int>(std::max_element(lp.begin(), lp.end()) - lp.begin());
}

}  // namespace textnet::ml
