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
#include <tuple>

#include "textnet/ml/classifiers.hpp"

namespace textnet::ml {

int knn_classify(const Dataset& train, std::span<const double> x,
                 std::size_t k) {
  if (train.empty()) throw Error("knn: empty training set");
  if (k == 0 || k > train.size()) {
    throw Error("knn: k=" + std::to_string(k) + " with " +
                std::to_string(train.size()) + " training examples");
  }
  struct Candidate {
    double dist2;
    int label;
    std::size_t index;
  };
  std::vector<Candidate> all;
  all.reserve(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) {
    auto r = train.row(i);
    double d = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) {
      const double diff = r[j] - x[j];
      d += diff * diff;
    }
    all.push_back({d, train.label(i), i});
  }
  auto closer = [](const Candidate& a, const Candidate& b) {
    return std::tie(a.dist2, a.label, a.index) <
           std::tie(b.dist2, b.label, b.index);
  };
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k),
                    all.end(), closer);

  std::vector<std::size_t> votes(train.class_count(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    ++votes[static_cast<std::size_t>(all[i].label)];
  }
  const std::size_t best = *std::max_element(votes.begin(), votes.end());
  for (std::size_t i = 0; i < k; ++i) {
    if (votes[static_cast<std::size_t>(all[i].label)] == best) {
      return all[i].label;
    }
  }
  return all[0].label;
}

KnnClassifier::KnnClassifier(std::size_t k) : k_(k) {
  if (k == 0) throw Error("knn: k must be positive");
}

void KnnClassifier::fit(const Dataset& train) {
  if (train.empty()) throw Error("knn: empty training set");
  train_ = train;
}

int KnnClassifier::predict(std::span<const double> x) const {
  return knn_classify(train_, x, std::min(k_, train_.size()));
}

}  // namespace textnet::ml
