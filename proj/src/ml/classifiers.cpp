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

#include "textnet/ml/classifiers.hpp"

namespace textnet::ml {

std::string_view classifier_name(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::kKnn: return "knn";
    case ClassifierKind::kBayes: return "bayes";
    case ClassifierKind::kC45: return "c45";
    case ClassifierKind::kSvm: return "svm";
  }
  return "unknown";
}

ClassifierKind parse_classifier(std::string_view name) {
  for (auto kind : kAllClassifiers) {
    if (classifier_name(kind) == name) return kind;
  }
  throw Error("unknown classifier '" + std::string(name) + "'");
}

void Standardized::fit(const Dataset& train) {
  scaler_.fit(train);
  inner_->fit(scaler_.transform(train));
}

int Standardized::predict(std::span<const double> x) const {
  std::vector<double> z(x.size());
  scaler_.transform_row(x, z);
  return inner_->predict(z);
}

std::unique_ptr<Classifier> make_classifier(const ClassifierConfig& config) {
  std::unique_ptr<Classifier> inner;
  switch (config.kind) {
    case ClassifierKind::kKnn:
      inner = std::make_unique<KnnClassifier>(config.knn_k);
      break;
    case ClassifierKind::kBayes:
      inner = std::make_unique<GaussianBayes>(config.bayes_variance_floor);
      break;
    case ClassifierKind::kC45:
      inner = std::make_unique<DecisionTree>(config.c45_min_leaf);
      break;
    case ClassifierKind::kSvm:
      inner = std::make_unique<LinearSvm>(
          SvmOptions{config.svm_c, config.svm_tolerance,
                     config.svm_max_iterations},
          config.threads);
      break;
  }
  return std::make_unique<Standardized>(std::move(inner));
}

}  // namespace textnet::ml
