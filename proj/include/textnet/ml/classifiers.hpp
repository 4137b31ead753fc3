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

#ifndef TEXTNET_ML_CLASSIFIERS_HPP_
#define TEXTNET_ML_CLASSIFIERS_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textnet/ml/dataset.hpp"

namespace textnet::ml {

enum class ClassifierKind { kKnn, kBayes, kC45, kSvm };

inline constexpr ClassifierKind kAllClassifiers[] = {
    ClassifierKind::kKnn, ClassifierKind::kBayes, ClassifierKind::kC45,
    ClassifierKind::kSvm};

std::string_view classifier_name(ClassifierKind kind);
ClassifierKind parse_classifier(std::string_view name);

struct ClassifierConfig {
  ClassifierKind kind = ClassifierKind::kKnn;
  std::size_t knn_k = 1;
  double bayes_variance_floor = 1e-9;
  std::size_t c45_min_leaf = 2;
  double svm_c = 1.0;
  double svm_tolerance = 1e-3;
  std::size_t svm_max_iterations = 1'000'000;
  unsigned threads = 1;  // one-vs-one pairs
};

class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual void fit(const Dataset& train) = 0;
  virtual int predict(std::span<const double> x) const = 0;
};

// Builds the classifier, wrapped so it standardizes with training
// statistics before fitting and before every prediction.
std::unique_ptr<Classifier> make_classifier(const ClassifierConfig& config);

class KnnClassifier final : public Classifier {
 public:
  explicit KnnClassifier(std::size_t k = 1);
  void fit(const Dataset& train) override;
  int predict(std::span<const double> x) const override;

 private:
  std::size_t k_;
  Dataset train_;
};

// Majority vote among the k nearest points (Euclidean). Ties go to the
// label of the nearest point among the tied classes; equal distances are
// ordered by class id then by position.
int knn_classify(const Dataset& train, std::span<const double> x,
                 std::size_t k);

class GaussianBayes final : public Classifier {
 public:
  explicit GaussianBayes(double variance_floor = 1e-9);
  void fit(const Dataset& train) override;
  int predict(std::span<const double> x) const override;

  // log P(c) + sum_k log N(x_k; mean_ck, var_ck) for every class.
  std::vector<double> log_posteriors(std::span<const double> x) const;

  const std::vector<double>& means() const { return means_; }
  const std::vector<double>& variances() const { return variances_; }
  const std::vector<double>& log_priors() const { return log_priors_; }

 private:
  double floor_;
  std::size_t dims_ = 0;
  std::vector<double> log_priors_;
  std::vector<double> means_;      // class-major
  std::vector<double> variances_;  // class-major
};

// Gain in bits of the split `attribute <= threshold` versus `>`.
double info_gain(const Dataset& data, std::size_t attribute, double threshold);
// Gain in bits of partitioning on every distinct value of the attribute.
double info_gain_categorical(const Dataset& data, std::size_t attribute);
double entropy_bits(std::span<const std::size_t> counts);

struct TreeNode {
  bool leaf = true;
  int label = 0;
  std::size_t attribute = 0;
  double threshold = 0.0;
  double gain = 0.0;
  int left = -1;   // attribute <= threshold
  int right = -1;
  std::size_t samples = 0;
};

class DecisionTree final : public Classifier {
 public:
  explicit DecisionTree(std::size_t min_leaf = 2);
  void fit(const Dataset& train) override;
  int predict(std::span<const double> x) const override;

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  std::size_t depth() const;

 private:
  int build(const Dataset& data, std::vector<std::size_t>& idx);

  std::size_t min_leaf_;
  std::vector<TreeNode> nodes_;
};

struct BinarySvm {
  int positive = 0;  // y = +1
  int negative = 1;  // y = -1
  std::vector<double> w;
  double b = 0.0;    // decision is w.x + b
  std::vector<double> alpha;
  std::vector<double> objective;  // dual objective after each sweep
  std::size_t iterations = 0;

  double decision(std::span<const double> x) const;
};

struct SvmOptions {
  double c = 1.0;
  double tolerance = 1e-3;
  std::size_t max_iterations = 1'000'000;
};

// Soft-margin linear SVM on examples with y in {+1, -1}, solved in the
// dual by SMO with second-order working-set selection. Throws Error on
// non-convergence.
BinarySvm train_binary_svm(const std::vector<std::span<const double>>& x,
                           std::span<const int> y, const SvmOptions& options);

// Dual objective sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j x_i.x_j.
double svm_dual_objective(const std::vector<std::span<const double>>& x,
                          std::span<const int> y,
                          std::span<const double> alpha);

class LinearSvm final : public Classifier {
 public:
  explicit LinearSvm(SvmOptions options = {}, unsigned threads = 1);
  void fit(const Dataset& train) override;
  int predict(std::span<const double> x) const override;

  const std::vector<BinarySvm>& machines() const { return machines_; }

 private:
  SvmOptions options_;
  unsigned threads_;
  std::size_t classes_ = 0;
  std::vector<BinarySvm> machines_;
};

class Standardized final : public Classifier {
 public:
  explicit Standardized(std::unique_ptr<Classifier> inner)
      : inner_(std::move(inner)) {}
  void fit(const Dataset& train) override;
  int predict(std::span<const double> x) const override;

  const Standardizer& standardizer() const { return scaler_; }

 private:
  std::unique_ptr<Classifier> inner_;
  Standardizer scaler_;
};

}  // namespace textnet::ml

#endif  // TEXTNET_ML_CLASSIFIERS_HPP_
