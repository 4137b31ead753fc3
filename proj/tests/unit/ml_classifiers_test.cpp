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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "textnet/ml/classifiers.hpp"

namespace textnet::ml {
namespace {

Dataset blobs(std::size_t per_class, std::size_t classes, std::size_t dims,
              double spread, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, spread);
  std::vector<std::string> names;
  for (std::size_t c = 0; c < classes; ++c) names.push_back("c" + std::to_string(c));
  Dataset data(dims, names);
  for (std::size_t i = 0; i < per_class * classes; ++i) {
    const std::size_t c = i % classes;
    std::vector<double> row(dims);
    for (std::size_t k = 0; k < dims; ++k) {
      row[k] = noise(rng) + (k % classes == c ? 10.0 : 0.0);
    }
    data.add(row, static_cast<int>(c));
  }
  return data;
}

double training_accuracy(const Classifier& clf, const Dataset& data) {
  std::size_t ok = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    ok += clf.predict(data.row(i)) == data.label(i);
  }
  return static_cast<double>(ok) / static_cast<double>(data.size());
}

TEST(ClassifierNames, RoundTrip) {
  for (auto kind : kAllClassifiers) {
    EXPECT_EQ(parse_classifier(classifier_name(kind)), kind);
  }
  EXPECT_THROW(parse_classifier("forest"), Error);
}

// Full sort by (distance, label, index), then a vote whose ties go to the
// class met first in that order.
int knn_oracle(const Dataset& train, const std::vector<double>& x, std::size_t k) {
  std::vector<std::tuple<double, int, std::size_t>> all;
  for (std::size_t i = 0; i < train.size(); ++i) {
    double d = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) d += std::pow(train.row(i)[j] - x[j], 2);
    all.emplace_back(d, train.label(i), i);
  }
  std::sort(all.begin(), all.end());
  std::map<int, std::size_t> votes;
  for (std::size_t i = 0; i < k; ++i) ++votes[std::get<1>(all[i])];
  std::size_t best = 0;
  for (auto& [label, v] : votes) best = std::max(best, v);
  for (std::size_t i = 0; i < k; ++i) {
    if (votes[std::get<1>(all[i])] == best) return std::get<1>(all[i]);
  }
  return -1;
}

TEST(Knn, MatchesFullSortOracleWithTies) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coord(0, 4);
  Dataset train(2, {"a", "b", "c"});
  for (int i = 0; i < 40; ++i) {
    train.add(std::vector<double>{double(coord(rng)), double(coord(rng))}, i % 3);
  }
  for (std::size_t k : {1u, 2u, 3u, 5u, 8u}) {
    for (int q = 0; q < 50; ++q) {
      const std::vector<double> x = {double(coord(rng)), double(coord(rng))};
      EXPECT_EQ(knn_classify(train, x, k), knn_oracle(train, x, k)) << "k=" << k;
    }
  }
}

TEST(Knn, RejectsBadK) {
  Dataset train(1, {"a", "b"});
  train.add(std::vector<double>{0}, 0);
  EXPECT_THROW(knn_classify(train, std::vector<double>{0}, 2), Error);
  EXPECT_THROW(KnnClassifier(0), Error);
}

TEST(Bayes, HandComputedPosteriors) {
  Dataset train(2, {"a", "b", "c"});
  for (auto [x, y, c] : std::vector<std::tuple<double, double, int>>{
           {0, 0, 0}, {2, 0, 0}, {1, 3, 0}, {5, 5, 1}, {7, 5, 1},
           {0, 6, 2}, {0, 8, 2}, {2, 7, 2}, {2, 7, 2}}) {
    train.add(std::vector<double>{x, y}, c);
  }
  GaussianBayes nb(1e-9);
  nb.fit(train);
  EXPECT_EQ(nb.means(), (std::vector<double>{1, 1, 6, 5, 1, 7}));
  EXPECT_NEAR(nb.variances()[1], 2.0, 1e-15);
  EXPECT_EQ(nb.variances()[3], 1e-9);
  const auto lp = nb.log_posteriors(std::vector<double>{1, 4});
  EXPECT_NEAR(lp[0], -5.330330391303345, 1e-12);
  EXPECT_NEAR(lp[1], -500000005.4803214, 1e-6);
  EXPECT_NEAR(lp[2], -11.3022336923457, 1e-12);
  EXPECT_EQ(nb.predict(std::vector<double>{1, 4}), 0);
  EXPECT_EQ(nb.predict(std::vector<double>{1, 7}), 2);
}

TEST(Bayes, NeedsTwoExamplesPerClass) {
  Dataset train(1, {"a", "b"});
  train.add(std::vector<double>{0}, 0);
  train.add(std::vector<double>{1}, 0);
  train.add(std::vector<double>{2}, 1);
  GaussianBayes nb;
  EXPECT_THROW(nb.fit(train), Error);
}

Dataset gain_fixture() {
  Dataset data(2, {"no", "yes"});
  const int y[] = {0, 0, 1, 0, 1, 1, 1, 0};
  const double cat[] = {0, 0, 1, 1, 2, 2, 2, 0};
  for (int i = 0; i < 8; ++i) data.add(std::vector<double>{i + 1.0, cat[i]}, y[i]);
  return data;
}

TEST(InfoGain, EightExampleFixture) {
  const auto data = gain_fixture();
  EXPECT_NEAR(info_gain(data, 0, 2.5), 0.31127812445913283, 1e-15);
  EXPECT_NEAR(info_gain(data, 0, 4.5), 0.1887218755408671, 1e-15);
  EXPECT_NEAR(info_gain(data, 0, 3.5), 0.04879494069539858, 1e-15);
  EXPECT_NEAR(info_gain_categorical(data, 1), 0.75, 1e-15);
  EXPECT_EQ(info_gain(data, 0, 100.0), 0.0);
  EXPECT_DOUBLE_EQ(entropy_bits(std::vector<std::size_t>{4, 4}), 1.0);
  EXPECT_EQ(entropy_bits(std::vector<std::size_t>{0, 7}), 0.0);
}

TEST(DecisionTree, RootSplitIsExhaustiveOptimum) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto data = blobs(12, 3, 4, 6.0, seed);
    DecisionTree tree(2);
    tree.fit(data);
    const auto& root = tree.nodes().front();
    ASSERT_FALSE(root.leaf);
    double best = 0.0;
    for (std::size_t a = 0; a < data.dims(); ++a) {
      std::vector<double> v;
      for (std::size_t i = 0; i < data.size(); ++i) v.push_back(data.row(i)[a]);
      std::sort(v.begin(), v.end());
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] < v[i + 1]) best = std::max(best, info_gain(data, a, (v[i] + v[i + 1]) / 2));
      }
    }
    EXPECT_NEAR(root.gain, best, 1e-12);
    EXPECT_NEAR(info_gain(data, root.attribute, root.threshold), best, 1e-12);
  }
}

TEST(DecisionTree, SmallerLeavesNeverLoseTrainingAccuracy) {
  const auto data = blobs(20, 4, 5, 8.0, 4);
  double previous = 0.0;
  for (std::size_t leaf : {20u, 10u, 5u, 2u, 1u}) {
    DecisionTree tree(leaf);
    tree.fit(data);
    const double acc = training_accuracy(tree, data);
    EXPECT_GE(acc, previous) << "min_leaf=" << leaf;
    previous = acc;
  }
  EXPECT_EQ(previous, 1.0);
}

TEST(DecisionTree, PureDataIsOneLeaf) {
  Dataset data(1, {"a", "b"});
  for (int i = 0; i < 5; ++i) data.add(std::vector<double>{double(i)}, 1);
  DecisionTree tree(1);
  tree.fit(data);
  EXPECT_EQ(tree.nodes().size(), 1u);
  EXPECT_EQ(tree.depth(), 0u);
  EXPECT_EQ(tree.predict(std::vector<double>{-3}), 1);
}

std::vector<std::span<const double>> rows_of(const std::vector<std::vector<double>>& x) {
  return {x.begin(), x.end()};
}

TEST(Svm, TwoPointsHaveTheMaximumMargin) {
  const std::vector<std::vector<double>> x = {{1, 0}, {-1, 0}};
  const std::vector<int> y = {1, -1};
  const auto m = train_binary_svm(rows_of(x), y, {10.0, 1e-6, 1000});
  EXPECT_NEAR(m.w[0], 1.0, 1e-9);
  EXPECT_NEAR(m.w[1], 0.0, 1e-9);
  EXPECT_NEAR(m.b, 0.0, 1e-9);
  EXPECT_NEAR(m.alpha[0], 0.5, 1e-9);
  EXPECT_NEAR(m.alpha[1], 0.5, 1e-9);
}

// Three points with y = (+1, -1, -1): the equality constraint leaves
// alpha2 and alpha3 free, alpha1 = alpha2 + alpha3 <= C.
TEST(Svm, DualOptimumMatchesGridSearch) {
  const std::vector<std::vector<double>> x = {{1, 1}, {-1, 0}, {0, -1.5}};
  const std::vector<int> y = {1, -1, -1};
  const auto rows = rows_of(x);
  for (double c : {0.1, 0.5, 1.0}) {
    const auto m = train_binary_svm(rows, y, {c, 1e-3, 100000});
    const double steps = 1000.0;
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 1000; ++i) {
      for (int j = 0; i + j <= 1000; ++j) {
        const double a2 = c * i / steps, a3 = c * j / steps;
        const std::vector<double> alpha = {a2 + a3, a2, a3};
        best = std::max(best, svm_dual_objective(rows, y, alpha));
      }
    }
    EXPECT_NEAR(svm_dual_objective(rows, y, m.alpha), best, 1e-3) << "C=" << c;
    EXPECT_NEAR(m.objective.back(), svm_dual_objective(rows, y, m.alpha), 1e-9);
  }
}

TEST(Svm, ObjectiveNonDecreasingAndAlphaInBox) {
  const auto data = blobs(30, 2, 3, 4.0, 9);
  std::vector<std::span<const double>> rows;
  std::vector<int> y;
  for (std::size_t i = 0; i < data.size(); ++i) {
    rows.push_back(data.row(i));
    y.push_back(data.label(i) == 0 ? 1 : -1);
  }
  const double c = 0.05;
  const auto m = train_binary_svm(rows, y, {c, 1e-3, 1000000});
  ASSERT_GE(m.objective.size(), 1u);
  for (std::size_t i = 1; i < m.objective.size(); ++i) {
    EXPECT_GE(m.objective[i], m.objective[i - 1] - 1e-12);
  }
  double balance = 0.0;
  for (std::size_t i = 0; i < m.alpha.size(); ++i) {
    EXPECT_GE(m.alpha[i], 0.0);
    EXPECT_LE(m.alpha[i], c);
    balance += m.alpha[i] * y[i];
  }
  EXPECT_NEAR(balance, 0.0, 1e-9);
}

TEST(Svm, SeparableBlobsAreLearnedOneVsOne) {
  const auto data = blobs(15, 4, 4, 1.0, 5);
  LinearSvm svm({1.0, 1e-3, 1000000}, 2);
  svm.fit(data);
  EXPECT_EQ(svm.machines().size(), 6u);
  EXPECT_EQ(training_accuracy(svm, data), 1.0);
}

TEST(Standardized, PowerOfTwoRescalingChangesNothing) {
  const auto data = blobs(12, 3, 4, 5.0, 6);
  Dataset scaled(data.dims(), data.class_names());
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::vector<double> r(data.row(i).begin(), data.row(i).end());
    r[0] *= 1024.0;
    r[2] *= 0.125;
    scaled.add(r, data.label(i));
  }
  for (auto kind : kAllClassifiers) {
    ClassifierConfig config;
    config.kind = kind;
    auto a = make_classifier(config);
    auto b = make_classifier(config);
    a->fit(data);
    b->fit(scaled);
    for (std::size_t i = 0; i < data.size(); ++i) {
      EXPECT_EQ(a->predict(data.row(i)), b->predict(scaled.row(i)))
          << classifier_name(kind);
    }
  }
}

}  // namespace
}  // namespace textnet::ml
