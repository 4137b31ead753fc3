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
#include <map>

#include "textnet/ml/classifiers.hpp"

namespace textnet::ml {
namespace {

constexpr double kGainEpsilon = 1e-12;

int majority(std::span<const std::size_t> counts) {
  return static_cast<int>(std::max_element(counts.begin(), counts.end()) -
                          counts.begin());
}

double split_point(double lo, double hi) {
  const double mid = lo + (hi - lo) / 2.0;
  return mid < hi ? mid : lo;
}

}  // namespace

double entropy_bits(std::span<const std::size_t> counts) {
  std::size_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) return 0.0;
  double h = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

double info_gain(const Dataset& data, std::size_t attribute, double threshold) {
  if (data.empty()) throw Error("info_gain: empty dataset");
  if (attribute >= data.dims()) throw Error("info_gain: attribute out of range");
  const std::size_t k = data.class_count();
  std::vector<std::size_t> all(k, 0), left(k, 0), right(k, 0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto c = static_cast<std::size_t>(data.label(i));
    ++all[c];
    ++(data.row(i)[attribute] <= threshold ? left : right)[c];
  }
  const double n = static_cast<double>(data.size());
  double nl = 0.0;
  for (auto c : left) nl += static_cast<double>(c);
  const double nr = n - nl;
  return entropy_bits(all) - nl / n * entropy_bits(left) -
         nr / n * entropy_bits(right);
}

double info_gain_categorical(const Dataset& data, std::size_t attribute) {
  if (data.empty()) throw Error("info_gain: empty dataset");
  if (attribute >= data.dims()) throw Error("info_gain: attribute out of range");
  const std::size_t k = data.class_count();
  std::vector<std::size_t> all(k, 0);
  std::map<double, std::vector<std::size_t>> parts;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto c = static_cast<std::size_t>(data.label(i));
    ++all[c];
    auto [it, inserted] = parts.try_emplace(data.row(i)[attribute], k, 0);
    ++it->second[c];
  }
  const double n = static_cast<double>(data.size());
  double gain = entropy_bits(all);
  for (const auto& [value, counts] : parts) {
    double m = 0.0;
    for (auto c : counts) m += static_cast<double>(c);
    gain -= m / n * entropy_bits(counts);
  }
  return gain;
}

DecisionTree::DecisionTree(std::size_t min_leaf) : min_leaf_(min_leaf) {
  if (min_leaf == 0) throw Error("c45: min_leaf must be positive");
}

void DecisionTree::fit(const Dataset& train) {
  if (train.size() < min_leaf_) {
    throw Error("c45: " + std::to_string(train.size()) +
                " examples with min_leaf=" + std::to_string(min_leaf_));
  }
  nodes_.clear();
  std::vector<std::size_t> idx(train.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  build(train, idx);
}

int DecisionTree::build(const Dataset& data, std::vector<std::size_t>& idx) {
  const std::size_t k = data.class_count();
  std::vector<std::size_t> counts(k, 0);
  for (auto i : idx) ++counts[static_cast<std::size_t>(data.label(i))];

  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back({});
  nodes_[id].label = majority(counts);
  nodes_[id].samples = idx.size();

  const bool pure =
      std::count(counts.begin(), counts.end(), std::size_t{0}) ==
      static_cast<std::ptrdiff_t>(k - 1);
  if (pure || idx.size() < 2 * min_leaf_) return id;

  const double n = static_cast<double>(idx.size());
  const double parent = entropy_bits(counts);
  double best_gain = 0.0;
  std::size_t best_attr = 0;
  double best_threshold = 0.0;
  bool found = false;

  std::vector<std::size_t> order = idx;
  std::vector<std::size_t> left(k), right(k);
  for (std::size_t a = 0; a < data.dims(); ++a) {
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return data.row(x)[a] < data.row(y)[a];
    });
    std::fill(left.begin(), left.end(), 0);
    right = counts;
    for (std::size_t p = 0; p + 1 < order.size(); ++p) {
      const auto c = static_cast<std::size_t>(data.label(order[p]));
      ++left[c];
      --right[c];
      const double lo = data.row(order[p])[a];
      const double hi = data.row(order[p + 1])[a];
      if (!(lo < hi)) continue;
      const double nl = static_cast<double>(p + 1);
      const double gain = parent - nl / n * entropy_bits(left) -
                          (n - nl) / n * entropy_bits(right);
      if (gain > best_gain + kGainEpsilon) {
        best_gain = gain;
        best_attr = a;
        best_threshold = split_point(lo, hi);
        found = true;
      }
    }
  }
  if (!found) return id;

  std::vector<std::size_t> lo_idx, hi_idx;
  for (auto i : idx) {
    (data.row(i)[best_attr] <= best_threshold ? lo_idx : hi_idx).push_back(i);
  }
  if (lo_idx.empty() || hi_idx.empty()) return id;
  idx.clear();
  idx.shrink_to_fit();

  nodes_[id].leaf = false;
  nodes_[id].attribute = best_attr;
  nodes_[id].threshold = best_threshold;
  nodes_[id].gain = best_gain;
  const int l = build(data, lo_idx);
  const int r = build(data, hi_idx);
  nodes_[id].left = l;
  nodes_[id].right = r;
  return id;
}

int DecisionTree::predict(std::span<const double> x) const {
  if (nodes_.empty()) throw Error("c45: model not fitted");
  int at = 0;
  while (!nodes_[at].leaf) {
    const auto& node = nodes_[at];
    at = x[node.attribute] <= node.threshold ? node.left : node.right;
  }
  return nodes_[at].label;
}

std::size_t DecisionTree::depth() const {
  if (nodes_.empty()) return 0;
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
  std::size_t deepest = 0;
  while (!stack.empty()) {
    auto [at, d] = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, d);
    if (!nodes_[at].leaf) {
      stack.push_back({nodes_[at].left, d + 1});
      stack.push_back({nodes_[at].right, d + 1});
    }
  }
  return deepest;
}

}  // namespace textnet::ml
