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

#include "textnet/ml/validation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "textnet/ml/random.hpp"
#include "textnet/parallel.hpp"

namespace textnet::ml {

std::vector<std::size_t> assign_folds(const Dataset& data,
                                      const CvOptions& options,
                                      Diagnostics* diag) {
  std::size_t folds = options.folds;
  if (folds < 2) throw Error("cross-validation: need at least 2 folds");
  if (data.size() < folds) {
    throw Error("cross-validation: " + std::to_string(data.size()) +
                " examples for " + std::to_string(folds) + " folds");
  }

  // Units are examples, or books when grouping.
  std::vector<std::size_t> unit_of(data.size());
  std::vector<int> unit_label;
  if (options.group_by_book) {
    std::map<std::string, std::size_t> ids;
    for (std::size_t i = 0; i < data.size(); ++i) ids.emplace(data.group(i), 0);
    std::size_t next = 0;
    for (auto& [name, id] : ids) id = next++;
    std::vector<std::vector<std::size_t>> votes(
        ids.size(), std::vector<std::size_t>(data.class_count(), 0));
    for (std::size_t i = 0; i < data.size(); ++i) {
      unit_of[i] = ids.at(data.group(i));
      ++votes[unit_of[i]][static_cast<std::size_t>(data.label(i))];
    }
    for (const auto& v : votes) {
      unit_label.push_back(
          static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin()));
    }
    if (ids.size() < folds) {
      warn(diag, "cross-validation: only " + std::to_string(ids.size()) +
                     " books, using " + std::to_string(ids.size()) + " folds");
      folds = ids.size();
    }
  } else {
    for (std::size_t i = 0; i < data.size(); ++i) unit_of[i] = i;
    unit_label = data.labels();
  }

  const std::size_t units = unit_label.size();
  std::vector<std::vector<std::size_t>> by_class(data.class_count());
  for (std::size_t u = 0; u < units; ++u) {
    by_class[static_cast<std::size_t>(unit_label[u])].push_back(u);
  }
  bool stratify = true;
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    if (!by_class[c].empty() && by_class[c].size() < folds) {
      warn(diag, "cross-validation: class '" + data.class_names()[c] +
                     "' has " + std::to_string(by_class[c].size()) +
                     (options.group_by_book ? " books" : " examples") +
                     " for " + std::to_string(folds) +
                     " folds; folds are not stratified");
      stratify = false;
    }
  }

  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> unit_fold(units);
  if (stratify) {
    std::size_t dealt = 0;
    for (auto& members : by_class) {
      shuffle(std::span<std::size_t>(members), rng);
      for (std::size_t u : members) unit_fold[u] = dealt++ % folds;
    }
  } else {
    std::vector<std::size_t> order(units);
    for (std::size_t u = 0; u < units; ++u) order[u] = u;
    shuffle(std::span<std::size_t>(order), rng);
    for (std::size_t k = 0; k < units; ++k) unit_fold[order[k]] = k % folds;
  }

  std::vector<std::size_t> fold(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) fold[i] = unit_fold[unit_of[i]];
  return fold;
}

CvReport cross_validate(const Dataset& data, const ClassifierConfig& config,
                        const CvOptions& options, Diagnostics* diag) {
  data.validate();
  const auto fold = assign_folds(data, options, diag);
  const std::size_t folds = *std::max_element(fold.begin(), fold.end()) + 1;

  CvReport report;
  report.classifier = std::string(classifier_name(config.kind));
  report.folds = folds;
  report.predictions.assign(data.size(), -1);

  ClassifierConfig inner = config;
  if (options.threads > 1) inner.threads = 1;
  parallel_for(folds, options.threads, [&](std::size_t f) {
    std::vector<std::size_t> train, test;
    for (std::size_t i = 0; i < data.size(); ++i) {
      (fold[i] == f ? test : train).push_back(i);
    }
    if (test.empty()) return;
    auto model = make_classifier(inner);
    model->fit(data.subset(train));
    for (std::size_t i : test) report.predictions[i] = model->predict(data.row(i));
  });

  const std::size_t k = data.class_count();
  report.confusion.assign(k, std::vector<std::size_t>(k, 0));
  report.fold_accuracy.assign(folds, 0.0);
  report.fold_size.assign(folds, 0);
  std::vector<std::size_t> fold_correct(folds, 0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto truth = static_cast<std::size_t>(data.label(i));
    const auto guess = static_cast<std::size_t>(report.predictions[i]);
    ++report.confusion[truth][guess];
    ++report.fold_size[fold[i]];
    if (truth == guess) {
      ++fold_correct[fold[i]];
      ++report.correct;
    }
  }
  for (std::size_t f = 0; f < folds; ++f) {
    if (report.fold_size[f] > 0) {
      report.fold_accuracy[f] = static_cast<double>(fold_correct[f]) /
                                static_cast<double>(report.fold_size[f]);
    }
  }
  report.total = data.size();
  report.accuracy = static_cast<double>(report.correct) /
                    static_cast<double>(report.total);
  report.p_value = pvalue_binomial(report.correct, report.total, k);
  return report;
}

double pvalue_binomial(std::size_t correct, std::size_t total,
                       std::size_t classes) {
  if (correct > total) throw Error("pvalue: correct exceeds total");
  if (classes < 2) throw Error("pvalue: need at least two classes");
  if (correct == 0) return 1.0;
  const double n = static_cast<double>(total);
  const double log_p = -std::log(static_cast<double>(classes));
  const double log_q = std::log1p(-1.0 / static_cast<double>(classes));
  std::vector<double> terms;
  terms.reserve(total - correct + 1);
  for (std::size_t x = correct; x <= total; ++x) {
    const double k = static_cast<double>(x);
    terms.push_back(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(n - k + 1.0) + k * log_p + (n - k) * log_q);
  }
  const double peak = *std::max_element(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - peak);
  return std::clamp(std::exp(peak + std::log(sum)), 0.0, 1.0);
}

std::optional<std::size_t> threshold_window(std::span<const AccuracyPoint> ladder,
                                            double afb, double theta) {
  std::vector<AccuracyPoint> sorted(ladder.begin(), ladder.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.window < b.window; });
  const double target = theta * afb;
  for (const auto& p : sorted) {
    if (p.accuracy >= target - 1e-12) return p.window;
  }
  return std::nullopt;
}

}  // namespace textnet::ml
