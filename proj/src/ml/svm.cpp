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
#include <limits>

#include "textnet/ml/classifiers.hpp"
#include "textnet/parallel.hpp"

namespace textnet::ml {
namespace {

constexpr double kTau = 1e-12;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Dual objective from the gradient G = Q alpha - 1.
double objective_from_gradient(std::span<const double> alpha,
                               std::span<const double> grad) {
  double f = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    f += alpha[i] * (grad[i] - 1.0);
  }
  return -0.5 * f;
}

}  // namespace

double BinarySvm::decision(std::span<const double> x) const {
  if (w.empty()) return b;
  return dot(w, x) + b;
}

double svm_dual_objective(const std::vector<std::span<const double>>& x,
                          std::span<const int> y,
                          std::span<const double> alpha) {
  double linear = 0.0;
  double quad = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    linear += alpha[i];
    for (std::size_t j = 0; j < x.size(); ++j) {
      quad += alpha[i] * alpha[j] * y[i] * y[j] * dot(x[i], x[j]);
    }
  }
  return linear - 0.5 * quad;
}

BinarySvm train_binary_svm(const std::vector<std::span<const double>>& x,
                           std::span<const int> y, const SvmOptions& options) {
  const std::size_t n = x.size();
  if (n == 0 || y.size() != n) throw Error("svm: empty or mismatched input");
  for (int v : y) {
    if (v != 1 && v != -1) throw Error("svm: labels must be +1 or -1");
  }
  const double c = options.c;
  if (!(c > 0.0)) throw Error("svm: C must be positive");

  std::vector<double> kernel(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      kernel[i * n + j] = kernel[j * n + i] = dot(x[i], x[j]);
    }
  }
  auto k = [&](std::size_t i, std::size_t j) { return kernel[i * n + j]; };

  BinarySvm model;
  std::vector<double>& alpha = model.alpha;
  alpha.assign(n, 0.0);
  std::vector<double> grad(n, -1.0);
  model.objective.push_back(0.0);

  bool converged = false;
  std::size_t iter = 0;
  while (iter < options.max_iterations) {
    // i maximizes -y G over the up set
    double gmax = -std::numeric_limits<double>::infinity();
    std::size_t i = n;
    for (std::size_t t = 0; t < n; ++t) {
      if (y[t] == 1 ? alpha[t] < c : alpha[t] > 0.0) {
        const double v = -y[t] * grad[t];
        if (v >= gmax) {
          gmax = v;
          i = t;
        }
      }
    }
    // j minimizes the second-order objective decrease over the low set
    double gmax2 = -std::numeric_limits<double>::infinity();
    std::size_t j = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      if (!(y[t] == 1 ? alpha[t] > 0.0 : alpha[t] < c)) continue;
      const double v = y[t] * grad[t];
      gmax2 = std::max(gmax2, v);
      if (i == n) continue;
      const double diff = gmax + v;
      if (diff > 0.0) {
        double quad = k(i, i) + k(t, t) - 2.0 * k(i, t);
        if (quad <= 0.0) quad = kTau;
        const double obj = -(diff * diff) / quad;
        if (obj <= best) {
          best = obj;
          j = t;
        }
      }
    }
    if (i == n || j == n || gmax + gmax2 < options.tolerance) {
      converged = true;
      break;
    }

    const double old_i = alpha[i];
    const double old_j = alpha[j];
    double ai = old_i;
    double aj = old_j;
    double quad = k(i, i) + k(j, j) - 2.0 * k(i, j);
    if (quad <= 0.0) quad = kTau;
    if (y[i] != y[j]) {
      const double delta = (-grad[i] - grad[j]) / quad;
      const double diff = ai - aj;
      ai += delta;
      aj += delta;
      if (diff > 0.0) {
        if (aj < 0.0) { aj = 0.0; ai = diff; }
      } else {
        if (ai < 0.0) { ai = 0.0; aj = -diff; }
      }
      if (diff > 0.0) {
        if (ai > c) { ai = c; aj = c - diff; }
      } else {
        if (aj > c) { aj = c; ai = c + diff; }
      }
    } else {
      const double delta = (grad[i] - grad[j]) / quad;
      const double sum = ai + aj;
      ai -= delta;
      aj += delta;
      if (sum > c) {
        if (ai > c) { ai = c; aj = sum - c; }
      } else {
        if (aj < 0.0) { aj = 0.0; ai = sum; }
      }
      if (sum > c) {
        if (aj > c) { aj = c; ai = sum - c; }
      } else {
        if (ai < 0.0) { ai = 0.0; aj = sum; }
      }
    }
    alpha[i] = ai;
    alpha[j] = aj;
    const double di = ai - old_i;
    const double dj = aj - old_j;
    for (std::size_t t = 0; t < n; ++t) {
      grad[t] += y[t] * (y[i] * k(i, t) * di + y[j] * k(j, t) * dj);
    }
    ++iter;
    if (iter % n == 0) {
      model.objective.push_back(objective_from_gradient(alpha, grad));
    }
  }
  if (!converged) {
    throw Error("svm: no convergence after " + std::to_string(iter) +
                " iterations");
  }
  model.iterations = iter;
  model.objective.push_back(objective_from_gradient(alpha, grad));

  double ub = std::numeric_limits<double>::infinity();
  double lb = -ub;
  double free_sum = 0.0;
  std::size_t free = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const double yg = y[t] * grad[t];
    if (alpha[t] >= c) {
      if (y[t] == -1) ub = std::min(ub, yg); else lb = std::max(lb, yg);
    } else if (alpha[t] <= 0.0) {
      if (y[t] == 1) ub = std::min(ub, yg); else lb = std::max(lb, yg);
    } else {
      ++free;
      free_sum += yg;
    }
  }
  const double rho =
      free > 0 ? free_sum / static_cast<double>(free) : (ub + lb) / 2.0;
  model.b = -rho;
  model.w.assign(x[0].size(), 0.0);
  for (std::size_t t = 0; t < n; ++t) {
    if (alpha[t] == 0.0) continue;
    for (std::size_t d = 0; d < model.w.size(); ++d) {
      model.w[d] += alpha[t] * y[t] * x[t][d];
    }
  }
  return model;
}

LinearSvm::LinearSvm(SvmOptions options, unsigned threads)
    : options_(options), threads_(threads) {}

void LinearSvm::fit(const Dataset& train) {
  if (train.empty()) throw Error("svm: empty training set");
  classes_ = train.class_count();
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < classes_; ++a) {
    for (std::size_t b = a + 1; b < classes_; ++b) {
      pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  machines_.assign(pairs.size(), {});
  parallel_for(pairs.size(), threads_, [&](std::size_t p) {
    const auto [pos, neg] = pairs[p];
    std::vector<std::span<const double>> x;
    std::vector<int> y;
    for (std::size_t i = 0; i < train.size(); ++i) {
      if (train.label(i) == pos || train.label(i) == neg) {
        x.push_back(train.row(i));
        y.push_back(train.label(i) == pos ? 1 : -1);
      }
    }
    const bool has_pos = std::count(y.begin(), y.end(), 1) > 0;
    const bool has_neg = std::count(y.begin(), y.end(), -1) > 0;
    BinarySvm m;
    if (has_pos && has_neg) {
      try {
        m = train_binary_svm(x, y, options_);
      } catch (const Error& e) {
        throw Error(std::string(e.what()) + " for pair '" +
                    train.class_names()[pos] + "' vs '" +
                    train.class_names()[neg] + "'");
      }
    } else {
      // a pair with a missing class always votes for the present one
      m.b = has_neg ? -1.0 : 1.0;
    }
    m.positive = pos;
    m.negative = neg;
    machines_[p] = std::move(m);
  });
}

int LinearSvm::predict(std::span<const double> x) const {
  if (classes_ == 0) throw Error("svm: model not fitted");
  std::vector<std::size_t> votes(classes_, 0);
  for (const auto& m : machines_) {
    ++votes[static_cast<std::size_t>(m.decision(x) >= 0.0 ? m.positive
                                                          : m.negative)];
  }
  return static_cast<int>(std::max_element(votes.begin(), votes.end()) -
                          votes.begin());
}

}  // namespace textnet::ml
