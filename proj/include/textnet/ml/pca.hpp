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

#ifndef TEXTNET_ML_PCA_HPP_
#define TEXTNET_ML_PCA_HPP_

#include <cstddef>
#include <vector>

#include "textnet/ml/dataset.hpp"

namespace textnet::ml {

struct PcaResult {
  std::size_t dims = 0;
  std::vector<double> points;      // row-major, size() x dims
  std::vector<double> components;  // row-major, dims x attributes
  std::vector<double> eigenvalues;
  std::vector<double> explained;   // eigenvalue / total variance
  std::size_t rank = 0;            // eigenvalues above tolerance
  bool rank_deficient = false;     // rank < dims

  double at(std::size_t row, std::size_t dim) const {
    return points[row * dims + dim];
  }
};

// Projects centered rows on the top eigenvectors of the covariance
// matrix. Each component's largest-magnitude entry is made positive.
PcaResult pca_project(const Dataset& data, std::size_t dims = 2);

}  // namespace textnet::ml

#endif  // TEXTNET_ML_PCA_HPP_
