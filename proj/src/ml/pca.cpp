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

#include "textnet/ml/pca.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace textnet::ml {

PcaResult pca_project(const Dataset& data, std::size_t dims) {
  const std::size_t n = data.size();
  const std::size_t d = data.dims();
  if (dims == 0 || dims > d) throw Error("pca: invalid number of components");
  if (n <= dims) {
    throw Error("pca: " + std::to_string(n) + " points for " +
                std::to_string(dims) + " components");
  }
  Eigen::MatrixXd x(n, d);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = data.row(i);
    for (std::size_t k = 0; k < d; ++k) x(i, k) = r[k];
  }
  const Eigen::RowVectorXd mean = x.colwise().mean();
  x.rowwise() -= mean;
  const Eigen::MatrixXd cov = x.transpose() * x / static_cast<double>(n - 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) throw Error("pca: eigensolver failed");
  // ascending order from the solver
  const Eigen::VectorXd values = solver.eigenvalues().reverse();
  Eigen::MatrixXd vectors = solver.eigenvectors().rowwise().reverse();

  PcaResult out;
  out.dims = dims;
  const double total = std::max(values.sum(), 0.0);
  const double tol = std::max(values(0), 0.0) * 1e-12 * static_cast<double>(d);
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (values(k) > tol) ++out.rank;
  }
  out.rank_deficient = out.rank < dims;

  for (std::size_t c = 0; c < dims; ++c) {
    Eigen::Index arg = 0;
    vectors.col(static_cast<Eigen::Index>(c)).cwiseAbs().maxCoeff(&arg);
    if (vectors(arg, static_cast<Eigen::Index>(c)) < 0.0) {
      vectors.col(static_cast<Eigen::Index>(c)) *= -1.0;
    }
    const double ev = std::max(values(static_cast<Eigen::Index>(c)), 0.0);
    out.eigenvalues.push_back(ev);
    out.explained.push_back(total > 0.0 ? ev / total : 0.0);
    for (std::size_t k = 0; k < d; ++k) {
      out.components.push_back(
          vectors(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(c)));
    }
  }
  const Eigen::MatrixXd proj = x * vectors.leftCols(static_cast<Eigen::Index>(dims));
  out.points.resize(n * dims);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < dims; ++c) {
      out.points[i * dims + c] =
          proj(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

}  // namespace textnet::ml
