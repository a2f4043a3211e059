// Copyright 2026 The quadboson authors
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

#include "quadboson/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace quadboson {

SparseSymmetricMatrix::SparseSymmetricMatrix(int dim,
                                             const std::vector<Triplet>& entries)
    : dim_(dim) {
  if (dim < 1) throw StructuralError("matrix dimension must be >= 1");
  entries_.reserve(entries.size());
  for (const auto& t : entries) {
    if (t.row < 0 || t.col < 0 || t.row >= dim || t.col >= dim)
      throw StructuralError("matrix entry index out of range");
    Triplet c = t;
    if (c.row > c.col) std::swap(c.row, c.col);
    entries_.push_back(c);
  }
  canonicalize();
}

void SparseSymmetricMatrix::canonicalize() {
  std::sort(entries_.begin(), entries_.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<Triplet> merged;
  merged.reserve(entries_.size());
  for (const auto& t : entries_) {
    if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col)
      merged.back().value += t.value;
    else
      merged.push_back(t);
  }
  entries_.clear();
  for (const auto& t : merged)
    if (t.value != 0.0) entries_.push_back(t);

  std::vector<int> per_line(dim_, 0);
  for (const auto& t : entries_) {
    ++per_line[t.row];
    if (t.col != t.row) ++per_line[t.col];
  }
  sparsity_ = per_line.empty() ? 0 : *std::max_element(per_line.begin(), per_line.end());
}

SparseSymmetricMatrix SparseSymmetricMatrix::identity(int dim, double scale) {
  std::vector<Triplet> t;
  t.reserve(dim);
  for (int j = 0; j < dim; ++j) t.push_back({j, j, scale});
  return SparseSymmetricMatrix(dim, t);
}

SparseSymmetricMatrix SparseSymmetricMatrix::from_dense(const Eigen::MatrixXd& m,
                                                        double sym_tol,
                                                        double drop_tol) {
  if (m.rows() != m.cols()) throw StructuralError("matrix must be square");
  const double residual = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (residual > sym_tol)
    throw StructuralError("matrix is not symmetric (residual " +
                          std::to_string(residual) + ")");
  std::vector<Triplet> t;
  const int n = static_cast<int>(m.rows());
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      const double v = 0.5 * (m(r, c) + m(c, r));
      if (std::abs(v) > drop_tol) t.push_back({r, c, v});
    }
  return SparseSymmetricMatrix(n, t);
}

double SparseSymmetricMatrix::operator()(int r, int c) const {
  if (r > c) std::swap(r, c);
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), std::pair<int, int>{r, c},
      [](const Triplet& t, const std::pair<int, int>& key) {
        return t.row != key.first ? t.row < key.first : t.col < key.second;
      });
  if (it != entries_.end() && it->row == r && it->col == c) return it->value;
  return 0.0;
}

double SparseSymmetricMatrix::row_slack(int j) const {
  double slack = 0.0;
  for (const auto& t : entries_) {
    if (t.row == j && t.col == j)
      slack += t.value;
    else if (t.row == j || t.col == j)
      slack += t.value;
  }
  return slack;
}

double SparseSymmetricMatrix::max_offdiagonal() const {
  double m = 0.0;
  bool any = false;
  for (const auto& t : entries_)
    if (t.row != t.col) {
      m = any ? std::max(m, t.value) : t.value;
      any = true;
    }
  return any ? m : 0.0;
}

double SparseSymmetricMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& t : entries_) m = std::max(m, std::abs(t.value));
  return m;
}

Eigen::MatrixXd SparseSymmetricMatrix::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
  for (const auto& t : entries_) {
    m(t.row, t.col) = t.value;
    m(t.col, t.row) = t.value;
  }
  return m;
}

Eigen::SparseMatrix<double> SparseSymmetricMatrix::sparse() const {
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(entries_.size() * 2);
  for (const auto& t : entries_) {
    trips.emplace_back(t.row, t.col, t.value);
    if (t.row != t.col) trips.emplace_back(t.col, t.row, t.value);
  }
  Eigen::SparseMatrix<double> m(dim_, dim_);
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

Eigen::VectorXd SparseSymmetricMatrix::apply(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) throw StructuralError("vector size mismatch in apply");
  Eigen::VectorXd y = Eigen::VectorXd::Zero(dim_);
  for (const auto& t : entries_) {
    y[t.row] += t.value * x[t.col];
    if (t.row != t.col) y[t.col] += t.value * x[t.row];
  }
  return y;
}

SparseSymmetricMatrix add_scaled(const SparseSymmetricMatrix& a, double sa,
                                 const SparseSymmetricMatrix& b, double sb) {
  if (a.dim() != b.dim()) throw StructuralError("dimension mismatch in add_scaled");
  std::vector<Triplet> t;
  t.reserve(a.entries().size() + b.entries().size());
  for (const auto& e : a.entries()) t.push_back({e.row, e.col, sa * e.value});
  for (const auto& e : b.entries()) t.push_back({e.row, e.col, sb * e.value});
  return SparseSymmetricMatrix(a.dim(), t);
}

}  // namespace quadboson
