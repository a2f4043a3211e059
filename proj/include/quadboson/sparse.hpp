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

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <vector>

#include "quadboson/errors.hpp"

namespace quadboson {

/// One stored coefficient of a sparse matrix.
struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

/// Real symmetric d-sparse matrix stored as its upper triangle.
///
/// Entries are kept canonical: row <= col, sorted lexicographically,
/// duplicates merged, exact zeros dropped. The measured sparsity is the
/// maximum number of nonzeros in any row/column of the full symmetric
/// matrix.
class SparseSymmetricMatrix {
 public:
  SparseSymmetricMatrix() = default;

  /// Builds from (row, col, value) coefficients in any order; (r, c) and
  /// (c, r) address the same logical entry and are summed together.
  SparseSymmetricMatrix(int dim, const std::vector<Triplet>& entries);

  /// Builds the M x M identity scaled by `scale`.
  static SparseSymmetricMatrix identity(int dim, double scale = 1.0);

  /// Builds from a dense matrix; throws StructuralError if the symmetry
  /// residual exceeds `sym_tol`.
  static SparseSymmetricMatrix from_dense(const Eigen::MatrixXd& m,
                                          double sym_tol = 1e-12,
                                          double drop_tol = 0.0);

  int dim() const { return dim_; }
  /// Canonical upper-triangle entries (row <= col).
  const std::vector<Triplet>& entries() const { return entries_; }
  /// Max nonzeros per row/column of the full symmetric matrix.
  int sparsity() const { return sparsity_; }
  bool is_zero() const { return entries_.empty(); }
  std::int64_t nnz_upper() const { return static_cast<std::int64_t>(entries_.size()); }

  double operator()(int r, int c) const;

  /// Diagonal slack of row j: A_jj + sum_{k != j} A_jk. Nonnegative for
  /// spring-network stiffness matrices, where it is the coupling to the
  /// reference point.
  double row_slack(int j) const;

  /// Largest off-diagonal entry (0 for diagonal matrices).
  double max_offdiagonal() const;
  double max_abs() const;

  Eigen::MatrixXd dense() const;
  Eigen::SparseMatrix<double> sparse() const;

  /// y = A x using the symmetric completion.
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;

 private:
  int dim_ = 0;
  std::vector<Triplet> entries_;
  int sparsity_ = 0;

  void canonicalize();
};

/// Sum of two symmetric matrices of equal dimension.
SparseSymmetricMatrix add_scaled(const SparseSymmetricMatrix& a, double sa,
                                 const SparseSymmetricMatrix& b, double sb);

}  // namespace quadboson
