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
#include <map>
#include <utility>
#include <vector>

#include "quadboson/greek.hpp"
#include "quadboson/sparse.hpp"

namespace quadboson {

/// Vertex-edge incidence factor of a stiffness matrix: a M x M(M+1)/2
/// map with B B^T = A. Column (j, k) with j < k holds
/// sqrt(-A_jk) (e_j - e_k); column (j, j) holds sqrt(slack_j) e_j with
/// slack_j = A_jj + sum_{k != j} A_jk. Columns of uncoupled pairs are
/// all-zero and not stored.
class IncidenceFactor {
 public:
  using ColumnEntry = std::pair<std::uint32_t, double>;  // (row, value)

  IncidenceFactor(int source_dim, GreekIndexer indexer);

  int source_dim() const { return source_dim_; }
  std::int64_t target_dim() const { return indexer_.pair_count(); }
  const GreekIndexer& indexer() const { return indexer_; }

  /// Stored columns, keyed by canonical pair index; each has <= 2 entries.
  const std::map<std::uint32_t, std::vector<ColumnEntry>>& columns() const {
    return columns_;
  }
  /// Nonzeros of row j as (pair index, value) pairs.
  const std::vector<ColumnEntry>& row(int j) const { return rows_[j]; }

  void add_column(std::uint32_t pair_idx, std::vector<ColumnEntry> entries);

  Eigen::SparseMatrix<double> sparse() const;  // M x M(M+1)/2
  Eigen::MatrixXd dense() const;

  /// Dense product B B^T (the factored stiffness matrix).
  Eigen::MatrixXd gram() const;

 private:
  int source_dim_;
  GreekIndexer indexer_;
  std::map<std::uint32_t, std::vector<ColumnEntry>> columns_;
  std::vector<std::vector<ColumnEntry>> rows_;
};

/// Factors a spring-network stiffness matrix into its incidence form.
/// Throws SignConventionError on a positive off-diagonal entry or a
/// negative diagonal slack; slack magnitudes below `slack_tol * max|A|`
/// are treated as exact zeros.
IncidenceFactor build_incidence_factor(const SparseSymmetricMatrix& a,
                                       double slack_tol = 1e-12);

}  // namespace quadboson
