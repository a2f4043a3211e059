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

#include "quadboson/factor.hpp"

#include <cmath>

namespace quadboson {

GreekIndexer::GreekIndexer(int modes) : modes_(modes) {
  if (modes < 1) throw StructuralError("mode count must be >= 1");
  pairs_ = static_cast<std::int64_t>(modes) * (modes + 1) / 2;
}

std::uint32_t GreekIndexer::pair_index(std::uint32_t j, std::uint32_t k) const {
  if (j > k) std::swap(j, k);
  if (k >= static_cast<std::uint32_t>(modes_))
    throw StructuralError("pair index out of range");
  // Row-major upper triangle: (0,0), (0,1), ..., (0,M-1), (1,1), ...
  const std::int64_t base =
      static_cast<std::int64_t>(j) * modes_ - static_cast<std::int64_t>(j) * (j - 1) / 2;
  return static_cast<std::uint32_t>(base + (k - j));
}

std::uint32_t GreekIndexer::encode(const GreekIndex& g) const {
  return pair_index(g.j, g.k) + (g.bar ? static_cast<std::uint32_t>(pairs_) : 0u);
}

GreekIndex GreekIndexer::decode(std::uint32_t linear) const {
  if (linear >= dim()) throw StructuralError("greek label out of range");
  GreekIndex g;
  g.bar = linear >= pairs_;
  std::int64_t p = g.bar ? linear - pairs_ : linear;
  std::uint32_t j = 0;
  std::int64_t row_len = modes_;
  while (p >= row_len) {
    p -= row_len;
    --row_len;
    ++j;
  }
  g.j = j;
  g.k = j + static_cast<std::uint32_t>(p);
  return g;
}

std::string GreekIndexer::label(std::uint32_t linear, bool one_based) const {
  const GreekIndex g = decode(linear);
  const int off = one_based ? 1 : 0;
  return "(" + std::to_string(g.j + off) + "," + std::to_string(g.k + off) + ")" +
         (g.bar ? "bar" : "");
}

std::string GreekIndexer::label(const MultiIndex& idx, bool one_based) const {
  if (idx.empty()) return "vac";
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ";";
    s += label(idx[i], one_based);
  }
  return s;
}

std::string CartesianIndexer::label(const MultiIndex& idx, bool one_based) const {
  if (idx.empty()) return "vac";
  const int off = one_based ? 1 : 0;
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ";";
    s += (is_bar(idx[i]) ? "p" : "q") + std::to_string(mode(idx[i]) + off);
  }
  return s;
}

IncidenceFactor::IncidenceFactor(int source_dim, GreekIndexer indexer)
    : source_dim_(source_dim), indexer_(std::move(indexer)), rows_(source_dim) {
  if (indexer_.modes() != source_dim)
    throw StructuralError("indexer modes differ from factor source dimension");
}

void IncidenceFactor::add_column(std::uint32_t pair_idx,
                                 std::vector<ColumnEntry> entries) {
  if (pair_idx >= indexer_.pair_count())
    throw StructuralError("column pair index out of range");
  if (entries.size() > 2)
    throw StructuralError("incidence columns have at most two nonzeros");
  for (const auto& [row, value] : entries) {
    if (row >= static_cast<std::uint32_t>(source_dim_))
      throw StructuralError("column row index out of range");
    rows_[row].emplace_back(pair_idx, value);
  }
  columns_[pair_idx] = std::move(entries);
}

Eigen::SparseMatrix<double> IncidenceFactor::sparse() const {
  std::vector<Eigen::Triplet<double>> trips;
  for (const auto& [pair_idx, col] : columns_)
    for (const auto& [row, value] : col)
      trips.emplace_back(static_cast<int>(row), static_cast<int>(pair_idx), value);
  Eigen::SparseMatrix<double> m(source_dim_, static_cast<int>(target_dim()));
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

Eigen::MatrixXd IncidenceFactor::dense() const {
  return Eigen::MatrixXd(sparse());
}

Eigen::MatrixXd IncidenceFactor::gram() const {
  const Eigen::MatrixXd b = dense();
  return b * b.transpose();
}

IncidenceFactor build_incidence_factor(const SparseSymmetricMatrix& a,
                                       double slack_tol) {
  const int m = a.dim();
  GreekIndexer indexer(m);
  IncidenceFactor factor(m, indexer);
  const double scale = std::max(a.max_abs(), 1.0);
  const double zero_band = slack_tol * scale;

  for (const auto& t : a.entries()) {
    if (t.row == t.col) continue;
    if (t.value > zero_band)
      throw SignConventionError(
          "positive off-diagonal entry at (" + std::to_string(t.row + 1) + "," +
          std::to_string(t.col + 1) + "): " + std::to_string(t.value));
    if (t.value >= -zero_band) continue;  // numerically zero coupling
    const double w = std::sqrt(-t.value);
    factor.add_column(indexer.pair_index(t.row, t.col),
                      {{static_cast<std::uint32_t>(t.row), w},
                       {static_cast<std::uint32_t>(t.col), -w}});
  }

  for (int j = 0; j < m; ++j) {
    const double slack = a.row_slack(j);
    if (slack < -zero_band)
      throw SignConventionError("negative diagonal slack at mode " +
                                std::to_string(j + 1) + ": " +
                                std::to_string(slack));
    if (slack <= zero_band) continue;
    factor.add_column(indexer.pair_index(j, j),
                      {{static_cast<std::uint32_t>(j), std::sqrt(slack)}});
  }
  return factor;
}

}  // namespace quadboson
