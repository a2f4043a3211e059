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

#include <cstdint>
#include <string>
#include <vector>

#include "quadboson/errors.hpp"

namespace quadboson {

/// Ordered multi-index over linearized coordinate labels. The empty tuple
/// is the vacuum component.
using MultiIndex = std::vector<std::uint32_t>;

/// Redundant coordinate label: an (unordered) mode pair plus a flag
/// distinguishing position-type from momentum-type coordinates.
struct GreekIndex {
  std::uint32_t j = 0;  // 0-based, j <= k
  std::uint32_t k = 0;
  bool bar = false;     // false: position-type, true: momentum-type

  bool operator==(const GreekIndex&) const = default;
};

/// Linearization of the pair-label space. Pairs (j, k) with j <= k are
/// ordered lexicographically; the bar flag is the most significant bit.
class GreekIndexer {
 public:
  explicit GreekIndexer(int modes);

  int modes() const { return modes_; }
  /// Number of pair labels: M (M + 1) / 2.
  std::int64_t pair_count() const { return pairs_; }
  /// Total label space size: 2 M (M + 1) / 2.
  std::int64_t dim() const { return 2 * pairs_; }

  std::uint32_t pair_index(std::uint32_t j, std::uint32_t k) const;
  std::uint32_t encode(const GreekIndex& g) const;
  GreekIndex decode(std::uint32_t linear) const;

  std::string label(std::uint32_t linear, bool one_based = true) const;
  std::string label(const MultiIndex& idx, bool one_based = true) const;

 private:
  int modes_ = 0;
  std::int64_t pairs_ = 0;
};

/// Cartesian coordinate labels: a in [0, M) is q_a, a in [M, 2M) is p_{a-M}.
class CartesianIndexer {
 public:
  explicit CartesianIndexer(int modes) : modes_(modes) {
    if (modes < 1) throw StructuralError("mode count must be >= 1");
  }

  int modes() const { return modes_; }
  std::int64_t dim() const { return 2 * static_cast<std::int64_t>(modes_); }

  std::uint32_t encode(std::uint32_t mode, bool bar) const {
    if (mode >= static_cast<std::uint32_t>(modes_))
      throw StructuralError("mode index out of range");
    return mode + (bar ? modes_ : 0u);
  }
  bool is_bar(std::uint32_t a) const { return a >= static_cast<std::uint32_t>(modes_); }
  std::uint32_t mode(std::uint32_t a) const {
    return is_bar(a) ? a - modes_ : a;
  }

  std::string label(const MultiIndex& idx, bool one_based = true) const;

 private:
  int modes_ = 0;
};

}  // namespace quadboson
