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

#include <complex>
#include <cstdint>
#include <map>

#include "quadboson/factor.hpp"
#include "quadboson/greek.hpp"

namespace quadboson {

using Amplitude = std::complex<double>;

/// Sparse map from ordered multi-indices to moment values. Keys of length
/// r carry rank-r moments; the empty key is the vacuum component.
using MomentMap = std::map<MultiIndex, Amplitude>;

/// Normalized amplitude vector over multi-indexed coordinate monomials up
/// to order R, including the rank-0 vacuum component. The stored
/// amplitudes are the moments divided by the normalization N, so the raw
/// moment behind key alpha is N * amplitudes[alpha].
struct MomentVector {
  int order_max = 0;
  MomentMap amplitudes;
  double normalization = 1.0;

  /// Unnormalized moment value of a multi-index (0 when absent).
  Amplitude raw(const MultiIndex& idx) const;
  /// l2 norm of the stored normalized amplitudes (1 for a valid state).
  double norm() const;
  std::int64_t stored_nonzeros() const {
    return static_cast<std::int64_t>(amplitudes.size());
  }
};

/// Contracts every slot of the sparse cartesian moments with the
/// coordinate change z_pair = i B^T q (position slots) and
/// z_pairbar = D^T p (momentum slots). Keys of the input are cartesian
/// labels (see CartesianIndexer); keys of the output are linearized
/// greek labels. Linear in the moment argument.
MomentMap to_greek_moments(const IncidenceFactor& b, const IncidenceFactor& d,
                           const MomentMap& cartesian);

/// Assembles the normalized moment vector from unnormalized greek moments.
/// The vacuum amplitude 1 is always included at rank 0; N is the l2 norm
/// of the full unnormalized list. Throws DegenerateStateError when the
/// input is identically zero with the vacuum explicitly excluded
/// (a rank-0 key with value 0), and ScaleError past `nonzero_cap`.
MomentVector encode_state(const MomentMap& greek_moments, int order_max,
                          std::int64_t nonzero_cap = 1 << 20);

}  // namespace quadboson
