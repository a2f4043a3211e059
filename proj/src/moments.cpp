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

#include "quadboson/moments.hpp"

#include <cmath>

namespace quadboson {

Amplitude MomentVector::raw(const MultiIndex& idx) const {
  auto it = amplitudes.find(idx);
  if (it == amplitudes.end()) return {0.0, 0.0};
  return normalization * it->second;
}

double MomentVector::norm() const {
  double s = 0.0;
  for (const auto& [idx, amp] : amplitudes) s += std::norm(amp);
  return std::sqrt(s);
}

MomentMap to_greek_moments(const IncidenceFactor& b, const IncidenceFactor& d,
                           const MomentMap& cartesian) {
  if (b.source_dim() != d.source_dim())
    throw StructuralError("position and momentum factors disagree on mode count");
  const CartesianIndexer cart(b.source_dim());
  const auto pair_labels = static_cast<std::uint32_t>(b.indexer().pair_count());
  const Amplitude i_unit(0.0, 1.0);

  MomentMap out;
  for (const auto& [idx, value] : cartesian) {
    if (value == Amplitude{}) continue;
    // Expand one slot at a time: position slots contract with i B^T,
    // momentum slots with D^T.
    std::vector<std::pair<MultiIndex, Amplitude>> partial;
    partial.emplace_back(MultiIndex{}, value);
    for (const std::uint32_t a : idx) {
      if (a >= cart.dim()) throw StructuralError("cartesian label out of range");
      const bool bar = cart.is_bar(a);
      const std::uint32_t mode = cart.mode(a);
      const auto& row = bar ? d.row(mode) : b.row(mode);
      std::vector<std::pair<MultiIndex, Amplitude>> next;
      next.reserve(partial.size() * row.size());
      for (const auto& [prefix, amp] : partial) {
        for (const auto& [pair_idx, weight] : row) {
          MultiIndex ext = prefix;
          ext.push_back(pair_idx + (bar ? pair_labels : 0u));
          next.emplace_back(std::move(ext), amp * weight * (bar ? 1.0 : i_unit));
        }
      }
      partial = std::move(next);
    }
    for (auto& [gidx, amp] : partial) out[gidx] += amp;
  }

  for (auto it = out.begin(); it != out.end();)
    it = (it->second == Amplitude{}) ? out.erase(it) : std::next(it);
  return out;
}

MomentVector encode_state(const MomentMap& greek_moments, int order_max,
                          std::int64_t nonzero_cap) {
  if (order_max < 0) throw StructuralError("order_max must be >= 0");
  MomentVector psi;
  psi.order_max = order_max;

  bool vacuum_excluded = false;
  for (const auto& [idx, value] : greek_moments) {
    if (static_cast<int>(idx.size()) > order_max)
      throw StructuralError("moment of rank " + std::to_string(idx.size()) +
                            " exceeds order_max " + std::to_string(order_max));
    if (idx.empty()) {
      // An explicit rank-0 entry overrides the implicit vacuum amplitude.
      vacuum_excluded = value == Amplitude{};
    }
    if (value != Amplitude{}) psi.amplitudes[idx] = value;
  }
  if (!vacuum_excluded) psi.amplitudes[MultiIndex{}] = Amplitude{1.0, 0.0};

  if (psi.amplitudes.empty())
    throw DegenerateStateError("all amplitudes are zero and the vacuum is excluded");
  if (psi.stored_nonzeros() > nonzero_cap)
    throw ScaleError("too many nonzero moments", psi.stored_nonzeros(), nonzero_cap);

  double n2 = 0.0;
  for (const auto& [idx, amp] : psi.amplitudes) n2 += std::norm(amp);
  psi.normalization = std::sqrt(n2);
  for (auto& [idx, amp] : psi.amplitudes) amp /= psi.normalization;
  return psi;
}

}  // namespace quadboson
