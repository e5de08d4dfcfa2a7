// Copyright 2026 The plft Authors
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

#ifndef PLFT_ORPHAN_ROOT_HPP
#define PLFT_ORPHAN_ROOT_HPP

#include <cstddef>
#include <optional>

#include "plft/continued_fraction.hpp"
#include "plft/plft.hpp"

namespace plft {

/// Result of locating the orphan root from the continued fractions of the
/// column ratios a/c and b/d.
struct RootReport {
  Plft root;
  /// True when the root is the reciprocal of `cf.tail` (odd k).
  bool inverted = false;
  /// w written as [q0, ..., q_{k-1} | tail], consistent with evaluate_plft_cf.
  PlftContinuedFraction cf;
  /// Number of partial quotients in `cf`.
  std::size_t k = 0;
  /// Final (possibly partial) quotient shared by both column expansions.
  Integer p = 0;
  /// c = 0 or d = 0, so the reciprocal PLFT was analysed instead.
  bool reciprocal_applied = false;
  /// a/c had the shorter expansion, so z -> 1/z (column swap) was applied.
  bool columns_swapped = false;
};

/// Orphan root of w computed from an optimal pair of continued fraction
/// representations of a/c and b/d: the pair maximizing the shared prefix
/// length k, then the pivot p. Ties keep the canonical expansion of a/c.
/// The root is expressed in the original variable.
RootReport orphan_root_cf(const Plft& w);

/// Word over {L, R} with apply_word(identity, word) == m, or nothing when
/// m is not a product of L1 and R1 (equivalently det(m) != 1). Decoded from
/// the continued fractions of a/c and b/d and verified by multiplication.
std::optional<Word> decompose_special(const Plft& m);

/// Whether the orphan root of w is z or 1/z. Requires c, d != 0 and
/// det(w) = +-1; otherwise throws std::invalid_argument.
bool rootz_check(const Plft& w);

/// Evaluates the expansion at the limits z -> infinity and z -> 0+ in exact
/// arithmetic and compares with a/c and b/d, including the gcd scaling of
/// the tail columns. Requires c, d != 0 (std::invalid_argument otherwise).
bool limit_checks(const Plft& w, const PlftContinuedFraction& cf);

}  // namespace plft

#endif  // PLFT_ORPHAN_ROOT_HPP
