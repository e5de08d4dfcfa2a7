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

#ifndef PLFT_COMPLEX_FOREST_HPP
#define PLFT_COMPLEX_FOREST_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plft/arith.hpp"
#include "plft/plft.hpp"

namespace plft {

/// Exact complex number with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  friend bool operator==(const GaussianRational& lhs, const GaussianRational& rhs) {
    return lhs.re == rhs.re && lhs.im == rhs.im;
  }
};

/// Emits "p/q+r/s*i" (integer parts without a denominator), e.g. "1/5+2/5*i".
std::string to_string(const GaussianRational& z);
/// Accepts "p/q+r/s*i" with optional signs on either part; "*i" may be
/// written "i" and a bare "i" means 1.
GaussianRational parse_gaussian(std::string_view text);

/// Generator exponents of the (u, v) forest: left children via
/// L_u(z) = z/(uz + 1), right children via R_v(z) = z + v.
struct OrphanParams {
  std::uint64_t u;
  std::uint64_t v;

  OrphanParams(std::uint64_t u_, std::uint64_t v_);
};

/// Re(z) > 0 and Im(z) > 0.
bool in_d0(const GaussianRational& z);

/// Re(z) <= v and |2uz - 1| >= 1, in exact arithmetic. Throws
/// std::domain_error outside the open first quadrant.
bool is_complex_orphan(const GaussianRational& z, const OrphanParams& params);

struct ComplexParent {
  GaussianRational value;
  Move move;
};

/// z - v when Re(z) > v, (L_u)^{-1}(z) when |2uz - 1| < 1, nothing for an
/// orphan. Throws std::domain_error outside the open first quadrant.
std::optional<ComplexParent> complex_parent(const GaussianRational& z, const OrphanParams& params);

/// Child of z along `move`.
GaussianRational apply_complex_move(const GaussianRational& z, Move move,
                                    const OrphanParams& params);

struct ChainStep {
  GaussianRational value;  // the child
  Move move;               // which child of its parent `value` is
  Rational im_increase;    // Im(parent) - Im(value); zero for R steps
};

struct ChainResult {
  GaussianRational root;
  /// Nearest first: steps[0].value is the input.
  std::vector<ChainStep> steps;
};

/// Climbs complex_parent to the orphan root. Reaching `max_steps` throws
/// std::logic_error: every chain is finite, so that can only be a bug.
ChainResult ancestor_chain(const GaussianRational& z, const OrphanParams& params,
                           std::size_t max_steps = 1'000'000);

/// Lower bound on the imaginary gain of one left-parent step starting at
/// height y: 2y/(1 + sqrt(1 - 4u^2 y^2)) - y, for 0 < y <= 1/(2u).
double epsilon_u(std::uint64_t u, double y);

/// "step,move,re,im" with one row per chain node, the root last with move
/// "root". Rationals are written "p/q".
void write_chain_csv(std::ostream& out, const ChainResult& chain);

}  // namespace plft

#endif  // PLFT_COMPLEX_FOREST_HPP
