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

#ifndef PLFT_CONTINUED_FRACTION_HPP
#define PLFT_CONTINUED_FRACTION_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plft/arith.hpp"
#include "plft/plft.hpp"

namespace plft {

/// Finite simple continued fraction [q0; q1, ..., qk] with q0 >= 0 and
/// qi >= 1 for i >= 1.
struct ContinuedFraction {
  std::vector<Integer> terms;

  /// Exact value. Throws std::invalid_argument for an empty or
  /// ill-formed term list.
  Rational value() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Continued fraction of a PLFT: q0 + 1/(q1 + ... + 1/(q_{k-1} + 1/tail))
/// with an orphan tail. With no partial quotients the PLFT is the tail.
struct PlftContinuedFraction {
  std::vector<Integer> partial_quotients;
  Plft tail;

  friend bool operator==(const PlftContinuedFraction&, const PlftContinuedFraction&) = default;
};

/// Checks the term invariants; throws std::invalid_argument on violation.
void validate_terms(const std::vector<Integer>& terms);

/// Euclidean expansion of r > 0. The last term is >= 2 unless the
/// expansion has a single term.
ContinuedFraction cf_of_rational(const Rational& r);

/// Same as cf_of_rational but also accepts 0, which expands to [0].
ContinuedFraction cf_of_nonnegative(const Integer& num, const Integer& den);

/// The two representations of the same value: [..., qk] and
/// [..., qk - 1, 1]. Returns the input first. [0] has no second form.
std::vector<ContinuedFraction> cf_variants(const ContinuedFraction& cf);

/// Value of the terms as a projective pair (num, den); an empty list is
/// the point at infinity (1, 0).
std::pair<Integer, Integer> projective_value(const std::vector<Integer>& terms);

/// Division-algorithm expansion of a PLFT. The tail is always an orphan
/// and evaluate_plft_cf recovers `w` exactly.
PlftContinuedFraction plft_cf_expand(const Plft& w);

/// Multiplies R^q0 L^q1 R^q2 ... onto the tail (k even) or onto its
/// reciprocal (k odd). Throws std::invalid_argument if the quotients are
/// ill-formed or the tail is not an orphan.
Plft evaluate_plft_cf(const PlftContinuedFraction& cf);

/// Continued fraction of the L or R child, computed from the parent's.
PlftContinuedFraction lr_on_cf(const PlftContinuedFraction& cf, Move move);

/// The orphan root read off an expansion: the tail when the number of
/// partial quotients is even, its reciprocal otherwise.
Plft root_from_expansion(const PlftContinuedFraction& cf);

/// Strict descendant relation in the Calkin-Wilf tree, decided from the
/// continued fractions of both numbers. A number is not its own descendant.
bool is_descendant_rational(const Rational& ancestor, const Rational& target);

/// Proper ancestors of w > 0 in the Calkin-Wilf tree, nearest first,
/// ending with 1/1. Empty for w = 1.
std::vector<Rational> ancestors_of_rational(const Rational& w);

/// "[q0;q1,q2]" and "[q0]".
std::string to_string(const ContinuedFraction& cf);
/// "[q0;q1,...,| a,b,c,d]"; "[| a,b,c,d]" with no partial quotients.
std::string to_string(const PlftContinuedFraction& cf);
ContinuedFraction parse_continued_fraction(std::string_view text);
PlftContinuedFraction parse_plft_continued_fraction(std::string_view text);

}  // namespace plft

#endif  // PLFT_CONTINUED_FRACTION_HPP
