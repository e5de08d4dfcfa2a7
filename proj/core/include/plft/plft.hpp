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

#ifndef PLFT_PLFT_HPP
#define PLFT_PLFT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plft/arith.hpp"

namespace plft {

/// A step from a vertex to one of its children: L(f) = f/(f+1), R(f) = f+1.
enum class Move : unsigned char { L, R };

/// Path from a root to a descendant, first element is the move taken at
/// the root.
using Word = std::vector<Move>;

char to_char(Move move);
std::string to_string(const Word& word);
/// Accepts a string over {L, R}; whitespace is ignored.
Word parse_word(std::string_view text);

/// Positive linear fractional transformation (az + b)/(cz + d).
///
/// Coefficients are nonnegative and ad - bc != 0; both are enforced at
/// construction. Values are never reduced by common factors, so
/// (2z + 2)/(2z + 4) and (z + 1)/(z + 2) are different PLFTs.
class Plft {
 public:
  Plft(Integer a, Integer b, Integer c, Integer d);

  static Plft identity();

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& c() const noexcept { return c_; }
  const Integer& d() const noexcept { return d_; }

  Integer det() const;
  bool is_orphan() const;

  Plft left_child() const;
  Plft right_child() const;
  Plft child(Move move) const;

  /// 1/f: swaps the rows of the matrix.
  Plft reciprocal() const;
  /// f(1/z), up to the scalar z: swaps the columns of the matrix.
  Plft swap_columns() const;

  /// Number of zero coefficients (at most two for a valid PLFT).
  int zero_count() const;

  friend Plft operator*(const Plft& lhs, const Plft& rhs);
  friend bool operator==(const Plft& lhs, const Plft& rhs);
  friend bool operator!=(const Plft& lhs, const Plft& rhs) { return !(lhs == rhs); }

 private:
  struct Unchecked {};
  Plft(Unchecked, Integer a, Integer b, Integer c, Integer d);

  Integer a_, b_, c_, d_;
};

inline Integer det(const Plft& w) { return w.det(); }
inline bool is_orphan(const Plft& w) { return w.is_orphan(); }
inline Plft left_child(const Plft& w) { return w.left_child(); }
inline Plft right_child(const Plft& w) { return w.right_child(); }

/// Composes the word onto `root`: [X1, ..., Xn] gives X1(X2(...Xn(root))),
/// so the last letter is the move taken at the root.
Plft apply_word(const Plft& root, const Word& word);

struct ParentStep {
  Plft parent;
  Move move;  // which child of `parent` the input is
};

/// Inverse of the child rules; empty exactly when `w` is an orphan.
std::optional<ParentStep> parent(const Plft& w);

struct RootPath {
  Plft root;
  Word word;  // apply_word(root, word) == input
};

/// Climbs parent links until an orphan is reached. Every step strictly
/// decreases a + b + c + d, so this terminates.
RootPath root_by_iteration(const Plft& w);

/// Parses "a,b,c,d".
Plft parse_plft(std::string_view text);
/// Emits "a,b,c,d".
std::string to_string(const Plft& w);
/// Emits the display form, e.g. "(2z+1)/(z+2)", "z", "1/z", "2z/3".
std::string to_display(const Plft& w);

}  // namespace plft

#endif  // PLFT_PLFT_HPP
