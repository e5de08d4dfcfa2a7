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

#ifndef PLFT_TESTS_SUPPORT_HPP
#define PLFT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "plft/arith.hpp"
#include "plft/complex_forest.hpp"
#include "plft/plft.hpp"

namespace plft::testing {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline Word random_word(Rng& rng, std::size_t max_len) {
  Word word(uniform(rng, 0, max_len));
  for (auto& m : word) m = uniform(rng, 0, 1) ? Move::R : Move::L;
  return word;
}

// Rejection sampling over small coefficients. Zero coefficients are kept on
// purpose so the degenerate orphans (z, 1/z, kz, ...) show up often.
inline Plft random_orphan(Rng& rng, std::uint64_t bound = 12) {
  for (;;) {
    const std::int64_t a = uniform(rng, 0, bound), b = uniform(rng, 0, bound);
    const std::int64_t c = uniform(rng, 0, bound), d = uniform(rng, 0, bound);
    if (a * d == b * c) continue;
    if ((a < c && b > d) || (a > c && b < d)) {
      return Plft(Integer(a), Integer(b), Integer(c), Integer(d));
    }
  }
}

inline Plft random_plft(Rng& rng, std::uint64_t bound) {
  for (;;) {
    Integer a(static_cast<unsigned long>(uniform(rng, 0, bound)));
    Integer b(static_cast<unsigned long>(uniform(rng, 0, bound)));
    Integer c(static_cast<unsigned long>(uniform(rng, 0, bound)));
    Integer d(static_cast<unsigned long>(uniform(rng, 0, bound)));
    if (a * d != b * c) return Plft(a, b, c, d);
  }
}

inline Plft word_matrix(const Word& word) { return apply_word(Plft::identity(), word); }

// Number of partitions of n into parts <= max_part having exactly `want`
// distinct part sizes, by walking every partition.
inline std::uint64_t partitions_with_distinct_sizes(int n, int max_part, int used, int want) {
  if (n == 0) return used == want ? 1 : 0;
  if (used > want) return 0;
  std::uint64_t total = 0;
  for (int part = std::min(n, max_part); part >= 1; --part) {
    for (int copies = 1; copies * part <= n; ++copies) {
      total += partitions_with_distinct_sizes(n - copies * part, part - 1, used + 1, want);
    }
  }
  return total;
}

inline std::uint64_t brute_nu2(int n) { return partitions_with_distinct_sizes(n, n, 0, 2); }

// Orphans with determinant D by exhaustive search over a box. For an orphan
// with positive determinant b + c <= D - 1, so b, c < D and a, d <= D + bc.
inline std::uint64_t brute_orphan_count(std::int64_t D) {
  std::uint64_t count = 0;
  for (std::int64_t b = 0; b < D; ++b) {
    for (std::int64_t c = 0; c < D; ++c) {
      const std::int64_t top = D + b * c;
      for (std::int64_t a = 0; a <= top; ++a) {
        for (std::int64_t d = 0; d <= top; ++d) {
          if (a * d - b * c != D) continue;
          if ((a < c && b > d) || (a > c && b < d)) ++count;
        }
      }
    }
  }
  return count;
}

using Frac = std::pair<std::int64_t, std::int64_t>;

// Rows 0..rows-1 of the Calkin-Wilf tree, top down and left to right.
inline std::vector<Frac> calkin_wilf_rows(int rows) {
  std::vector<Frac> out{{1, 1}};
  for (std::size_t i = 0; out.size() < (std::size_t{1} << rows) - 1; ++i) {
    const auto [p, q] = out[i];
    out.push_back({p, p + q});
    out.push_back({p + q, q});
  }
  return out;
}

// Members of `targets` reachable from `start` in 1..depth child steps.
inline std::set<Frac> bfs_descendants(Frac start, int depth, const std::set<Frac>& targets) {
  std::set<Frac> hits;
  std::vector<Frac> level{start};
  for (int step = 0; step < depth; ++step) {
    std::vector<Frac> next;
    next.reserve(level.size() * 2);
    for (const auto& [p, q] : level) {
      for (Frac child : {Frac{p, p + q}, Frac{p + q, q}}) {
        if (targets.count(child)) hits.insert(child);
        next.push_back(child);
      }
    }
    level = std::move(next);
  }
  return hits;
}

inline Rational to_rational(Frac f) {
  return make_rational(Integer(static_cast<long>(f.first)), Integer(static_cast<long>(f.second)));
}

inline Rational random_positive_rational(Rng& rng, std::uint64_t bound) {
  return make_rational(Integer(static_cast<unsigned long>(uniform(rng, 1, bound))),
                       Integer(static_cast<unsigned long>(uniform(rng, 1, bound))));
}

inline GaussianRational random_gaussian(Rng& rng, std::uint64_t bound = 100) {
  return {random_positive_rational(rng, bound), random_positive_rational(rng, bound)};
}

}  // namespace plft::testing

#endif  // PLFT_TESTS_SUPPORT_HPP
