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

#ifndef PLFT_CENSUS_HPP
#define PLFT_CENSUS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "plft/plft.hpp"

namespace plft {

// Counting orphan PLFTs of a fixed determinant D. h(D) = h(-D), so every
// entry point taking a signed D works with |D|; D = 0 is rejected since no
// PLFT has determinant zero.

/// Sum of the divisors of n >= 1, by trial division up to sqrt(n).
std::uint64_t divisor_sigma(std::uint64_t n);
/// Number of divisors of n >= 1, by trial division up to sqrt(n).
std::uint64_t divisor_tau(std::uint64_t n);

/// tau and sigma for every n <= limit, sieved.
class DivisorTables {
 public:
  explicit DivisorTables(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t tau(std::uint64_t n) const { return tau_.at(n); }
  std::uint64_t sigma(std::uint64_t n) const { return sigma_.at(n); }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> tau_;
  std::vector<std::uint64_t> sigma_;
};

/// Partitions of D into exactly two distinct part sizes.
///
/// Counted through ordered pairs of (part, multiplicity) blocks: the sum
/// over j of tau(j) tau(D - j) counts every (s, m, s', m') with
/// ms + m's' = D; removing the s = s' solutions (sigma(D) - tau(D) of them)
/// leaves each two-size partition counted twice.
std::uint64_t nu2(std::uint64_t D);
std::uint64_t nu2(std::uint64_t D, const DivisorTables& tables);

/// nu2(D) + 2 sigma(D) - tau(D).
std::uint64_t h_closed(std::int64_t D);

/// Sum over b, c >= 0 with b + c < D of #{(a, d) : a > c, d > b, ad = D + bc},
/// with the inner count taken over divisor pairs of D + bc.
std::uint64_t h_direct(std::int64_t D);

/// Every orphan with determinant |D| (a > c, d > b), found by scanning a
/// over its full admissible range.
std::vector<Plft> enumerate_orphans(std::int64_t D);

struct CensusRow {
  std::uint64_t D = 0;
  std::uint64_t nu2 = 0;
  std::uint64_t sigma = 0;
  std::uint64_t tau = 0;
  std::uint64_t h_closed = 0;
  std::optional<std::uint64_t> h_direct;
  std::optional<std::uint64_t> orphan_count;
};

/// One row with all three routes filled in.
CensusRow census_row(std::uint64_t D);

struct CensusOptions {
  unsigned threads = 1;
  /// Also fill h_direct and orphan_count (much slower).
  bool cross_check = false;
};

/// Rows for D = 1..max_d in order. The result does not depend on the
/// thread count.
std::vector<CensusRow> census_table(std::uint64_t max_d, const CensusOptions& options = {});

/// Sum of h(D) for 1 <= D <= x.
std::uint64_t summatory_h(std::uint64_t x, unsigned threads = 1);

struct SeriesPoint {
  std::uint64_t x = 0;
  std::uint64_t summatory = 0;
  double reference = 0.0;  // x^2 ln^2(x) / 4
  double ratio = 0.0;      // summatory / reference
};

double summatory_reference(std::uint64_t x);

/// Points for each x >= 2 in `xs`, in the given order.
std::vector<SeriesPoint> ratio_series(std::span<const std::uint64_t> xs, unsigned threads = 1);

/// sum_{1 <= c <= x-1} sum_{c < a <= x} 1/(a(a - c)) in double precision, x >= 2.
double aux_sum(std::uint64_t x);
/// ln^2(x) / 2.
double aux_reference(std::uint64_t x);

/// "D,nu2,sigma,tau,h"
void write_census_csv(std::ostream& out, std::span<const CensusRow> rows);
/// "x,summatory,reference,ratio"
void write_series_csv(std::ostream& out, std::span<const SeriesPoint> points);

}  // namespace plft

#endif  // PLFT_CENSUS_HPP
