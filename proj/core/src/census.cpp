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

#include "plft/census.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace plft {

namespace {

std::uint64_t magnitude(std::int64_t D) {
  if (D == 0) throw std::invalid_argument("determinant 0 is not a PLFT determinant");
  return D < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(D) : static_cast<std::uint64_t>(D);
}

void require_positive(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisor functions need n >= 1");
}

std::uint64_t h_from_tables(std::uint64_t D, const DivisorTables& tables) {
  return nu2(D, tables) + 2 * tables.sigma(D) - tables.tau(D);
}

// h(D) for D = 1..max_d; index 0 is unused. Work is dealt out round-robin
// since the cost of one value grows linearly with D.
std::vector<std::uint64_t> h_values(std::uint64_t max_d, unsigned threads) {
  const DivisorTables tables(max_d);
  std::vector<std::uint64_t> h(max_d + 1, 0);
  threads = std::max(1u, threads);
  if (threads == 1 || max_d < 2) {
    for (std::uint64_t D = 1; D <= max_d; ++D) h[D] = h_from_tables(D, tables);
    return h;
  }
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::uint64_t D = 1 + t; D <= max_d; D += threads) h[D] = h_from_tables(D, tables);
      });
    }
  }
  return h;
}

Integer to_integer(std::uint64_t n) { return Integer(static_cast<unsigned long>(n)); }

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::uint64_t divisor_sigma(std::uint64_t n) {
  require_positive(n);
  std::uint64_t sum = 0;
  for (std::uint64_t i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    sum += i;
    if (i != n / i) sum += n / i;
  }
  return sum;
}

std::uint64_t divisor_tau(std::uint64_t n) {
  require_positive(n);
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    count += (i == n / i) ? 1 : 2;
  }
  return count;
}

DivisorTables::DivisorTables(std::uint64_t limit)
    : limit_(limit), tau_(limit + 1, 0), sigma_(limit + 1, 0) {
  for (std::uint64_t i = 1; i <= limit; ++i) {
    for (std::uint64_t j = i; j <= limit; j += i) {
      ++tau_[j];
      sigma_[j] += i;
    }
  }
}

std::uint64_t nu2(std::uint64_t D, const DivisorTables& tables) {
  require_positive(D);
  if (D > tables.limit()) throw std::invalid_argument("nu2: divisor tables too small");
  std::uint64_t ordered = 0;
  for (std::uint64_t j = 1; j < D; ++j) ordered += tables.tau(j) * tables.tau(D - j);
  return (ordered + tables.tau(D) - tables.sigma(D)) / 2;
}

std::uint64_t nu2(std::uint64_t D) {
  require_positive(D);
  return nu2(D, DivisorTables(D));
}

std::uint64_t h_closed(std::int64_t D) {
  const std::uint64_t n = magnitude(D);
  return nu2(n) + 2 * divisor_sigma(n) - divisor_tau(n);
}

std::uint64_t h_direct(std::int64_t D) {
  const std::uint64_t n = magnitude(D);
  std::uint64_t count = 0;
  for (std::uint64_t b = 0; b < n; ++b) {
    for (std::uint64_t c = 0; b + c < n; ++c) {
      const std::uint64_t target = n + b * c;
      const std::uint64_t root = isqrt(target);
      for (std::uint64_t x = 1; x <= root; ++x) {
        if (target % x != 0) continue;
        const std::uint64_t y = target / x;
        // (a, d) = (x, y) and, when distinct, (y, x).
        if (x > c && y > b) ++count;
        if (x != y && y > c && x > b) ++count;
      }
    }
  }
  return count;
}

std::vector<Plft> enumerate_orphans(std::int64_t D) {
  const std::uint64_t n = magnitude(D);
  std::vector<Plft> out;
  // a >= c + 1 and d >= b + 1 give D = ad - bc >= b + c + 1.
  for (std::uint64_t c = 0; c < n; ++c) {
    for (std::uint64_t b = 0; b + c < n; ++b) {
      const std::uint64_t target = n + b * c;
      // d >= b + 1 bounds a from above.
      const std::uint64_t a_max = target / (b + 1);
      for (std::uint64_t a = c + 1; a <= a_max; ++a) {
        if (target % a != 0) continue;
        out.emplace_back(to_integer(a), to_integer(b), to_integer(c), to_integer(target / a));
      }
    }
  }
  return out;
}

CensusRow census_row(std::uint64_t D) {
  require_positive(D);
  const DivisorTables tables(D);
  CensusRow row;
  row.D = D;
  row.nu2 = nu2(D, tables);
  row.sigma = tables.sigma(D);
  row.tau = tables.tau(D);
  row.h_closed = row.nu2 + 2 * row.sigma - row.tau;
  row.h_direct = h_direct(static_cast<std::int64_t>(D));
  row.orphan_count = enumerate_orphans(static_cast<std::int64_t>(D)).size();
  return row;
}

std::vector<CensusRow> census_table(std::uint64_t max_d, const CensusOptions& options) {
  const DivisorTables tables(max_d);
  const auto h = h_values(max_d, options.threads);
  std::vector<CensusRow> rows;
  rows.reserve(max_d);
  for (std::uint64_t D = 1; D <= max_d; ++D) {
    CensusRow row;
    row.D = D;
    row.sigma = tables.sigma(D);
    row.tau = tables.tau(D);
    row.h_closed = h[D];
    row.nu2 = h[D] + row.tau - 2 * row.sigma;
    if (options.cross_check) {
      row.h_direct = h_direct(static_cast<std::int64_t>(D));
      row.orphan_count = enumerate_orphans(static_cast<std::int64_t>(D)).size();
    }
    rows.push_back(row);
  }
  return rows;
}

std::uint64_t summatory_h(std::uint64_t x, unsigned threads) {
  if (x == 0) throw std::invalid_argument("summatory_h needs x >= 1");
  const auto h = h_values(x, threads);
  return std::accumulate(h.begin(), h.end(), std::uint64_t{0});
}

double summatory_reference(std::uint64_t x) {
  const double lx = std::log(static_cast<double>(x));
  const double xd = static_cast<double>(x);
  return 0.25 * xd * xd * lx * lx;
}

std::vector<SeriesPoint> ratio_series(std::span<const std::uint64_t> xs, unsigned threads) {
  if (xs.empty()) return {};
  for (auto x : xs) {
    if (x < 2) throw std::invalid_argument("ratio_series needs x >= 2");
  }
  const std::uint64_t max_x = *std::max_element(xs.begin(), xs.end());
  const auto h = h_values(max_x, threads);
  std::vector<std::uint64_t> prefix(h.size(), 0);
  std::partial_sum(h.begin(), h.end(), prefix.begin());

  std::vector<SeriesPoint> points;
  points.reserve(xs.size());
  for (auto x : xs) {
    SeriesPoint pt;
    pt.x = x;
    pt.summatory = prefix[x];
    pt.reference = summatory_reference(x);
    pt.ratio = static_cast<double>(pt.summatory) / pt.reference;
    points.push_back(pt);
  }
  return points;
}

double aux_sum(std::uint64_t x) {
  if (x < 2) throw std::invalid_argument("aux_sum needs x >= 2");
  double total = 0.0;
  for (std::uint64_t c = 1; c < x; ++c) {
    double inner = 0.0;
    for (std::uint64_t a = c + 1; a <= x; ++a) {
      inner += 1.0 / (static_cast<double>(a) * static_cast<double>(a - c));
    }
    total += inner;
  }
  return total;
}

double aux_reference(std::uint64_t x) {
  const double lx = std::log(static_cast<double>(x));
  return 0.5 * lx * lx;
}

void write_census_csv(std::ostream& out, std::span<const CensusRow> rows) {
  out << "D,nu2,sigma,tau,h\n";
  for (const auto& row : rows) {
    out << row.D << ',' << row.nu2 << ',' << row.sigma << ',' << row.tau << ',' << row.h_closed
        << '\n';
  }
}

void write_series_csv(std::ostream& out, std::span<const SeriesPoint> points) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "x,summatory,reference,ratio\n" << std::setprecision(12);
  for (const auto& pt : points) {
    out << pt.x << ',' << pt.summatory << ',' << pt.reference << ',' << pt.ratio << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace plft
