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

#include "plft/orphan_root.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace plft {

namespace {

struct Candidate {
  std::size_t k = 0;  // prefix length + 1
  Integer p;
  std::vector<Integer> runs;  // exponents of R, L, R, ... peeled off the left
  Plft root;
};

// Column left over after peeling X_0^{t_0} ... X_{m-1}^{t_{m-1}} X_m^{p},
// where `rest` holds the remaining terms starting at index m (already
// reduced by p). Odd m means the remaining expansion reads bottom/top.
std::pair<Integer, Integer> remainder_column(const std::vector<Integer>& rest, std::size_t m,
                                             const Integer& scale) {
  auto [num, den] = projective_value(rest);
  if (m % 2 == 1) std::swap(num, den);
  return {scale * num, scale * den};
}

Candidate best_candidate(const Plft& w) {
  Integer ga, gb;
  mpz_gcd(ga.get_mpz_t(), w.a().get_mpz_t(), w.c().get_mpz_t());
  mpz_gcd(gb.get_mpz_t(), w.b().get_mpz_t(), w.d().get_mpz_t());

  const auto a_forms = cf_variants(cf_of_nonnegative(w.a(), w.c()));
  const auto b_forms = cf_variants(cf_of_nonnegative(w.b(), w.d()));

  std::optional<Candidate> best;
  for (const auto& a_cf : a_forms) {
    for (const auto& b_cf : b_forms) {
      const auto& A = a_cf.terms;
      const auto& B = b_cf.terms;
      std::size_t m = 0;
      while (m < A.size() && m < B.size() && A[m] == B[m]) ++m;
      if (m == A.size() && m == B.size()) {
        throw std::logic_error("orphan_root_cf: equal column ratios");
      }
      // A finished expansion absorbs any further power of X_m.
      Integer p;
      if (m == A.size()) {
        p = B[m];
      } else if (m == B.size()) {
        p = A[m];
      } else {
        p = std::min(A[m], B[m]);
      }
      auto rest_of = [&](const std::vector<Integer>& t) {
        std::vector<Integer> rest;
        if (m < t.size()) {
          rest.assign(t.begin() + static_cast<std::ptrdiff_t>(m), t.end());
          rest.front() -= p;
        }
        return rest;
      };
      const std::size_t k = m + 1;
      if (best && (k < best->k || (k == best->k && p <= best->p))) continue;

      auto [a2, c2] = remainder_column(rest_of(A), m, ga);
      auto [b2, d2] = remainder_column(rest_of(B), m, gb);
      Candidate cand{k, p, {}, Plft(a2, b2, c2, d2)};
      cand.runs.assign(A.begin(), A.begin() + static_cast<std::ptrdiff_t>(m));
      cand.runs.push_back(p);
      best = std::move(cand);
    }
  }
  return std::move(*best);
}

// Drops the empty leading group pair produced by conjugating with the row
// swap, and a lone zero run.
std::vector<Integer> normalize_runs(std::vector<Integer> runs) {
  if (runs.size() >= 2 && runs[0] == 0 && runs[1] == 0) runs.erase(runs.begin(), runs.begin() + 2);
  if (runs.size() == 1 && runs[0] == 0) runs.clear();
  return runs;
}

}  // namespace

RootReport orphan_root_cf(const Plft& w) {
  if (w.zero_count() == 2) {
    // az/d and b/(cz) are orphans with a trivial expansion.
    return RootReport{w, false, PlftContinuedFraction{{}, w}, 0, 0, false, false};
  }

  RootReport report{w, false, PlftContinuedFraction{{}, w}, 0, 0, false, false};
  Plft work = w;
  if (work.c() == 0 || work.d() == 0) {
    work = work.reciprocal();
    report.reciprocal_applied = true;
  }
  if (cf_of_nonnegative(work.a(), work.c()).terms.size() <
      cf_of_nonnegative(work.b(), work.d()).terms.size()) {
    work = work.swap_columns();
    report.columns_swapped = true;
  }

  Candidate cand = best_candidate(work);
  report.p = cand.p;

  // work = W * root  =>  work * S = W * (root * S).
  Plft root = cand.root;
  if (report.columns_swapped) root = root.swap_columns();
  std::vector<Integer> runs = std::move(cand.runs);
  // S * W * S swaps the roles of L and R.
  if (report.reciprocal_applied) {
    root = root.reciprocal();
    runs.insert(runs.begin(), Integer(0));
  }
  runs = normalize_runs(std::move(runs));

  if (!root.is_orphan()) {
    throw std::logic_error("orphan_root_cf: constructed root " + to_string(root) +
                           " is not an orphan");
  }
  report.root = root;
  report.k = runs.size();
  report.inverted = report.k % 2 == 1;
  report.cf = PlftContinuedFraction{std::move(runs), report.inverted ? root.reciprocal() : root};
  if (evaluate_plft_cf(report.cf) != w) {
    throw std::logic_error("orphan_root_cf: expansion does not reproduce " + to_string(w));
  }
  return report;
}

std::optional<Word> decompose_special(const Plft& m) {
  if (m.det() != 1) return std::nullopt;

  std::vector<Integer> runs;
  if (m.c() == 0) {
    // det = ad = 1 forces m = R1^b.
    runs = {m.b()};
  } else {
    // det = 1 rules out d = 0. For M = R^{q0} L^{q1} ... X^{qn} the longer
    // of a/c, b/d is [q0..qn] and the other is [q0..q_{n-1}]; a/c is the
    // longer one exactly when n is odd.
    const auto a_forms = cf_variants(cf_of_nonnegative(m.a(), m.c()));
    const auto b_forms = cf_variants(cf_of_nonnegative(m.b(), m.d()));
    bool found = false;
    for (const auto& a_cf : a_forms) {
      for (const auto& b_cf : b_forms) {
        const auto& A = a_cf.terms;
        const auto& B = b_cf.terms;
        const bool a_longer = A.size() == B.size() + 1;
        const bool b_longer = B.size() == A.size() + 1;
        if (!a_longer && !b_longer) continue;
        const auto& longer = a_longer ? A : B;
        const auto& shorter = a_longer ? B : A;
        const bool n_odd = (longer.size() - 1) % 2 == 1;
        if (n_odd != a_longer) continue;
        if (!std::equal(shorter.begin(), shorter.end(), longer.begin())) continue;
        runs = longer;
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) {
      throw std::logic_error("decompose_special: no continued fraction pair for " + to_string(m));
    }
  }

  Word word;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const Move move = i % 2 == 0 ? Move::R : Move::L;
    for (Integer n = runs[i]; n > 0; --n) word.push_back(move);
  }
  if (apply_word(Plft::identity(), word) != m) {
    throw std::logic_error("decompose_special: decoded word does not reproduce " + to_string(m));
  }
  return word;
}

bool rootz_check(const Plft& w) {
  if (w.c() == 0 || w.d() == 0) throw std::invalid_argument("rootz_check requires c, d != 0");
  const Integer det = w.det();
  if (det != 1 && det != -1) {
    throw std::invalid_argument("rootz_check requires det = +-1, got " + det.get_str());
  }
  const Plft root = orphan_root_cf(w).root;
  return root == Plft::identity() || root == Plft::identity().reciprocal();
}

bool limit_checks(const Plft& w, const PlftContinuedFraction& cf) {
  if (w.c() == 0 || w.d() == 0) throw std::invalid_argument("limit_checks requires c, d != 0");

  const auto& qs = cf.partial_quotients;
  // The innermost term added to q_{k-1} is 1/tail; with no quotients the
  // PLFT is the tail itself.
  const Plft inner = qs.empty() ? cf.tail : cf.tail.reciprocal();

  // Folds q0 + 1/(q1 + ... + 1/(q_{k-1} + x)) over a projective point x.
  auto fold = [&](Integer num, Integer den) {
    for (std::size_t i = qs.size(); i-- > 0;) {
      num += qs[i] * den;
      if (i > 0) std::swap(num, den);
    }
    return std::pair{std::move(num), std::move(den)};
  };
  auto same_point = [](const std::pair<Integer, Integer>& x, const Integer& num,
                       const Integer& den) {
    return x.first * den == num * x.second && (x.first != 0 || x.second != 0);
  };

  const bool at_infinity = same_point(fold(inner.a(), inner.c()), w.a(), w.c());
  const bool at_zero = same_point(fold(inner.b(), inner.d()), w.b(), w.d());

  Integer g_ac, g_bd, g_inner_ac, g_inner_bd;
  mpz_gcd(g_ac.get_mpz_t(), w.a().get_mpz_t(), w.c().get_mpz_t());
  mpz_gcd(g_bd.get_mpz_t(), w.b().get_mpz_t(), w.d().get_mpz_t());
  mpz_gcd(g_inner_ac.get_mpz_t(), inner.a().get_mpz_t(), inner.c().get_mpz_t());
  mpz_gcd(g_inner_bd.get_mpz_t(), inner.b().get_mpz_t(), inner.d().get_mpz_t());

  bool reproduces = false;
  try {
    reproduces = evaluate_plft_cf(cf) == w;
  } catch (const std::invalid_argument&) {
    reproduces = false;
  }
  return at_infinity && at_zero && g_ac == g_inner_ac && g_bd == g_inner_bd && reproduces;
}

}  // namespace plft
