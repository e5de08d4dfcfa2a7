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

#include "plft/continued_fraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace plft {

namespace {

// Odd-length representation: the one reachable from [1] by the child rules.
ContinuedFraction tree_representation(const Rational& r) {
  ContinuedFraction cf = cf_of_rational(r);
  if (cf.terms.size() % 2 == 0) cf = cf_variants(cf).back();
  return cf;
}

std::vector<Integer> split_terms(std::string_view text) {
  std::vector<Integer> terms;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) terms.push_back(parse_integer(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ';') {
      flush();
    } else if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') {
      token.push_back(ch);
    }
  }
  flush();
  return terms;
}

std::string_view strip_brackets(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("continued fraction must be enclosed in [ ]");
  }
  return text.substr(1, text.size() - 2);
}

void validate_partial_quotients(const std::vector<Integer>& qs) {
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i] < 0 || (i > 0 && qs[i] < 1)) {
      throw std::invalid_argument("partial quotients must satisfy q0 >= 0 and qi >= 1");
    }
  }
}

}  // namespace

void validate_terms(const std::vector<Integer>& terms) {
  if (terms.empty()) throw std::invalid_argument("continued fraction has no terms");
  validate_partial_quotients(terms);
}

Rational ContinuedFraction::value() const {
  validate_terms(terms);
  auto [num, den] = projective_value(terms);
  return make_rational(num, den);
}

std::pair<Integer, Integer> projective_value(const std::vector<Integer>& terms) {
  Integer num = 1;
  Integer den = 0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    Integer next = *it * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  return {std::move(num), std::move(den)};
}

ContinuedFraction cf_of_nonnegative(const Integer& num, const Integer& den) {
  if (den <= 0 || num < 0) {
    throw std::invalid_argument("continued fraction needs num >= 0 and den > 0");
  }
  ContinuedFraction cf;
  Integer n = num;
  Integer d = den;
  while (d != 0) {
    Integer q = floor_quotient(n, d);
    Integer r = n - q * d;
    cf.terms.push_back(std::move(q));
    n = std::move(d);
    d = std::move(r);
  }
  return cf;
}

ContinuedFraction cf_of_rational(const Rational& r) {
  if (r <= 0) throw std::invalid_argument("continued fraction needs a positive rational");
  return cf_of_nonnegative(r.get_num(), r.get_den());
}

std::vector<ContinuedFraction> cf_variants(const ContinuedFraction& cf) {
  validate_terms(cf.terms);
  std::vector<ContinuedFraction> out{cf};
  const auto& t = cf.terms;
  if (t.size() == 1 && t.front() == 0) return out;

  ContinuedFraction other;
  if (t.back() > 1 || t.size() == 1) {
    other.terms.assign(t.begin(), t.end() - 1);
    other.terms.push_back(t.back() - 1);
    other.terms.push_back(1);
  } else {
    other.terms.assign(t.begin(), t.end() - 2);
    other.terms.push_back(t[t.size() - 2] + 1);
  }
  out.push_back(std::move(other));
  return out;
}

PlftContinuedFraction plft_cf_expand(const Plft& w) {
  if (w.is_orphan()) return PlftContinuedFraction{{}, w};

  Integer a = w.a(), b = w.b(), c = w.c(), d = w.d();
  std::vector<Integer> quotients;
  // Even steps peel R^q off the left (subtract q * bottom row from the top
  // row); odd steps peel L^q (subtract q * top row from the bottom row).
  bool peel_right = true;
  while (true) {
    const Integer& num_a = peel_right ? a : c;
    const Integer& num_b = peel_right ? b : d;
    const Integer& den_a = peel_right ? c : a;
    const Integer& den_b = peel_right ? d : b;
    Integer q;
    if (den_a == 0) {
      q = floor_quotient(num_b, den_b);
    } else if (den_b == 0) {
      q = floor_quotient(num_a, den_a);
    } else {
      q = std::min(floor_quotient(num_a, den_a), floor_quotient(num_b, den_b));
    }
    if (q == 0 && !quotients.empty()) {
      throw std::logic_error("plft_cf_expand: zero partial quotient after the first");
    }
    if (peel_right) {
      a -= q * c;
      b -= q * d;
    } else {
      c -= q * a;
      d -= q * b;
    }
    quotients.push_back(std::move(q));
    peel_right = !peel_right;

    Plft remainder(a, b, c, d);
    if (remainder.is_orphan()) {
      Plft tail = quotients.size() % 2 == 0 ? remainder : remainder.reciprocal();
      return PlftContinuedFraction{std::move(quotients), std::move(tail)};
    }
  }
}

Plft evaluate_plft_cf(const PlftContinuedFraction& cf) {
  validate_partial_quotients(cf.partial_quotients);
  if (!cf.tail.is_orphan()) {
    throw std::invalid_argument("continued fraction tail must be an orphan");
  }
  const auto& qs = cf.partial_quotients;
  Plft m = root_from_expansion(cf);
  for (std::size_t i = qs.size(); i-- > 0;) {
    const Integer& q = qs[i];
    if (i % 2 == 0) {
      m = Plft(m.a() + q * m.c(), m.b() + q * m.d(), m.c(), m.d());
    } else {
      m = Plft(m.a(), m.b(), m.c() + q * m.a(), m.d() + q * m.b());
    }
  }
  return m;
}

Plft root_from_expansion(const PlftContinuedFraction& cf) {
  return cf.partial_quotients.size() % 2 == 0 ? cf.tail : cf.tail.reciprocal();
}

PlftContinuedFraction lr_on_cf(const PlftContinuedFraction& cf, Move move) {
  PlftContinuedFraction out = cf;
  auto& qs = out.partial_quotients;
  // [0 | t] is the orphan 1/t written with one quotient.
  if (qs.size() == 1 && qs.front() == 0) {
    qs.clear();
    out.tail = out.tail.reciprocal();
  }
  if (qs.empty()) {
    if (move == Move::R) {
      qs.push_back(1);
      out.tail = out.tail.reciprocal();
    } else {
      qs = {0, 1};
    }
    return out;
  }
  if (move == Move::R) {
    qs.front() += 1;
  } else if (qs.front() == 0) {
    qs[1] += 1;
  } else {
    qs.insert(qs.begin(), {Integer(0), Integer(1)});
  }
  return out;
}

bool is_descendant_rational(const Rational& ancestor, const Rational& target) {
  if (ancestor <= 0 || target <= 0) {
    throw std::invalid_argument("descendant test needs positive rationals");
  }
  if (ancestor == target) return false;

  const auto q = tree_representation(ancestor).terms;
  const auto p = tree_representation(target).terms;
  const std::size_t r = q.size() - 1;
  const std::size_t s = p.size() - 1;
  if (s < r || (s - r) % 2 != 0) return false;
  const std::size_t shift = s - r;
  for (std::size_t i = 2; i <= r; ++i) {
    if (p[shift + i] != q[i]) return false;
  }
  if (q[0] != 0) {
    if (p[shift] < q[0]) return false;
    return r == 0 || p[shift + 1] == q[1];
  }
  return p[shift + 1] >= q[1];
}

std::vector<Rational> ancestors_of_rational(const Rational& w) {
  if (w <= 0) throw std::invalid_argument("ancestors need a positive rational");
  std::vector<Rational> chain;
  Integer num = w.get_num();
  Integer den = w.get_den();
  while (num != den) {
    if (num > den) {
      num -= den;
    } else {
      den -= num;
    }
    chain.push_back(make_rational(num, den));
  }
  return chain;
}

std::string to_string(const ContinuedFraction& cf) {
  std::string out = "[";
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    if (i == 1) out += ';';
    if (i > 1) out += ',';
    out += cf.terms[i].get_str();
  }
  return out + "]";
}

std::string to_string(const PlftContinuedFraction& cf) {
  std::string out = "[";
  const auto& qs = cf.partial_quotients;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    out += qs[i].get_str();
    out += i == 0 ? ';' : ',';
  }
  return out + "| " + to_string(cf.tail) + "]";
}

ContinuedFraction parse_continued_fraction(std::string_view text) {
  ContinuedFraction cf{split_terms(strip_brackets(text))};
  validate_terms(cf.terms);
  return cf;
}

PlftContinuedFraction parse_plft_continued_fraction(std::string_view text) {
  const std::string_view body = strip_brackets(text);
  const auto bar = body.find('|');
  if (bar == std::string_view::npos) {
    throw std::invalid_argument("PLFT continued fraction needs a '|' before the tail");
  }
  auto quotients = split_terms(body.substr(0, bar));
  validate_partial_quotients(quotients);
  Plft tail = parse_plft(body.substr(bar + 1));
  if (!tail.is_orphan()) {
    throw std::invalid_argument("continued fraction tail must be an orphan");
  }
  return PlftContinuedFraction{std::move(quotients), std::move(tail)};
}

}  // namespace plft
