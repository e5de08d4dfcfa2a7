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

#include "plft/plft.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace plft {

char to_char(Move move) { return move == Move::L ? 'L' : 'R'; }

std::string to_string(const Word& word) {
  std::string out;
  out.reserve(word.size());
  for (Move m : word) out.push_back(to_char(m));
  return out;
}

Word parse_word(std::string_view text) {
  Word word;
  for (char ch : text) {
    if (ch == 'L' || ch == 'l') {
      word.push_back(Move::L);
    } else if (ch == 'R' || ch == 'r') {
      word.push_back(Move::R);
    } else if (ch != ' ' && ch != ',' && ch != '\t') {
      throw std::invalid_argument("word may only contain L and R");
    }
  }
  return word;
}

Plft::Plft(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ < 0 || b_ < 0 || c_ < 0 || d_ < 0) {
    throw std::invalid_argument("PLFT coefficients must be nonnegative");
  }
  if (a_ * d_ == b_ * c_) {
    throw std::invalid_argument("PLFT determinant ad - bc must be nonzero");
  }
}

Plft::Plft(Unchecked, Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

Plft Plft::identity() { return Plft(Unchecked{}, 1, 0, 0, 1); }

Integer Plft::det() const { return a_ * d_ - b_ * c_; }

bool Plft::is_orphan() const {
  return (a_ < c_ && b_ > d_) || (a_ > c_ && b_ < d_);
}

Plft Plft::left_child() const { return Plft(Unchecked{}, a_, b_, a_ + c_, b_ + d_); }

Plft Plft::right_child() const { return Plft(Unchecked{}, a_ + c_, b_ + d_, c_, d_); }

Plft Plft::child(Move move) const {
  return move == Move::L ? left_child() : right_child();
}

Plft Plft::reciprocal() const { return Plft(Unchecked{}, c_, d_, a_, b_); }

Plft Plft::swap_columns() const { return Plft(Unchecked{}, b_, a_, d_, c_); }

int Plft::zero_count() const {
  return static_cast<int>(a_ == 0) + static_cast<int>(b_ == 0) + static_cast<int>(c_ == 0) +
         static_cast<int>(d_ == 0);
}

Plft operator*(const Plft& lhs, const Plft& rhs) {
  return Plft(Plft::Unchecked{}, lhs.a_ * rhs.a_ + lhs.b_ * rhs.c_,
              lhs.a_ * rhs.b_ + lhs.b_ * rhs.d_, lhs.c_ * rhs.a_ + lhs.d_ * rhs.c_,
              lhs.c_ * rhs.b_ + lhs.d_ * rhs.d_);
}

bool operator==(const Plft& lhs, const Plft& rhs) {
  return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_ && lhs.d_ == rhs.d_;
}

Plft apply_word(const Plft& root, const Word& word) {
  Plft w = root;
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = w.child(*it);
  return w;
}

std::optional<ParentStep> parent(const Plft& w) {
  if (w.a() >= w.c() && w.b() >= w.d()) {
    return ParentStep{Plft(w.a() - w.c(), w.b() - w.d(), w.c(), w.d()), Move::R};
  }
  if (w.c() >= w.a() && w.d() >= w.b()) {
    return ParentStep{Plft(w.a(), w.b(), w.c() - w.a(), w.d() - w.b()), Move::L};
  }
  return std::nullopt;
}

RootPath root_by_iteration(const Plft& w) {
  Plft current = w;
  Word word;
  while (auto step = parent(current)) {
    word.push_back(step->move);
    current = std::move(step->parent);
  }
  return RootPath{std::move(current), std::move(word)};
}

Plft parse_plft(std::string_view text) {
  Integer coeffs[4];
  std::size_t index = 0;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    if (index == 4) throw std::invalid_argument("PLFT needs exactly four coefficients");
    coeffs[index++] = parse_integer(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (index != 4) throw std::invalid_argument("PLFT needs exactly four coefficients");
  return Plft(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
}

std::string to_string(const Plft& w) {
  return w.a().get_str() + "," + w.b().get_str() + "," + w.c().get_str() + "," +
         w.d().get_str();
}

namespace {

// "2z+1", "z", "3", "z+4"
std::string linear_term(const Integer& slope, const Integer& offset) {
  std::string out;
  if (slope != 0) {
    if (slope != 1) out += slope.get_str();
    out += 'z';
  }
  if (offset != 0) {
    if (!out.empty()) out += '+';
    out += offset.get_str();
  }
  return out;
}

std::string wrapped(const std::string& term) {
  return term.find('+') == std::string::npos ? term : "(" + term + ")";
}

}  // namespace

std::string to_display(const Plft& w) {
  const std::string num = linear_term(w.a(), w.b());
  const std::string den = linear_term(w.c(), w.d());
  if (den == "1") return num;
  return wrapped(num) + "/" + wrapped(den);
}

}  // namespace plft
