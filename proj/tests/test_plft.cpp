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

#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "plft/plft.hpp"
#include "support.hpp"

using namespace plft;
using plft::testing::Rng;

namespace {

Plft P(long a, long b, long c, long d) { return Plft(Integer(a), Integer(b), Integer(c), Integer(d)); }

Integer gcd(const Integer& x, const Integer& y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

}  // namespace

TEST_CASE("construction rejects singular and negative matrices") {
  CHECK_THROWS_AS(P(1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(P(2, 4, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(P(-1, 0, 0, 1), std::invalid_argument);
  CHECK_NOTHROW(P(0, 1, 1, 0));
  CHECK_THROWS_AS(parse_plft("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_plft("1,2,x,4"), std::invalid_argument);
  CHECK(parse_plft(" 7, 8 ,4,5 ") == P(7, 8, 4, 5));
}

TEST_CASE("determinant") {
  CHECK(det(Plft::identity()) == 1);
  CHECK(det(P(7, 8, 4, 5)) == 3);
  CHECK(det(P(1, 2, 2, 1)) == -3);
}

TEST_CASE("orphan predicate") {
  CHECK(is_orphan(P(1, 2, 2, 1)));
  CHECK_FALSE(is_orphan(P(1, 0, 4, 1)));
  CHECK(is_orphan(Plft::identity()));
  CHECK_FALSE(is_orphan(P(1, 0, 1, 1)));
}

TEST_CASE("children") {
  CHECK(left_child(Plft::identity()) == P(1, 0, 1, 1));
  CHECK(right_child(P(2, 1, 1, 2)) == P(3, 3, 1, 2));
  CHECK(right_child(Plft::identity()) == P(1, 1, 0, 1));
  CHECK(Plft::identity().child(Move::L) == P(1, 0, 1, 1));
}

TEST_CASE("apply_word") {
  CHECK(apply_word(P(2, 1, 1, 2), parse_word("RLR")) == P(7, 8, 4, 5));
  CHECK(apply_word(Plft::identity(), {}) == Plft::identity());
  CHECK(apply_word(Plft::identity(), parse_word("LL")) == P(1, 0, 2, 1));
  CHECK_THROWS_AS(parse_word("RLX"), std::invalid_argument);
}

TEST_CASE("parent") {
  const auto up = parent(P(7, 8, 4, 5));
  REQUIRE(up);
  CHECK(up->parent == P(3, 3, 4, 5));
  CHECK(up->move == Move::R);
  CHECK_FALSE(parent(P(1, 2, 2, 1)));
  const auto z = parent(P(1, 1, 0, 1));
  REQUIRE(z);
  CHECK(z->parent == Plft::identity());
  CHECK(z->move == Move::R);
  // a = c is allowed to produce a zero coefficient
  const auto edge = parent(P(1, 2, 1, 1));
  REQUIRE(edge);
  CHECK(edge->parent == P(0, 1, 1, 1));
  CHECK(edge->move == Move::R);
}

TEST_CASE("root by iteration") {
  auto r = root_by_iteration(P(7, 8, 4, 5));
  CHECK(r.root == P(2, 1, 1, 2));
  CHECK(to_string(r.word) == "RLR");
  r = root_by_iteration(P(1, 2, 2, 1));
  CHECK(r.root == P(1, 2, 2, 1));
  CHECK(r.word.empty());
  r = root_by_iteration(P(43, 10, 30, 7));
  CHECK(r.root == Plft::identity());
  CHECK(to_string(r.word) == "RLLRRRLLLL");
  // words read as compositions, so the last letter is the move at the root
  CHECK(to_string(root_by_iteration(P(8, 7, 3, 3)).word) == "RRL");
  CHECK(to_string(root_by_iteration(P(3, 3, 4, 5)).word) == "LR");
  CHECK(apply_word(P(2, 1, 1, 2), parse_word("RRL")) == P(8, 7, 3, 3));
}

TEST_CASE("text forms") {
  CHECK(to_string(P(7, 8, 4, 5)) == "7,8,4,5");
  CHECK(to_display(P(2, 1, 1, 2)) == "(2z+1)/(z+2)");
  CHECK(to_display(Plft::identity()) == "z");
  CHECK(to_display(P(0, 1, 1, 0)) == "1/z");
  CHECK(to_display(P(2, 0, 0, 3)) == "2z/3");
}

TEST_CASE("coefficients grow past 64 bits without loss") {
  Word word(200, Move::R);
  for (std::size_t i = 0; i < word.size(); i += 2) word[i] = Move::L;
  const Plft w = apply_word(P(2, 1, 1, 2), word);
  CHECK(w.a().get_str().size() > 30);
  const RootPath back = root_by_iteration(w);
  CHECK(back.root == P(2, 1, 1, 2));
  CHECK(back.word == word);
}

TEST_CASE("property: tree structure") {
  Rng rng(0x5eed0001);
  for (int trial = 0; trial < 2000; ++trial) {
    const Plft w = apply_word(testing::random_orphan(rng), testing::random_word(rng, 30));
    for (Move m : {Move::L, Move::R}) {
      const Plft child = w.child(m);
      const auto up = parent(child);
      REQUIRE(up);
      CHECK(up->parent == w);
      CHECK(up->move == m);
      CHECK(det(child) == det(w));
      CHECK(gcd(child.a(), child.c()) == gcd(w.a(), w.c()));
      CHECK(gcd(child.b(), child.d()) == gcd(w.b(), w.d()));
      CHECK_FALSE(is_orphan(child));
    }
    const auto up = parent(w);
    CHECK(is_orphan(w) == !up.has_value());
    if (up) CHECK(up->parent.child(up->move) == w);
  }
}

TEST_CASE("property: root path replays to the input") {
  Rng rng(0x5eed0002);
  for (int trial = 0; trial < 2000; ++trial) {
    const Plft root = testing::random_orphan(rng);
    const Word word = testing::random_word(rng, 50);
    const Plft w = apply_word(root, word);
    const RootPath path = root_by_iteration(w);
    CHECK(path.root == root);
    CHECK(path.word == word);
    CHECK(apply_word(path.root, path.word) == w);
  }
}

TEST_CASE("property: parent status is exclusive on arbitrary matrices") {
  Rng rng(0x5eed0003);
  for (int trial = 0; trial < 5000; ++trial) {
    const Plft w = testing::random_plft(rng, 20);
    const bool r_parent = w.a() >= w.c() && w.b() >= w.d();
    const bool l_parent = w.c() >= w.a() && w.d() >= w.b();
    CHECK_FALSE((r_parent && l_parent));
    CHECK(is_orphan(w) == !(r_parent || l_parent));
  }
}
