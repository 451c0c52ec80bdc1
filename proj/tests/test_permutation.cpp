#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "schubcalc/errors.hpp"
#include "schubcalc/permutation.hpp"

using namespace schubcalc;

namespace {
Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }
}  // namespace

TEST_CASE("canonical form trims trailing fixed points") {
  CHECK(P({2, 1, 3, 4}) == P({2, 1}));
  CHECK(P({1, 2, 3}) == Permutation::identity());
  CHECK(P({1, 2, 3}).support() == 0);
  CHECK(Permutation::simple(2) == P({1, 3, 2}));
  CHECK(P({2, 1, 3}).to_string() == "2,1");
  CHECK(Permutation{}.to_string() == "1");
}

TEST_CASE("parsing") {
  CHECK(Permutation::parse("3,1,2") == P({3, 1, 2}));
  CHECK(Permutation::parse(" 2, 1 ") == P({2, 1}));
  CHECK(Permutation::parse("1") == Permutation{});
  CHECK_THROWS_AS(Permutation::parse("1,1"), InputError);
  CHECK_THROWS_AS(Permutation::parse("0,1"), InputError);
  CHECK_THROWS_AS(Permutation::parse("-1,2"), InputError);
  CHECK_THROWS_AS(Permutation::parse("1,3"), InputError);
  CHECK_THROWS_AS(Permutation::parse("1,,2"), InputError);
  CHECK_THROWS_AS(Permutation::parse(""), InputError);
  CHECK_THROWS_AS(Permutation::parse("a,b"), InputError);
}

TEST_CASE("compose") {
  CHECK(compose(P({2, 1}), P({2, 1})) == Permutation{});
  CHECK(compose(Permutation{}, P({3, 1, 2})) == P({3, 1, 2}));
  // s1(s2(i)): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  CHECK(compose(Permutation::simple(1), Permutation::simple(2)) == P({2, 3, 1}));

  for (const auto& p : all_permutations(4)) {
    for (const auto& q : all_permutations(4)) {
      const auto r = compose(p, q);
      for (int i = 1; i <= 5; ++i) REQUIRE(r(i) == p(q(i)));
    }
  }
}

TEST_CASE("length") {
  CHECK(length(Permutation{}) == 0);
  for (int k = 1; k <= 5; ++k) CHECK(length(Permutation::simple(k)) == 1);
  CHECK(length(P({3, 2, 1})) == 3);
  for (const auto& w : all_permutations(5)) REQUIRE(length(w) == oracle::bfs_length(w, 5));
}

TEST_CASE("length changes by one under a simple transposition") {
  for (const auto& u : all_permutations(4)) {
    for (int k = 1; k <= 4; ++k) {
      const int d = length(compose(u, Permutation::simple(k))) - length(u);
      CHECK((d == 1 || d == -1));
    }
  }
}

TEST_CASE("reduced words") {
  CHECK(reduced_words(Permutation{}) == std::vector<std::vector<int>>{{}});
  CHECK(reduced_words(Permutation::simple(2)) == std::vector<std::vector<int>>{{2}});
  CHECK(reduced_words(P({3, 2, 1})) == std::vector<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});
  CHECK(reduced_words(P({3, 1, 2})) == std::vector<std::vector<int>>{{2, 1}});

  for (const auto& w : all_permutations(4)) {
    const auto words = reduced_words(w);
    CHECK(words == oracle::words_of_length(w, length(w), 4));
    for (const auto& word : words) {
      REQUIRE(static_cast<int>(word.size()) == length(w));
      REQUIRE(from_word(word) == w);
    }
  }
}

TEST_CASE("bruhat covers") {
  SUBCASE("identity in S3") {
    auto e = bruhat_covers(Permutation{}, 3);
    REQUIRE(e.size() == 2);
    CHECK(e[0].target == P({2, 1, 3}));
    CHECK(e[1].target == P({1, 3, 2}));
  }
  SUBCASE("longest element of S3") { CHECK(bruhat_covers(P({3, 2, 1}), 3).empty()); }
  SUBCASE("s1 in S3") {
    auto e = bruhat_covers(P({2, 1, 3}), 3);
    REQUIRE(e.size() == 2);
    CHECK(e[0].t == Transposition{1, 3});
    CHECK(e[0].target == P({3, 1, 2}));
    CHECK(e[1].t == Transposition{2, 3});
    CHECK(e[1].target == P({2, 3, 1}));
  }
  SUBCASE("support bound too small") {
    CHECK_THROWS_AS(bruhat_covers(P({3, 2, 1}), 2), InputError);
  }
  SUBCASE("matches the length definition on S4 and S5") {
    for (int n : {4, 5}) {
      for (const auto& u : all_permutations(n)) {
        std::vector<std::pair<int, int>> got;
        for (const auto& e : bruhat_covers(u, n)) {
          REQUIRE(length(e.target) == length(u) + 1);
          REQUIRE(e.target == u.swap_positions(e.t.a, e.t.b));
          REQUIRE(e.label_lo() == e.t.a);
          REQUIRE(e.label_hi() == e.t.b - 1);
          got.emplace_back(e.t.a, e.t.b);
        }
        REQUIRE(got == oracle::covers_by_length(u, n));
      }
    }
  }
}

TEST_CASE("k-bruhat covers") {
  auto targets = [](const std::vector<CoverEdge>& edges) {
    std::vector<Permutation> t;
    for (const auto& e : edges) t.push_back(e.target);
    return t;
  };
  CHECK(targets(k_bruhat_covers(Permutation{}, 1, 3)) == std::vector<Permutation>{P({2, 1})});
  CHECK(targets(k_bruhat_covers(P({2, 1, 3}), 1, 3)) == std::vector<Permutation>{P({3, 1, 2})});
  CHECK(targets(k_bruhat_covers(P({2, 1, 3}), 2, 3)) ==
        std::vector<Permutation>{P({3, 1, 2}), P({2, 3, 1})});

  for (const auto& u : all_permutations(4)) {
    const auto all = bruhat_covers(u, 4);
    for (int k = 1; k <= 3; ++k) {
      std::vector<CoverEdge> filtered;
      for (const auto& e : all) {
        if (e.t.a <= k && k < e.t.b) filtered.push_back(e);
      }
      REQUIRE(k_bruhat_covers(u, k, 4) == filtered);
    }
  }
}

TEST_CASE("bruhat order") {
  for (const auto& w : all_permutations(3)) CHECK(bruhat_leq(Permutation{}, w, 3));
  CHECK_FALSE(bruhat_leq(P({3, 1, 2}), P({2, 3, 1}), 3));
  CHECK(bruhat_leq(P({2, 1, 3}), P({3, 2, 1}), 3));
  CHECK_THROWS_AS(bruhat_leq(P({2, 1}), P({3, 2, 1}), 2), InputError);

  const auto perms = all_permutations(4);
  for (const auto& u : perms) {
    for (const auto& w : perms) {
      REQUIRE(bruhat_leq(u, w, 4) == oracle::leq_by_subword(u, w, 4));
    }
  }
}

TEST_CASE("permutations of a given length") {
  // Mahonian numbers for n = 4: 1 3 5 6 5 3 1.
  const std::vector<std::size_t> mahonian{1, 3, 5, 6, 5, 3, 1};
  for (int len = 0; len <= 6; ++len) {
    auto perms = permutations_of_length(len, 4);
    CHECK(perms.size() == mahonian[len]);
    CHECK(std::is_sorted(perms.begin(), perms.end()));
    for (const auto& w : perms) CHECK(length(w) == len);
  }
}

TEST_CASE("transposition between") {
  CHECK(transposition_between(P({2, 1}), P({3, 1, 2})) == Transposition{1, 3});
  CHECK_FALSE(transposition_between(P({2, 1}), P({2, 1})).has_value());
  CHECK_FALSE(transposition_between(Permutation{}, P({2, 3, 1})).has_value());
}
