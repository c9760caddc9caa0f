#include <doctest.h>

#include <algorithm>
#include <set>

#include "iceschur/combinatorics.hpp"
#include "iceschur/lattice.hpp"

using namespace iceschur;

namespace {

GTPattern gt(std::vector<std::vector<int>> rows) { return GTPattern{std::move(rows)}; }

bool contains(const std::vector<GTPattern>& v, const GTPattern& g) {
  return std::find(v.begin(), v.end(), g) != v.end();
}

// Brute force: every filling of the shape with entries 1..n, kept if semistandard.
long brute_ssyt_count(const Partition& lambda, int n) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  }
  Tableau t;
  for (int r = 0; r < lambda.length(); ++r) t.rows.emplace_back(lambda[r], 1);
  long count = 0;
  for (;;) {
    if (is_semistandard(t)) ++count;
    std::size_t k = 0;
    for (; k < cells.size(); ++k) {
      int& e = t.rows[cells[k].first][cells[k].second];
      if (e < n) {
        ++e;
        break;
      }
      e = 1;
    }
    if (k == cells.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("partition basics") {
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition::parse("3,1") == Partition({3, 1}));
  CHECK(Partition::parse("3,1,0") == Partition({3, 1}));
  CHECK_THROWS_AS(Partition::parse("1,3"), Error);
  CHECK_THROWS_AS(Partition::parse("a"), Error);
  CHECK_THROWS_AS(Partition({1, -1}), Error);
  CHECK(Partition::delta(3).padded(3) == std::vector<int>{2, 1, 0});
  CHECK(Partition::rho(3).padded(3) == std::vector<int>{3, 2, 1});
  CHECK(Partition({4, 2}).size() == 6);
  CHECK(Partition({4, 2}).padded(3) == std::vector<int>{4, 2, 0});
  CHECK_THROWS_AS(Partition({1, 1, 1}).padded(2), Error);
  CHECK(Partition({2, 1}).contained_in(Partition({2, 2})));
  CHECK_FALSE(Partition({3}).contained_in(Partition({2, 2})));
  CHECK(partitions_in_box(2, 2).size() == 6);
  CHECK(partitions_in_box(3, 3).size() == 20);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition({1})) == Partition({1}));
  CHECK(conjugate(Partition({2, 1})) == Partition({2, 1}));
  CHECK(conjugate(Partition({2})) == Partition({1, 1}));
  CHECK(conjugate(Partition()) == Partition());
  for (const Partition& p : partitions_in_box(4, 4)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("semistandard tableaux") {
  CHECK(enumerate_ssyt(Partition({1}), 2).size() == 2);
  CHECK(enumerate_ssyt(Partition({1, 1}), 2).size() == 1);
  CHECK(enumerate_ssyt(Partition(), 3).size() == 1);
  CHECK_THROWS_AS(enumerate_ssyt(Partition({1, 1, 1}), 2), Error);

  const Tableau ex{{{1, 1, 1, 3}, {2, 2}}};
  const auto all = enumerate_ssyt(Partition({4, 2}), 3);
  CHECK(std::find(all.begin(), all.end(), ex) != all.end());
  for (const Tableau& t : all) {
    CHECK(is_semistandard(t));
    CHECK(t.shape() == Partition({4, 2}));
  }

  for (int n = 1; n <= 3; ++n) {
    for (const Partition& lam : partitions_in_box(n, 3)) {
      CHECK(static_cast<long>(enumerate_ssyt(lam, n).size()) == brute_ssyt_count(lam, n));
    }
  }
}

TEST_CASE("t_star") {
  CHECK(t_star(Tableau{{{1, 1, 1, 3}, {2, 2}}}) ==
        std::vector<std::vector<int>>{{1, 2, 3, 6}, {1, 2}});
  CHECK(t_star(Tableau{{{1}}}) == std::vector<std::vector<int>>{{1}});
  CHECK(t_star(Tableau{{{1}, {2}}}) == std::vector<std::vector<int>>{{1}, {1}});
}

TEST_CASE("strict GT patterns") {
  const auto two = enumerate_strict_gt({2, 1});
  CHECK(two.size() == 2);
  CHECK(contains(two, gt({{2, 1}, {1}})));
  CHECK(contains(two, gt({{2, 1}, {2}})));
  CHECK(enumerate_strict_gt({1}).size() == 1);

  const auto big = enumerate_strict_gt(shifted_top_row(Partition({5, 4, 1}), 3));
  CHECK(shifted_top_row(Partition({5, 4, 1}), 3) == std::vector<int>{8, 6, 2});
  CHECK(contains(big, gt({{8, 6, 2}, {7, 4}, {4}})));
  for (const GTPattern& g : big) CHECK(is_strict_gt(g));
  CHECK_FALSE(is_strict_gt(gt({{3, 1}, {3}, {}})));
}

TEST_CASE("special GT patterns biject with SSYT") {
  // The states with nonzero weight at t = 0 map onto the tableaux of shape lambda.
  for (int n = 1; n <= 3; ++n) {
    for (const Partition& lam : partitions_in_box(n, 3)) {
      const LatticeSystem s = build_system(lam, n, WeightTable::gamma(BigRational(0)));
      std::vector<std::vector<std::vector<int>>> images, want;
      for (const LatticeState& st : enumerate_states(s)) {
        if (!state_weight(s, st).is_zero()) images.push_back(gt_to_tableau(state_pattern(s, st)).rows);
      }
      for (const Tableau& t : enumerate_ssyt(lam, n)) want.push_back(t.rows);
      std::sort(images.begin(), images.end());
      std::sort(want.begin(), want.end());
      CHECK(images == want);
    }
  }
}

TEST_CASE("staircases") {
  const Partition lam({5, 4, 1});
  const Staircase st = gt_to_staircase(gt({{8, 6, 2}, {7, 4}, {4}}), lam, 3);
  REQUIRE(st.columns.size() == 4);
  CHECK(st.columns[3] == std::vector<int>{1, 3, 4, 5, 7});
  CHECK(st.columns[2] == std::vector<int>{1, 2, 3, 5, 6, 8});
  CHECK(st.columns[1] == std::vector<int>{1, 2, 3, 5, 6, 7, 8});
  CHECK(st.columns[0] == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(is_valid_staircase(st, lam, 3));

  const Staircase tiny = gt_to_staircase(gt({{1}}), Partition(), 1);
  CHECK(tiny.columns[1].empty());
  CHECK(tiny.columns[0] == std::vector<int>{1});

  CHECK_THROWS_AS(gt_to_staircase(gt({{7, 6, 2}, {7, 4}, {4}}), lam, 3), Error);
  CHECK_THROWS_AS(staircase_to_gt(Staircase{{{1}}}, lam, 3), Error);
}

TEST_CASE("staircase round trip") {
  for (const Partition& lam :
       {Partition(), Partition({1}), Partition({2, 1}), Partition({4, 2, 1}), Partition({3, 3, 3})}) {
    for (int n = std::max(1, lam.length()); n <= 3; ++n) {
      std::set<std::vector<std::vector<int>>> seen;
      for (const GTPattern& g : enumerate_strict_gt(shifted_top_row(lam, n))) {
        const Staircase st = gt_to_staircase(g, lam, n);
        CHECK(is_valid_staircase(st, lam, n));
        CHECK(staircase_to_gt(st, lam, n) == g);
        seen.insert(st.columns);
      }
      CHECK(seen.size() == enumerate_strict_gt(shifted_top_row(lam, n)).size());
    }
  }
}

TEST_CASE("gt_to_tableau") {
  CHECK(gt_to_tableau(gt({{7, 4, 1}, {5, 3}, {4}})) == Tableau{{{1, 1, 1, 3}, {2, 2}}});
  CHECK(gt_to_tableau(gt({{1}})) == Tableau{});
  CHECK(gt_to_tableau(gt({{3, 1}, {1}})) == Tableau{{{2}}});
  CHECK_THROWS_AS(gt_to_tableau(gt({{2, 2}, {1}})), Error);
}

TEST_CASE("hat") {
  CHECK(hat(Partition(), 1, 1) == Partition({1}));
  CHECK(hat(Partition({1}), 1, 1) == Partition());
  const Partition h = hat(Partition({2, 1}), 2, 3);
  CHECK(Partition({2, 1}).size() + h.size() == 6);
  CHECK_THROWS_AS(hat(Partition({4}), 1, 3), Error);
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      for (const Partition& lam : partitions_in_box(n, m)) {
        const Partition lh = hat(lam, n, m);
        CHECK(lam.size() + lh.size() == n * m);
        CHECK(hat(lh, m, n) == lam);
      }
    }
  }
}

TEST_CASE("permutations") {
  CHECK(grassmannian_perm(Partition(), 2, 2) == Permutation::identity(4));
  CHECK(grassmannian_perm(Partition({1}), 1, 1) == Permutation({2, 1}));
  CHECK(grassmannian_perm(Partition({3, 1}), 2, 3).descents() == std::vector<int>{2});
  for (const Partition& lam : partitions_in_box(2, 3)) {
    const Permutation w = grassmannian_perm(lam, 2, 3);
    CHECK(w.length() == lam.size());
    if (lam.size() > 0) CHECK(w.descents() == std::vector<int>{2});
  }

  CHECK(reduced_word(Permutation::identity(3)).empty());
  CHECK(reduced_word(Permutation({2, 1})) == std::vector<int>{1});
  const Permutation w0 = Permutation::longest(3);
  CHECK(reduced_word(w0).size() == 3);
  CHECK(Permutation::from_word(reduced_word(w0), 3) == w0);
  CHECK(Permutation::simple(1, 3) * Permutation::simple(1, 3) == Permutation::identity(3));
  CHECK(w0.inverse() == w0);
  CHECK_THROWS_AS(Permutation({1, 1}), Error);
}

TEST_CASE("reduced words over S4") {
  std::vector<int> im = {1, 2, 3, 4};
  int count = 0;
  do {
    const Permutation w(im);
    const std::vector<int> word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == w.length());
    CHECK(Permutation::from_word(word, 4) == w);
    ++count;
  } while (std::next_permutation(im.begin(), im.end()));
  CHECK(count == 24);
}

TEST_CASE("enumeration orders are lexicographic") {
  for (const Partition& lam : partitions_in_box(3, 3)) {
    std::vector<std::vector<int>> words;
    for (const Tableau& t : enumerate_ssyt(lam, 3)) {
      std::vector<int> w;
      for (const auto& row : t.rows) w.insert(w.end(), row.begin(), row.end());
      words.push_back(std::move(w));
    }
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());

    std::vector<std::vector<std::vector<int>>> gts;
    for (const GTPattern& g : enumerate_strict_gt(shifted_top_row(lam, 3))) gts.push_back(g.rows);
    CHECK(std::is_sorted(gts.begin(), gts.end()));
    CHECK(std::adjacent_find(gts.begin(), gts.end()) == gts.end());
  }
}
