#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "lltlab/diagrams.hpp"

using namespace llt;

namespace {

long long catalan_oracle(int n) {
  // C(n) = binom(2n, n) / (n+1)
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// Transpose through the staircase picture: the shaded shape of a^T is the
// conjugate of the shaded shape of a.  Independent of the edge-relabel route
// used by the library.
AreaSequence transpose_oracle(const AreaSequence& a) {
  return area_from_staircase(conjugate(staircase_partition(a)), a.n());
}

std::multiset<int> entries(const AreaSequence& a) { return {a.a.begin(), a.a.end()}; }

}  // namespace

TEST_CASE("area sequence validation") {
  CHECK_THROWS_AS(AreaSequence({0, 2}), Error);
  CHECK_THROWS_AS(AreaSequence({1}), Error);
  CHECK_THROWS_AS(AreaSequence({0, 0, 2}), Error);
  CHECK(AreaSequence({0, 1, 2, 3, 2, 2}).area_sum() == 10);
  CHECK(area_from_string("0,1,2,3,2,2").a == std::vector<int>{0, 1, 2, 3, 2, 2});
  CHECK_THROWS_AS(area_from_string("0,x"), Error);
}

TEST_CASE("enumeration is Catalan") {
  const auto seqs3 = enumerate_area_sequences(3);
  REQUIRE(seqs3.size() == 5);
  std::vector<std::vector<int>> expect = {
      {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}};
  std::vector<std::vector<int>> got;
  for (const auto& s : seqs3) got.push_back(s.a);
  std::sort(got.begin(), got.end());
  CHECK(got == expect);

  CHECK(enumerate_area_sequences(6).size() == 132);
  CHECK(enumerate_area_sequences(0).size() == 1);
  for (int n = 0; n <= 8; ++n)
    CHECK(static_cast<long long>(enumerate_area_sequences(n).size()) == catalan_oracle(n));
}

TEST_CASE("edge lists") {
  const AreaSequence a({0, 1, 2, 2, 2, 2});
  const std::vector<Edge> expect = {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4},
                                    {3, 5}, {4, 5}, {4, 6}, {5, 6}};
  CHECK(edges_of(a) == expect);

  const AreaSequence b({0, 1, 2, 3, 2, 2});
  const auto eb = edges_of(b);
  CHECK(eb.size() == 10);
  for (Edge e : {Edge{1, 4}, Edge{2, 4}, Edge{3, 4}})
    CHECK(std::find(eb.begin(), eb.end(), e) != eb.end());

  CHECK(edges_of(AreaSequence({0})).empty());
}

TEST_CASE("transpose") {
  CHECK(transpose(AreaSequence({0, 1, 1})).a == std::vector<int>{0, 1, 1});
  CHECK(transpose(AreaSequence({0, 0, 1})).a == std::vector<int>{0, 1, 0});
  for (int n = 0; n <= 8; ++n) {
    for (const auto& a : enumerate_area_sequences(n)) {
      const AreaSequence t = transpose(a);
      CHECK(t == transpose_oracle(a));
      CHECK(transpose(t) == a);
      CHECK(entries(a) == entries(t));  // row/column area rearrangement
      // reverse-relabeled edge set agrees
      std::vector<Edge> relabeled;
      for (const auto& [u, v] : edges_of(a)) relabeled.emplace_back(n + 1 - v, n + 1 - u);
      std::sort(relabeled.begin(), relabeled.end());
      auto te = edges_of(t);
      std::sort(te.begin(), te.end());
      CHECK(te == relabeled);
    }
  }
}

TEST_CASE("outer corners") {
  const StripDiagram d(AreaSequence({0, 1, 2, 3, 2, 2}));
  CHECK(outer_corners(d) == std::vector<Edge>{{2, 5}, {3, 6}});

  const StripDiagram complete(family(Family::Complete, {5}));
  CHECK(outer_corners(complete).empty());

  CHECK(outer_corners(StripDiagram(AreaSequence({0, 0}))) == std::vector<Edge>{{1, 2}});

  // marking a corner strict removes it from the list
  const StripDiagram marked(AreaSequence({0, 1, 2, 3, 2, 2}), {{2, 5}});
  CHECK(outer_corners(marked) == std::vector<Edge>{{3, 6}});
  CHECK(marked.is_canonical());
}

TEST_CASE("strip diagrams") {
  CHECK_THROWS_AS(StripDiagram(AreaSequence({0, 1}), {{1, 2}}), Error);  // already an edge
  const StripDiagram d(AreaSequence({0, 1, 2, 2, 2, 2}), {{1, 4}, {3, 6}});
  CHECK(d.is_canonical());
  const StripDiagram weird(AreaSequence({0, 0, 0}), {{1, 3}});
  CHECK_FALSE(weird.is_canonical());  // (1,3) is a non-edge but no corner
  CHECK(strict_from_string("2-5,3-6") == std::vector<Edge>{{2, 5}, {3, 6}});
  CHECK_THROWS_AS(strict_from_string("25"), Error);
}

TEST_CASE("families") {
  CHECK(family(Family::Line, {4}).a == std::vector<int>{0, 1, 1, 1});
  CHECK(family(Family::MeltingLollipop, {7, 2, 3}).a ==
        std::vector<int>{0, 1, 2, 3, 4, 5, 4, 1, 1, 1});
  CHECK(family(Family::Rectangular, {2, 5}).a == std::vector<int>{0, 1, 0, 1, 2});
  CHECK(family(Family::Complete, {4}).a == std::vector<int>{0, 1, 2, 3});
  CHECK(family(Family::Lollipop, {3, 2}).a == std::vector<int>{0, 1, 2, 1, 1});
  CHECK(family(Family::MeltingComplete, {4, 2}).a == std::vector<int>{0, 1, 2, 1});
  CHECK_THROWS_AS(family(Family::MeltingLollipop, {3, 5, 1}), Error);
  CHECK_THROWS_AS(family(Family::Line, {0}), Error);
}

TEST_CASE("classification") {
  const auto c1 = classify(AreaSequence({0, 1, 2, 2, 3, 1}));
  CHECK(std::find(c1.admissible.begin(), c1.admissible.end(), Edge{2, 5}) !=
        c1.admissible.end());

  CHECK(classify(AreaSequence({0, 1, 2, 3, 2, 2})).is_abelian);
  CHECK(classify(family(Family::Complete, {5})).is_rectangular);
  CHECK(classify(family(Family::Complete, {5})).is_abelian);
  CHECK_FALSE(classify(AreaSequence({0, 1, 1, 1})).is_rectangular);
  CHECK(classify(family(Family::Rectangular, {2, 5})).is_rectangular);
}

TEST_CASE("admissible edges satisfy the edge matching property") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& a : enumerate_area_sequences(n)) {
      for (const auto& [i, j] : classify(a).admissible) {
        for (int k = 1; k <= n; ++k) {
          if (k == i || k == i + 1) continue;
          if (k < i) {
            CHECK(a.has_edge(k, i) == a.has_edge(k, i + 1));
          } else {
            CHECK(a.has_edge(i, k) == a.has_edge(i + 1, k));
          }
        }
      }
    }
  }
}

TEST_CASE("dual admissible mirrors the transpose") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& a : enumerate_area_sequences(n)) {
      const auto c = classify(a);
      const auto ct = classify(transpose(a));
      std::vector<Edge> mirrored;
      for (const auto& [i, j] : c.dual_admissible) mirrored.emplace_back(n + 1 - j, n + 1 - i);
      std::sort(mirrored.begin(), mirrored.end());
      auto adm = ct.admissible;
      std::sort(adm.begin(), adm.end());
      CHECK(mirrored == adm);
      // dual-admissible edges are edges of the graph, with i the lowest
      // in-neighbor of j
      for (const auto& [i, j] : c.dual_admissible) {
        CHECK(a.has_edge(i, j));
        CHECK(i == j - a.at(j));
      }
    }
  }
}

TEST_CASE("melting lollipop with k=m-1 splits into complete plus line") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 1; n <= 3; ++n) {
      const AreaSequence a = family(Family::MeltingLollipop, {m, m - 1, n});
      // components split where the area drops to zero
      std::vector<int> starts;
      for (int i = 1; i <= a.n(); ++i)
        if (a.at(i) == 0) starts.push_back(i);
      REQUIRE(starts.size() == 2);
      CHECK(starts[1] == m);
      // prefix is a complete graph, suffix a line graph
      for (int i = 1; i < m; ++i) CHECK(a.at(i) == i - 1);
      for (int i = m + 1; i <= a.n(); ++i) CHECK(a.at(i) == 1);
    }
}

TEST_CASE("staircase bijection") {
  CHECK(staircase_partition(AreaSequence({0, 1, 2, 3, 2, 2})) == Partition({3, 2}));
  CHECK(staircase_partition(family(Family::Complete, {6})).empty());
  CHECK(area_from_staircase(Partition({3, 2}), 6).a == std::vector<int>{0, 1, 2, 3, 2, 2});
  CHECK_THROWS_AS(area_from_staircase(Partition({6}), 6), Error);
  CHECK_THROWS_AS(area_from_staircase(Partition({3, 3}), 4), Error);
  for (int n = 0; n <= 7; ++n) {
    for (const auto& a : enumerate_area_sequences(n)) {
      const Partition lam = staircase_partition(a);
      CHECK(area_from_staircase(lam, n) == a);
      CHECK(staircase_is_abelian(lam, n) == classify(a).is_abelian);
      CHECK(staircase_is_rectangular(lam, n) == classify(a).is_rectangular);
    }
  }
  // rectangular diagrams carry the k^(n-k) shape
  CHECK(staircase_partition(family(Family::Rectangular, {2, 5})) == Partition({2, 2, 2}));
}
