#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lltlab/hall_littlewood.hpp"
#include "lltlab/orientations.hpp"

using namespace llt;

namespace {
const LaurentPoly Q = LaurentPoly::q();
}

TEST_CASE("raising operator basics") {
  const SymFunc h11 = hl_transformed(Partition({1, 1}), HLSeries::Standard);
  CHECK(h11.coeff(Partition({1, 1})) == LaurentPoly(1));
  CHECK(h11.coeff(Partition({2})) == Q - LaurentPoly(1));
  CHECK(h11.terms().size() == 2);

  const SymFunc shifted = hl_transformed(Partition({1, 1}), HLSeries::Shifted);
  CHECK(shifted.coeff(Partition({1, 1})) == LaurentPoly(1));
  CHECK(shifted.coeff(Partition({2})) == Q);

  for (int n = 1; n <= 6; ++n) {
    const SymFunc row = hl_transformed(Partition({n}), HLSeries::Standard);
    CHECK(row.equals(SymFunc::basis_element(Basis::H, Partition({n}))));
  }
  CHECK(hl_transformed(Partition(), HLSeries::Standard).equals(SymFunc::one()));
}

TEST_CASE("specialization at zero is the Schur function") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : partitions_of(n))
      for (const auto& lam : partitions_of(n)) {
        const LaurentPoly kf = kostka_foulkes(lam, mu);
        CHECK(kf.coeff(0) == (lam == mu ? 1 : 0));
      }
}

TEST_CASE("specialization at one counts semistandard tableaux") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n))
      for (const auto& lam : partitions_of(n))
        CHECK(kostka_foulkes(lam, mu).sum_of_coeffs() ==
              kostka(lam, Composition(mu.parts)));
}

TEST_CASE("a classical Kostka-Foulkes value") {
  CHECK(kostka_foulkes(Partition({2}), Partition({1, 1})) == Q);
  CHECK_THROWS_AS((void)kostka_foulkes(Partition({2}), Partition({1, 1, 1})), Error);
}

TEST_CASE("dominance triangularity") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lam : partitions_of(n)) {
      const SymFunc h = hl_transformed(lam, HLSeries::Standard);
      CHECK(h.coeff(lam) == LaurentPoly(1));
      for (const auto& [mu, c] : h.terms()) CHECK(dominance_leq(lam, mu));
    }
  }
}

TEST_CASE("shifted series is h positive and consistent with substitution") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lam : partitions_of(n)) {
      const SymFunc shifted = hl_transformed(lam, HLSeries::Shifted);
      CHECK(sf_is_positive(shifted, Basis::H).positive);
      const SymFunc standard = hl_transformed(lam, HLSeries::Standard);
      CHECK(standard.shifted_coeffs(VarShift::QPlusOne).equals(shifted));
    }
  }
}

TEST_CASE("gamma_mu construction") {
  const StripDiagram d21 = gamma_mu(Partition({2, 1}));
  CHECK(d21.area == AreaSequence({0, 1, 0}));
  CHECK(d21.strict == std::vector<Edge>{{2, 3}});

  const StripDiagram d4 = gamma_mu(Partition({4}));
  CHECK(d4.area == family(Family::Complete, {4}));
  CHECK(d4.strict.empty());

  // the worked nine-vertex diagram
  const StripDiagram d432 = gamma_mu(Partition({4, 3, 2}));
  CHECK(d432.area == AreaSequence({0, 1, 2, 3, 2, 2, 2, 1, 1}));
  CHECK(d432.strict ==
        std::vector<Edge>{{2, 5}, {3, 6}, {4, 7}, {6, 8}, {7, 9}});
  const auto triangles = gamma_mu_triangle_edges(Partition({4, 3, 2}));
  CHECK(triangles.size() == 4);
  for (Edge e : {Edge{3, 5}, Edge{4, 5}, Edge{4, 6}, Edge{7, 8}})
    CHECK(std::find(triangles.begin(), triangles.end(), e) != triangles.end());
  CHECK(d432.is_canonical());
}

TEST_CASE("relation between omega G and the transformed Hall-Littlewood") {
  // mu = (2): omega G_{K_2} = s_11 + q s_2 = H_{(1,1)}
  const SymFunc lhs = llt_poly(gamma_mu(Partition({2}))).omega();
  CHECK(lhs.equals(hl_transformed(Partition({1, 1}), HLSeries::Standard)));

  CHECK(check_hl_relation(Partition({2, 1})));
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : partitions_of(n)) CHECK(check_hl_relation(mu));
}

TEST_CASE("e positivity of the associated vertical strips") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : partitions_of(n)) {
      const SymFunc g = llt_poly(gamma_mu(mu)).shifted_coeffs(VarShift::QPlusOne);
      CHECK(sf_is_positive(g, Basis::E).positive);
    }
}

TEST_CASE("the naive triangle-restricted sum fails at H index 222") {
  // The guess: restricting the orientation sum of gamma_mu to orientations
  // with ascending triangle edges gives omega H_{mu'}(x;q+1).  With the
  // forced edges left out of asc this holds for every diagram shape of size
  // up to six except (3,3), whose Hall-Littlewood index is (2,2,2).
  auto target = [](const Partition& mu) {
    return hl_transformed(conjugate(mu), HLSeries::Shifted).omega();
  };
  const Partition bad({3, 3});
  CHECK_FALSE(hl_restricted_orientation_sum(bad, false).equals(target(bad)));
  CHECK_FALSE(hl_restricted_orientation_sum(bad, true).equals(target(bad)));

  // counting the forced edges already breaks the smaller case (2,2), while
  // the uncounted form still matches there and at the diagram shape (2,2,2)
  const Partition mu22({2, 2});
  CHECK(hl_restricted_orientation_sum(mu22, false).equals(target(mu22)));
  CHECK_FALSE(hl_restricted_orientation_sum(mu22, true).equals(target(mu22)));
  const Partition mu222({2, 2, 2});
  CHECK(hl_restricted_orientation_sum(mu222, false).equals(target(mu222)));
}
