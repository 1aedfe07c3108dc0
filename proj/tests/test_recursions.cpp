#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lltlab/recursions.hpp"

using namespace llt;

namespace {

const LaurentPoly Q = LaurentPoly::q();

std::vector<StripDiagram> all_strips(int n) {
  std::vector<StripDiagram> out;
  for (const auto& a : enumerate_area_sequences(n)) {
    const StripDiagram bare(a);
    const auto corners = outer_corners(bare);
    const std::size_t m = corners.size();
    for (std::size_t pick = 0; pick < (std::size_t{1} << m); ++pick) {
      std::vector<Edge> strict;
      for (std::size_t b = 0; b < m; ++b)
        if ((pick >> b) & 1) strict.push_back(corners[b]);
      out.emplace_back(a, strict);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("corner identity preconditions") {
  CHECK_THROWS_AS(
      (void)corner_identity_check(StripDiagram(AreaSequence({0, 1})), {1, 2}, Side::G),
      Error);  // (1,2) is an edge, not a corner
  // a corner that is already strict is rejected as well
  const StripDiagram d(AreaSequence({0, 0}), {{1, 2}});
  CHECK_THROWS_AS((void)corner_identity_check(d, {1, 2}, Side::G), Error);
}

TEST_CASE("corner identity on the smallest diagram") {
  CHECK(corner_identity_check(StripDiagram(AreaSequence({0, 0})), {1, 2}, Side::G));
  CHECK(corner_identity_check(StripDiagram(AreaSequence({0, 0})), {1, 2}, Side::LLTc));
}

TEST_CASE("corner identity sweep") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& d : all_strips(n)) {
      for (const Edge& eps : outer_corners(d)) {
        CHECK(corner_identity_check(d, eps, Side::G));
        CHECK(corner_identity_check(d, eps, Side::LLTc));
      }
    }
  }
}

TEST_CASE("strip to unicellular") {
  const StripDiagram trivial(AreaSequence({0, 1, 2}));
  const LinearExpr id = strip_to_unicellular(trivial);
  REQUIRE(id.terms.size() == 1);
  CHECK(id.terms[0].num == LaurentPoly(1));
  CHECK(id.terms[0].diagram == trivial);

  const StripDiagram d(AreaSequence({0, 0}), {{1, 2}});
  const LinearExpr e = strip_to_unicellular(d);
  REQUIRE(e.terms.size() == 2);
  const LaurentPoly inv_q = LaurentPoly::monomial(1, -1);
  for (const auto& t : e.terms) {
    if (t.diagram.area == AreaSequence({0, 1})) CHECK(t.num == inv_q);
    if (t.diagram.area == AreaSequence({0, 0})) CHECK(t.num == -inv_q);
  }
  CHECK(expr_matches_llt(e, d));

  // the diagram attached to the partition (2,1) in the Hall-Littlewood setup
  const StripDiagram hl(AreaSequence({0, 1, 1}), {{1, 3}});
  const LinearExpr ehl = strip_to_unicellular(hl);
  REQUIRE(ehl.terms.size() == 2);
  for (const auto& t : ehl.terms)
    CHECK((t.diagram.area == AreaSequence({0, 1, 2}) ||
           t.diagram.area == AreaSequence({0, 1, 1})));
  CHECK(expr_matches_llt(ehl, hl));
}

TEST_CASE("strip to unicellular sweep") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& d : all_strips(n)) CHECK(expr_matches_llt(strip_to_unicellular(d), d));
}

TEST_CASE("two term identity") {
  CHECK(two_term_check(AreaSequence({0, 1, 2, 2, 3, 1}), {2, 5}, LeeVariant::Lee));
  CHECK_THROWS_AS((void)two_term_check(AreaSequence({0, 1, 2}), {1, 2}, LeeVariant::Lee),
                  Error);
  for (int n = 3; n <= 5; ++n) {
    for (const auto& a : enumerate_area_sequences(n)) {
      const auto cls = classify(a);
      for (const Edge& e : cls.admissible) CHECK(two_term_check(a, e, LeeVariant::Lee));
      for (const Edge& e : cls.dual_admissible)
        CHECK(two_term_check(a, e, LeeVariant::Dual));
    }
  }
}

TEST_CASE("three term identity") {
  // the worked triple: removing boxes in column five
  CHECK(lee_check(AreaSequence({0, 1, 2, 2, 3, 1}), {2, 5}, LeeVariant::Lee));
  for (int n = 3; n <= 5; ++n) {
    for (const auto& a : enumerate_area_sequences(n)) {
      const auto cls = classify(a);
      for (const Edge& e : cls.admissible) CHECK(lee_check(a, e, LeeVariant::Lee));
      for (const Edge& e : cls.dual_admissible) CHECK(lee_check(a, e, LeeVariant::Dual));
    }
  }
}

TEST_CASE("complete graph recursion") {
  CHECK(complete_rec(0, Side::G).equals(SymFunc::one()));
  CHECK(complete_rec(1, Side::G)
            .equals(SymFunc::basis_element(Basis::E, Partition({1}))));

  const SymFunc g2 = complete_rec(2, Side::G);
  CHECK(g2.coeff(Partition({1, 1})) == LaurentPoly(1));
  CHECK(g2.coeff(Partition({2})) == Q - LaurentPoly(1));

  for (int n = 0; n <= 6; ++n) {
    const SymFunc rec_g = complete_rec(n, Side::G);
    const SymFunc engine = llt_poly(StripDiagram(family(Family::Complete, {n})));
    CHECK(rec_g.equals(engine));
    const SymFunc rec_c = complete_rec(n, Side::LLTc);
    CHECK(rec_c.equals(lltc_poly(StripDiagram(family(Family::Complete, {n})), Form::Shifted)));
    // the q-binomial identity behind the two recursions
    CHECK(rec_g.shifted_coeffs(VarShift::QPlusOne).equals(rec_c));
  }
}

TEST_CASE("rectangular factorization") {
  CHECK(rectangular_factorization_check(1, 2));
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) CHECK(rectangular_factorization_check(k, n));
}

TEST_CASE("abelian reduction bases") {
  const LinearExpr empty = abelian_reduce(Partition(), 3);
  REQUIRE(empty.terms.size() == 1);
  CHECK(empty.terms[0].diagram.area == family(Family::Complete, {3}));

  const LinearExpr rect = abelian_reduce(Partition({1}), 2);
  REQUIRE(rect.terms.size() == 1);
  CHECK(rect.terms[0].diagram.area == AreaSequence({0, 0}));

  CHECK_THROWS_AS((void)abelian_reduce(Partition({3, 1}), 4), Error);  // not abelian
  CHECK_THROWS_AS((void)abelian_reduce(Partition({5}), 4), Error);     // outside staircase
}

TEST_CASE("abelian reduction evaluates to the direct polynomial") {
  const Partition lam32({3, 2});
  const LinearExpr e32 = abelian_reduce(lam32, 6);
  for (const auto& t : e32.terms)
    CHECK(staircase_is_rectangular(staircase_partition(t.diagram.area), 6));
  CHECK(expr_matches_llt(e32, StripDiagram(area_from_staircase(lam32, 6))));

  const Partition lam21({2, 1});
  CHECK(expr_matches_llt(abelian_reduce(lam21, 6),
                         StripDiagram(area_from_staircase(lam21, 6))));

  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : enumerate_area_sequences(n)) {
      const Partition lam = staircase_partition(a);
      if (!staircase_is_abelian(lam, n)) continue;
      const LinearExpr expr = abelian_reduce(lam, n);
      for (const auto& t : expr.terms)
        CHECK(staircase_is_rectangular(staircase_partition(t.diagram.area), n));
      CHECK(expr_matches_llt(expr, StripDiagram(a)));
    }
  }
}

TEST_CASE("melting lollipop reduction") {
  CHECK(is_complete_plus_line(AreaSequence({0, 1, 2, 0, 1, 1})));
  CHECK(is_complete_plus_line(family(Family::Complete, {4})));
  CHECK(is_complete_plus_line(family(Family::Line, {4})));
  CHECK_FALSE(is_complete_plus_line(AreaSequence({0, 1, 1, 1, 2})));

  for (int m = 1; m <= 5; ++m)
    for (int nline = 0; nline + m <= 6; ++nline)
      for (int k = 0; k <= m - 1; ++k) {
        const LinearExpr expr = melting_lollipop_reduce(m, k, nline);
        for (const auto& t : expr.terms) CHECK(is_complete_plus_line(t.diagram.area));
        CHECK(expr_matches_llt(expr, StripDiagram(melting_lollipop_area(m, k, nline))));
      }
}
