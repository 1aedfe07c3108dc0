#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lltlab/laurent.hpp"

using namespace llt;

namespace {

LaurentPoly q_pow(long d) { return LaurentPoly::monomial(1, d); }

LaurentPoly random_poly(std::mt19937& rng, bool laurent) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> len(0, 5);
  std::uniform_int_distribution<int> lo(laurent ? -3 : 0, 3);
  const int n = len(rng);
  std::vector<mpz_class> cs;
  cs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cs.emplace_back(coef(rng));
  return LaurentPoly(lo(rng), std::move(cs));
}

}  // namespace

TEST_CASE("canonical trim and zero representation") {
  LaurentPoly p(2, {mpz_class(0), mpz_class(3), mpz_class(0)});
  CHECK(p.min_deg() == 3);
  CHECK(p.coeffs().size() == 1);
  LaurentPoly z(0, {mpz_class(0), mpz_class(0)});
  CHECK(z.is_zero());
  CHECK(z == LaurentPoly());
  CHECK(z.str() == "0");
}

TEST_CASE("arithmetic examples") {
  CHECK(q_pow(1) * q_pow(-1) == LaurentPoly(1));
  LaurentPoly one_plus_q(0, {mpz_class(1), mpz_class(1)});
  CHECK(one_plus_q * one_plus_q == LaurentPoly(0, {mpz_class(1), mpz_class(2), mpz_class(1)}));
  LaurentPoly a = q_pow(2) + q_pow(3);
  CHECK(a - q_pow(2) == q_pow(3));
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(20240517);
  for (int it = 0; it < 300; ++it) {
    LaurentPoly a = random_poly(rng, true);
    LaurentPoly b = random_poly(rng, true);
    LaurentPoly c = random_poly(rng, true);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + LaurentPoly() == a);
    CHECK(a * LaurentPoly(1) == a);
  }
}

TEST_CASE("variable shifts") {
  CHECK(q_pow(2).shift_var(VarShift::QPlusOne) ==
        LaurentPoly(0, {mpz_class(1), mpz_class(2), mpz_class(1)}));
  LaurentPoly q_minus_1(0, {mpz_class(-1), mpz_class(1)});
  CHECK(q_minus_1.shift_var(VarShift::QPlusOne) == q_pow(1));
  CHECK(q_pow(3).shift_var(VarShift::QInverse) == q_pow(-3));
  CHECK_THROWS_AS((void)q_pow(-1).shift_var(VarShift::QPlusOne), Error);

  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    LaurentPoly a = random_poly(rng, false);
    CHECK(a.shift_var(VarShift::QPlusOne).shift_var(VarShift::QMinusOne) == a);
    CHECK(a.shift_var(VarShift::QInverse).shift_var(VarShift::QInverse) == a);
  }
}

TEST_CASE("exact division") {
  LaurentPoly q = q_pow(1);
  CHECK(lp_div_exact(q + q_pow(2), q) == LaurentPoly(0, {mpz_class(1), mpz_class(1)}));
  LaurentPoly q2_minus_1 = q_pow(2) - LaurentPoly(1);
  LaurentPoly q_minus_1 = q - LaurentPoly(1);
  CHECK(lp_div_exact(q2_minus_1, q_minus_1) == q + LaurentPoly(1));
  CHECK_THROWS_AS((void)lp_div_exact(q_pow(2) + LaurentPoly(1), q + LaurentPoly(1)), Error);
  CHECK_THROWS_AS((void)lp_div_exact(q, LaurentPoly()), Error);

  std::mt19937 rng(99);
  for (int it = 0; it < 300; ++it) {
    LaurentPoly a = random_poly(rng, true);
    LaurentPoly b = random_poly(rng, true);
    if (b.is_zero()) continue;
    CHECK(lp_div_exact(a * b, b) == a);
  }
}

TEST_CASE("power and printing") {
  LaurentPoly q_minus_1 = q_pow(1) - LaurentPoly(1);
  CHECK(lp_pow(q_minus_1, 2) == LaurentPoly(0, {mpz_class(1), mpz_class(-2), mpz_class(1)}));
  CHECK(lp_pow(q_minus_1, 0) == LaurentPoly(1));
  CHECK(q_pow(-1).str() == "q^-1");
  CHECK((LaurentPoly(2) + q_pow(2) * LaurentPoly(-3)).str() == "2 - 3*q^2");
}

TEST_CASE("rational coefficients") {
  RatLaurentPoly half(0, {mpq_class(1, 2)});
  RatLaurentPoly p = half + half;
  CHECK(p.is_integral());
  CHECK(p.to_integer() == LaurentPoly(1));
  RatLaurentPoly third(0, {mpq_class(1, 3)});
  CHECK_THROWS_AS((void)third.to_integer(), Error);
  CHECK((third * RatLaurentPoly(3)).to_integer() == LaurentPoly(1));
  RatLaurentPoly r(-1, {mpq_class(2, 4)});
  CHECK(r.coeff(-1) == mpq_class(1, 2));  // stored in lowest terms
}
