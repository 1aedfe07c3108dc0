#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lltlab/error.hpp"

namespace llt {

enum class VarShift { QPlusOne, QMinusOne, QInverse };

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Canonical form: `coeffs` is empty iff the value is zero; otherwise the
/// first and last entries are nonzero.  `coeffs[i]` is the coefficient of
/// q^(min_deg + i).  All arithmetic is exact.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const mpz_class& constant);
  LaurentPoly(long min_deg, std::vector<mpz_class> coeffs);

  static LaurentPoly monomial(const mpz_class& coeff, long deg);
  static LaurentPoly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  long min_deg() const { return min_deg_; }
  long max_deg() const { return min_deg_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  mpz_class coeff(long deg) const;
  mpz_class sum_of_coeffs() const;  // value at q = 1

  /// True when the value lies in N[q]: no negative exponents, no negative
  /// coefficients.
  bool is_nonneg_poly() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpz_class& c);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_deg_ == b.min_deg_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Substitutes q -> q+1, q -> q-1 or q -> 1/q.  The first two require an
  /// ordinary polynomial (min_deg >= 0) and throw NegativeDegreeShift
  /// otherwise.
  LaurentPoly shift_var(VarShift mode) const;

  std::string str() const;

private:
  void normalize();

  long min_deg_ = 0;
  std::vector<mpz_class> coeffs_;
};

/// Exact quotient a/b; throws InexactDivision when the remainder is nonzero
/// and DivisionByZero for b = 0.  In the verification sweeps an inexact
/// division signals a falsified identity rather than a programming error.
LaurentPoly lp_div_exact(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly lp_pow(const LaurentPoly& base, unsigned long e);

/// Laurent polynomial with exact rational coefficients, used where z_lambda
/// denominators appear in power-sum work.  Kept as a separate type so the
/// integer-only code paths never touch rationals.
class RatLaurentPoly {
public:
  RatLaurentPoly() = default;
  RatLaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit RatLaurentPoly(const mpq_class& constant);
  RatLaurentPoly(const LaurentPoly& p);  // NOLINT(google-explicit-constructor)
  RatLaurentPoly(long min_deg, std::vector<mpq_class> coeffs);

  static RatLaurentPoly monomial(const mpq_class& coeff, long deg);

  bool is_zero() const { return coeffs_.empty(); }
  long min_deg() const { return min_deg_; }
  long max_deg() const { return min_deg_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(long deg) const;

  bool is_integral() const;
  LaurentPoly to_integer() const;  // throws NonIntegralCoefficient

  RatLaurentPoly operator-() const;
  RatLaurentPoly& operator+=(const RatLaurentPoly& o);
  RatLaurentPoly& operator-=(const RatLaurentPoly& o);
  friend RatLaurentPoly operator+(const RatLaurentPoly& a, const RatLaurentPoly& b);
  friend RatLaurentPoly operator-(const RatLaurentPoly& a, const RatLaurentPoly& b);
  friend RatLaurentPoly operator*(const RatLaurentPoly& a, const RatLaurentPoly& b);
  RatLaurentPoly& operator*=(const RatLaurentPoly& o);
  RatLaurentPoly& operator*=(const mpq_class& c);
  RatLaurentPoly& operator/=(const mpq_class& c);

  friend bool operator==(const RatLaurentPoly& a, const RatLaurentPoly& b) {
    return a.min_deg_ == b.min_deg_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const RatLaurentPoly& a, const RatLaurentPoly& b) { return !(a == b); }

  RatLaurentPoly shift_var(VarShift mode) const;

  std::string str() const;

private:
  void normalize();

  long min_deg_ = 0;
  std::vector<mpq_class> coeffs_;
};

}  // namespace llt
