#include "lltlab/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace llt {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) coeffs_.push_back(mpz_class(constant));
}

LaurentPoly::LaurentPoly(const mpz_class& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(long min_deg, std::vector<mpz_class> coeffs)
    : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const mpz_class& coeff, long deg) {
  LaurentPoly p;
  if (coeff != 0) {
    p.min_deg_ = deg;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

void LaurentPoly::normalize() {
  std::size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
  if (lo == coeffs_.size()) {
    coeffs_.clear();
    min_deg_ = 0;
    return;
  }
  std::size_t hi = coeffs_.size();
  while (coeffs_[hi - 1] == 0) --hi;
  if (lo > 0 || hi < coeffs_.size()) {
    coeffs_ = std::vector<mpz_class>(coeffs_.begin() + lo, coeffs_.begin() + hi);
    min_deg_ += static_cast<long>(lo);
  }
}

mpz_class LaurentPoly::coeff(long deg) const {
  if (deg < min_deg_ || deg > max_deg()) return 0;
  return coeffs_[static_cast<std::size_t>(deg - min_deg_)];
}

mpz_class LaurentPoly::sum_of_coeffs() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool LaurentPoly::is_nonneg_poly() const {
  if (is_zero()) return true;
  if (min_deg_ < 0) return false;
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpz_class& c) { return c >= 0; });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  long lo = std::min(min_deg_, o.min_deg_);
  long hi = std::max(max_deg(), o.max_deg());
  std::vector<mpz_class> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<std::size_t>(min_deg_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(o.min_deg_ - lo) + i] += o.coeffs_[i];
  min_deg_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r += b;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r -= b;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly r;
  r.min_deg_ = a.min_deg_ + b.min_deg_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    coeffs_.clear();
    min_deg_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::shift_var(VarShift mode) const {
  if (is_zero()) return {};
  if (mode == VarShift::QInverse) {
    LaurentPoly r;
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    r.min_deg_ = -max_deg();
    return r;
  }
  if (min_deg_ < 0)
    fail(ErrorCode::NegativeDegreeShift,
         "q->q" + std::string(mode == VarShift::QPlusOne ? "+1" : "-1") +
             " requested on a strict Laurent polynomial (min_deg " +
             std::to_string(min_deg_) + ")");
  // Horner from the top: r = r*(q +- 1) + c_i.
  const long delta = mode == VarShift::QPlusOne ? 1 : -1;
  LaurentPoly base(0, {mpz_class(delta), mpz_class(1)});
  LaurentPoly r;
  for (long d = max_deg(); d >= 0; --d) {
    r *= base;
    r += LaurentPoly(coeff(d));
  }
  return r;
}

LaurentPoly lp_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (a.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  if (ac.size() < bc.size())
    fail(ErrorCode::InexactDivision, "degree of dividend below divisor");
  std::vector<mpz_class> rem = ac;
  const std::size_t qn = ac.size() - bc.size() + 1;
  std::vector<mpz_class> quot(qn);
  for (std::size_t d = qn; d-- > 0;) {
    mpz_class& lead = rem[d + bc.size() - 1];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), bc.back().get_mpz_t()))
      fail(ErrorCode::InexactDivision, "leading coefficient not divisible");
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), lead.get_mpz_t(), bc.back().get_mpz_t());
    quot[d] = c;
    for (std::size_t i = 0; i < bc.size(); ++i) rem[d + i] -= c * bc[i];
  }
  for (const auto& r : rem)
    if (r != 0) fail(ErrorCode::InexactDivision, "nonzero remainder");
  return LaurentPoly(a.min_deg() - b.min_deg(), std::move(quot));
}

LaurentPoly lp_pow(const LaurentPoly& base, unsigned long e) {
  LaurentPoly r(1);
  LaurentPoly b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

namespace {

template <class Coeff>
std::string render_poly(long min_deg, const std::vector<Coeff>& coeffs) {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Coeff& c = coeffs[i];
    if (c == 0) continue;
    const long d = min_deg + static_cast<long>(i);
    const bool neg = c < 0;
    Coeff abs = neg ? Coeff(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    const bool unit = abs == 1;
    if (d == 0) {
      out << abs;
    } else {
      if (!unit) out << abs << "*";
      out << "q";
      if (d != 1) out << "^" << d;
    }
  }
  return out.str();
}

}  // namespace

std::string LaurentPoly::str() const { return render_poly(min_deg_, coeffs_); }

RatLaurentPoly::RatLaurentPoly(long constant) {
  if (constant != 0) coeffs_.push_back(mpq_class(constant));
}

RatLaurentPoly::RatLaurentPoly(const mpq_class& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

RatLaurentPoly::RatLaurentPoly(const LaurentPoly& p) : min_deg_(p.min_deg()) {
  coeffs_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

RatLaurentPoly::RatLaurentPoly(long min_deg, std::vector<mpq_class> coeffs)
    : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

RatLaurentPoly RatLaurentPoly::monomial(const mpq_class& coeff, long deg) {
  RatLaurentPoly p;
  if (coeff != 0) {
    p.min_deg_ = deg;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

void RatLaurentPoly::normalize() {
  std::size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
  if (lo == coeffs_.size()) {
    coeffs_.clear();
    min_deg_ = 0;
    return;
  }
  std::size_t hi = coeffs_.size();
  while (coeffs_[hi - 1] == 0) --hi;
  if (lo > 0 || hi < coeffs_.size()) {
    coeffs_ = std::vector<mpq_class>(coeffs_.begin() + lo, coeffs_.begin() + hi);
    min_deg_ += static_cast<long>(lo);
  }
}

mpq_class RatLaurentPoly::coeff(long deg) const {
  if (deg < min_deg_ || deg > max_deg()) return 0;
  return coeffs_[static_cast<std::size_t>(deg - min_deg_)];
}

bool RatLaurentPoly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpq_class& c) { return c.get_den() == 1; });
}

LaurentPoly RatLaurentPoly::to_integer() const {
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1)
      fail(ErrorCode::NonIntegralCoefficient, "coefficient " + c.get_str() + " is not an integer");
    out.push_back(c.get_num());
  }
  return LaurentPoly(min_deg_, std::move(out));
}

RatLaurentPoly RatLaurentPoly::operator-() const {
  RatLaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RatLaurentPoly& RatLaurentPoly::operator+=(const RatLaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  long lo = std::min(min_deg_, o.min_deg_);
  long hi = std::max(max_deg(), o.max_deg());
  std::vector<mpq_class> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<std::size_t>(min_deg_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(o.min_deg_ - lo) + i] += o.coeffs_[i];
  min_deg_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

RatLaurentPoly& RatLaurentPoly::operator-=(const RatLaurentPoly& o) { return *this += -o; }

RatLaurentPoly operator+(const RatLaurentPoly& a, const RatLaurentPoly& b) {
  RatLaurentPoly r = a;
  r += b;
  return r;
}

RatLaurentPoly operator-(const RatLaurentPoly& a, const RatLaurentPoly& b) {
  RatLaurentPoly r = a;
  r -= b;
  return r;
}

RatLaurentPoly operator*(const RatLaurentPoly& a, const RatLaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatLaurentPoly r;
  r.min_deg_ = a.min_deg_ + b.min_deg_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.normalize();
  return r;
}

RatLaurentPoly& RatLaurentPoly::operator*=(const RatLaurentPoly& o) {
  *this = *this * o;
  return *this;
}

RatLaurentPoly& RatLaurentPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    coeffs_.clear();
    min_deg_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RatLaurentPoly& RatLaurentPoly::operator/=(const mpq_class& c) {
  if (c == 0) fail(ErrorCode::DivisionByZero, "division by zero rational");
  for (auto& x : coeffs_) x /= c;
  return *this;
}

RatLaurentPoly RatLaurentPoly::shift_var(VarShift mode) const {
  if (is_zero()) return {};
  if (mode == VarShift::QInverse) {
    RatLaurentPoly r;
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    r.min_deg_ = -max_deg();
    return r;
  }
  if (min_deg_ < 0)
    fail(ErrorCode::NegativeDegreeShift, "q->q+-1 requested on a strict Laurent polynomial");
  const long delta = mode == VarShift::QPlusOne ? 1 : -1;
  RatLaurentPoly base(0, {mpq_class(delta), mpq_class(1)});
  RatLaurentPoly r;
  for (long d = max_deg(); d >= 0; --d) {
    r *= base;
    r += RatLaurentPoly(coeff(d));
  }
  return r;
}

std::string RatLaurentPoly::str() const { return render_poly(min_deg_, coeffs_); }

}  // namespace llt
