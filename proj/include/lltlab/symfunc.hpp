#pragma once

#include <map>
#include <string>
#include <utility>

#include "lltlab/laurent.hpp"
#include "lltlab/partitions.hpp"

namespace llt {

enum class Basis { M, E, H, P, S };

/// Plain is the polynomial in q itself; Shifted means the q+1 form (the
/// variable of the orientation sums).
enum class Form { Plain, Shifted };

const char* basis_name(Basis b);
Basis basis_from_name(const std::string& name);

namespace detail {
// Expansion of a basis element into the monomial basis (integer entries),
// cached per index partition.  Valid for E, H, P and S.
using IntRow = std::map<Partition, mpz_class>;
const IntRow& basis_to_m_row(Basis b, const Partition& idx);
// m_a * m_b in the monomial basis, cached.
const IntRow& m_product_row(const Partition& a, const Partition& b);
// s_lambda in the h basis via Jacobi-Trudi, signed integer entries.
const IntRow& schur_to_h_row(const Partition& lam);
// e_lambda in the p basis, rational entries (Newton recurrences).
using RatRow = std::map<Partition, mpq_class>;
const RatRow& e_to_p_row(const Partition& lam);
}  // namespace detail

/// Homogeneous symmetric function of a fixed degree with polynomial
/// coefficients, stored sparsely in one labeled basis.  Coefficients of
/// stored terms are always nonzero.
template <class C>
class SymFuncT {
public:
  SymFuncT() = default;
  SymFuncT(int degree, Basis basis) : degree_(degree), basis_(basis) {}

  static SymFuncT zero(int degree, Basis basis) { return SymFuncT(degree, basis); }
  static SymFuncT one(Basis basis = Basis::M) {
    SymFuncT f(0, basis);
    f.terms_[Partition()] = C(1);
    return f;
  }
  static SymFuncT basis_element(Basis b, const Partition& idx) {
    SymFuncT f(idx.size(), b);
    f.terms_[idx] = C(1);
    return f;
  }

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const std::map<Partition, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coeff(const Partition& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? C() : it->second;
  }

  void add_term(const Partition& idx, const C& c);

  SymFuncT& operator+=(const SymFuncT& o);
  SymFuncT& operator-=(const SymFuncT& o);
  friend SymFuncT operator+(SymFuncT a, const SymFuncT& b) { return a += b; }
  friend SymFuncT operator-(SymFuncT a, const SymFuncT& b) { return a -= b; }
  SymFuncT operator-() const;
  SymFuncT operator*(const SymFuncT& o) const;
  SymFuncT operator*(const C& c) const;

  SymFuncT converted(Basis target) const;

  /// The omega involution: swaps e and h expansions, transposes Schur
  /// indices, scales p_lambda by (-1)^(|lambda|-length).
  SymFuncT omega() const;

  template <class F>
  SymFuncT mapped_coeffs(F&& fn) const {
    SymFuncT out(degree_, basis_);
    for (const auto& [idx, c] : terms_) out.add_term(idx, fn(c));
    return out;
  }

  SymFuncT shifted_coeffs(VarShift mode) const {
    return mapped_coeffs([mode](const C& c) { return c.shift_var(mode); });
  }

  /// Representation independent equality (compares in the monomial basis).
  bool equals(const SymFuncT& o) const;

  std::string str() const;

private:
  SymFuncT to_m() const;
  SymFuncT from_m(Basis target) const;  // *this must be in the m basis

  int degree_ = 0;
  Basis basis_ = Basis::M;
  std::map<Partition, C> terms_;
};

using SymFunc = SymFuncT<LaurentPoly>;
using RatSymFunc = SymFuncT<RatLaurentPoly>;

extern template class SymFuncT<LaurentPoly>;
extern template class SymFuncT<RatLaurentPoly>;

/// Builds an m-basis function from coloring counts.  All index partitions
/// must have size equal to the stated degree.
SymFunc sf_from_monomials(int degree, const std::map<Partition, LaurentPoly>& counts);

RatSymFunc to_rational(const SymFunc& f);
LaurentPoly demote_coeff(const RatLaurentPoly& c);

/// Exact p-basis expansion with rational coefficients (the integer type has
/// no p-basis conversion of its own; this is the promoted route).
RatSymFunc to_p_basis(const SymFunc& f);
RatSymFunc to_p_basis(const RatSymFunc& f);

/// Plethystic alphabet substitution x -> x(q-1): acts on the p basis by
/// p_k -> (q^k - 1) p_k, extended linearly.
RatSymFunc pleth_scale_qminus1(const SymFunc& f);

struct PositivityWitness {
  bool positive = true;
  Partition index;       // offending partition when not positive
  std::string coeff;     // its coefficient, rendered
};

/// Checks that every coefficient of f, expanded in the given basis, lies in
/// N[q].
PositivityWitness sf_is_positive(const SymFunc& f, Basis basis);

}  // namespace llt
