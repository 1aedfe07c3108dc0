#include "lltlab/recursions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace llt {

namespace {

const LaurentPoly kOne(1);
const LaurentPoly kQ = LaurentPoly::q();

LaurentPoly q_bracket(int k) {  // [k]_q = 1 + q + ... + q^(k-1)
  std::vector<mpz_class> c(static_cast<std::size_t>(std::max(k, 0)), mpz_class(1));
  return LaurentPoly(0, std::move(c));
}

AreaSequence bump(const AreaSequence& a, int j, int delta) {
  std::vector<int> v = a.a;
  v[static_cast<std::size_t>(j - 1)] += delta;
  return AreaSequence(std::move(v));
}

bool is_outer_corner_of_area(const AreaSequence& a, Edge e) {
  const auto [u, v] = e;
  if (u < 1 || v <= u || v > a.n() || a.has_edge(u, v)) return false;
  return u + 1 == v || (a.has_edge(u + 1, v) && a.has_edge(u, v - 1));
}

}  // namespace

void LinearExpr::add(const LaurentPoly& num, const LaurentPoly& den, const StripDiagram& d) {
  if (num.is_zero()) return;
  for (Term& t : terms) {
    if (t.diagram == d) {
      // (n1/d1) + (n2/d2) without normalization
      t.num = t.num * den + num * t.den;
      t.den = t.den * den;
      return;
    }
  }
  terms.push_back(Term{num, den, d});
}

std::string LinearExpr::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out << " + ";
    out << "(" << terms[i].num.str() << ")/(" << terms[i].den.str() << ") * G["
        << terms[i].diagram.str() << "]";
  }
  if (terms.empty()) out << "0";
  return out.str();
}

SymFunc evaluate_expr(const LinearExpr& expr, const EnumOptions& opt) {
  if (expr.terms.empty()) return SymFunc();
  LaurentPoly common(1);
  for (const auto& t : expr.terms) common *= t.den;
  SymFunc total;
  for (const auto& t : expr.terms) {
    SymFunc g = llt_poly(t.diagram, opt);
    if (expr.frame == LinearExpr::Frame::Shifted)
      g = g.shifted_coeffs(VarShift::QPlusOne);
    const LaurentPoly scale = t.num * lp_div_exact(common, t.den);
    total += g * scale;
  }
  return total.mapped_coeffs([&](const LaurentPoly& c) { return lp_div_exact(c, common); });
}

bool expr_matches_llt(const LinearExpr& expr, const StripDiagram& target,
                      const EnumOptions& opt) {
  SymFunc g = llt_poly(target, opt);
  if (expr.frame == LinearExpr::Frame::Shifted) g = g.shifted_coeffs(VarShift::QPlusOne);
  return evaluate_expr(expr, opt).equals(g);
}

bool corner_identity_check(const StripDiagram& d, Edge eps, Side side,
                           const EnumOptions& opt) {
  const auto corners = outer_corners(d);
  if (std::find(corners.begin(), corners.end(), eps) == corners.end())
    fail(ErrorCode::NotAnOuterCorner,
         "(" + std::to_string(eps.first) + "," + std::to_string(eps.second) +
             ") is not a non-strict outer corner of " + d.str());
  const StripDiagram with_edge(bump(d.area, eps.second, +1), d.strict);
  std::vector<Edge> strict_plus = d.strict;
  strict_plus.push_back(eps);
  const StripDiagram with_strict(d.area, strict_plus);

  if (side == Side::G) {
    const SymFunc g0 = llt_poly(with_edge, opt).shifted_coeffs(VarShift::QPlusOne);
    const SymFunc g1 = llt_poly(d, opt).shifted_coeffs(VarShift::QPlusOne);
    const SymFunc g2 = llt_poly(with_strict, opt).shifted_coeffs(VarShift::QPlusOne);
    return g0.equals(g1 + g2 * kQ);
  }
  const SymFunc c0 = lltc_poly(with_edge, Form::Shifted, opt);
  const SymFunc c1 = lltc_poly(d, Form::Shifted, opt);
  const SymFunc c2 = lltc_poly(with_strict, Form::Shifted, opt);
  return c0.equals(c1 + c2 * kQ);
}

namespace {

// Recursive expansion with backtracking over the removal order.  Returns the
// q+1-frame coefficients over unicellular area sequences.
bool strip_expand(const StripDiagram& d, std::map<AreaSequence, LaurentPoly>& out,
                  const LaurentPoly& scale) {
  if (d.strict.empty()) {
    out[d.area] += scale;
    return true;
  }
  // try strict edges in reverse canonical order
  std::vector<Edge> candidates = d.strict;
  std::sort(candidates.begin(), candidates.end(), [](const Edge& x, const Edge& y) {
    return std::make_pair(x.second, x.first) > std::make_pair(y.second, y.first);
  });
  for (const Edge& eps : candidates) {
    if (!is_outer_corner_of_area(d.area, eps)) continue;
    std::vector<Edge> rest;
    for (const Edge& e : d.strict)
      if (e != eps) rest.push_back(e);
    const LaurentPoly inv_q = LaurentPoly::monomial(1, -1);
    std::map<AreaSequence, LaurentPoly> attempt = out;
    if (strip_expand(StripDiagram(bump(d.area, eps.second, +1), rest), attempt,
                     scale * inv_q) &&
        strip_expand(StripDiagram(d.area, rest), attempt, -(scale * inv_q))) {
      out = std::move(attempt);
      return true;
    }
  }
  return false;
}

}  // namespace

LinearExpr strip_to_unicellular(const StripDiagram& d) {
  std::map<AreaSequence, LaurentPoly> coeffs;
  if (!strip_expand(d, coeffs, kOne))
    fail(ErrorCode::IrreducibleStrictEdge,
         "no strict edge of " + d.str() + " is an outer corner in any removal order");
  LinearExpr expr;
  expr.frame = LinearExpr::Frame::Shifted;
  for (const auto& [area, c] : coeffs)
    if (!c.is_zero()) expr.terms.push_back({c, kOne, StripDiagram(area)});
  return expr;
}

namespace {

struct LeeInstance {
  AreaSequence a1, a2;
  Edge s1, s2;
};

LeeInstance lee_instance(const AreaSequence& a, Edge e, LeeVariant variant) {
  const auto cls = classify(a);
  const auto& list = variant == LeeVariant::Lee ? cls.admissible : cls.dual_admissible;
  if (std::find(list.begin(), list.end(), e) == list.end())
    fail(ErrorCode::NotAdmissible,
         "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") is not " +
             (variant == LeeVariant::Lee ? "admissible" : "dual-admissible") + " for " +
             a.str());
  const auto [i, j] = e;
  LeeInstance inst;
  inst.a1 = bump(a, j, -1);
  inst.s1 = {i, j};
  if (variant == LeeVariant::Lee) {
    inst.a2 = bump(a, j, -2);
    inst.s2 = {i + 1, j};
  } else {
    inst.a2 = bump(bump(a, j, -1), j - 1, -1);
    inst.s2 = {i, j - 1};
  }
  return inst;
}

}  // namespace

bool two_term_check(const AreaSequence& a, Edge e, LeeVariant variant,
                    const EnumOptions& opt) {
  const LeeInstance inst = lee_instance(a, e, variant);
  const SymFunc lhs = llt_poly(StripDiagram(inst.a1, {inst.s1}), opt);
  const SymFunc rhs = llt_poly(StripDiagram(inst.a2, {inst.s2}), opt);
  return lhs.equals(rhs * kQ);
}

bool lee_check(const AreaSequence& a, Edge e, LeeVariant variant, const EnumOptions& opt) {
  const LeeInstance inst = lee_instance(a, e, variant);
  const SymFunc g0 = llt_poly(StripDiagram(a), opt);
  const SymFunc g1 = llt_poly(StripDiagram(inst.a1), opt);
  const SymFunc g2 = llt_poly(StripDiagram(inst.a2), opt);
  return (g0 - g1).equals((g1 - g2) * kQ);
}

SymFunc complete_rec(int n, Side side) {
  if (n < 0) fail(ErrorCode::BadParams, "complete_rec needs n >= 0");
  const LaurentPoly qp1(0, {mpz_class(1), mpz_class(1)});
  std::vector<SymFunc> memo;
  memo.push_back(SymFunc::one(Basis::E));
  for (int m = 1; m <= n; ++m) {
    SymFunc total(m, Basis::E);
    for (int i = 0; i < m; ++i) {
      const SymFunc part =
          memo[static_cast<std::size_t>(i)] *
          SymFunc::basis_element(Basis::E, Partition({m - i}));
      LaurentPoly coeff;
      if (side == Side::G) {
        coeff = kOne;
        for (int k = i + 1; k <= m - 1; ++k)
          coeff *= LaurentPoly::monomial(1, k) - kOne;
      } else {
        // sum over increasing subsets S of [m-1] with m-1-i elements of
        // prod_j (q+1)^(s_j - j) ((q+1)^j - 1)
        const int r = m - 1 - i;
        std::vector<int> subset(static_cast<std::size_t>(r));
        coeff = LaurentPoly();
        auto rec = [&](auto&& self, int pos, int next) -> void {
          if (pos == r) {
            LaurentPoly term = kOne;
            for (int jj = 1; jj <= r; ++jj) {
              const int s = subset[static_cast<std::size_t>(jj - 1)];
              term *= lp_pow(qp1, static_cast<unsigned long>(s - jj));
              term *= lp_pow(qp1, static_cast<unsigned long>(jj)) - kOne;
            }
            coeff += term;
            return;
          }
          for (int s = next; s <= m - 1; ++s) {
            subset[static_cast<std::size_t>(pos)] = s;
            self(self, pos + 1, s + 1);
          }
        };
        rec(rec, 0, 1);
      }
      total += part * coeff;
    }
    memo.push_back(std::move(total));
  }
  return memo[static_cast<std::size_t>(n)];
}

bool rectangular_factorization_check(int k, int n, const EnumOptions& opt) {
  if (k < 1 || k > n) fail(ErrorCode::BadParams, "need 1 <= k <= n");
  const SymFunc lhs = llt_poly(StripDiagram(family(Family::Rectangular, {k, n})), opt);
  const SymFunc gk = llt_poly(StripDiagram(family(Family::Complete, {k})), opt);
  const SymFunc gnk = llt_poly(StripDiagram(family(Family::Complete, {n - k})), opt);
  return lhs.equals(gk * gnk);
}

namespace {

// Shared scaffolding for the partition-indexed Lee reductions.
class AbelianReducer {
public:
  explicit AbelianReducer(int n) : n_(n) {}

  LinearExpr reduce(const Partition& lam) {
    if (!staircase_is_abelian(lam, n_))
      fail(ErrorCode::NotAbelian, lam.str() + " is not abelian inside the staircase of " +
                                      std::to_string(n_));
    return expr_for(lam, 0);
  }

private:
  static constexpr int kDepthSlack = 16;

  LinearExpr expr_for(const Partition& lam, int depth) {
    if (depth > 4 * n_ * n_ + kDepthSlack)
      fail(ErrorCode::ReductionDepthExceeded,
           "abelian reduction exceeded the depth bound at " + lam.str());
    auto it = memo_.find(lam);
    if (it != memo_.end()) return it->second;

    LinearExpr result;
    if (staircase_is_rectangular(lam, n_)) {
      // covers the empty and single-row (n-1) base cases as well
      result.add(kOne, kOne, StripDiagram(area_from_staircase(lam, n_)));
    } else if (lam.length() == 1) {
      result = row_reduction(lam, 1, depth);
    } else if (has_small_row(lam)) {
      result = removal_case(lam, depth);
    } else {
      result = growth_case(lam, depth);
    }
    memo_.emplace(lam, result);
    return result;
  }

  bool has_small_row(const Partition& lam) const {
    for (int i = 1; i <= lam.length(); ++i)
      if (lam.part(i) <= lam.length() - i) return true;
    return false;
  }

  static Partition adjust(const Partition& lam, int row, int delta) {
    std::vector<int> parts = lam.parts;
    while (static_cast<int>(parts.size()) < row) parts.push_back(0);
    parts[static_cast<std::size_t>(row - 1)] += delta;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
      if (parts[i] < parts[i + 1]) fail(ErrorCode::BadParams, "not a partition");
    return Partition(std::move(parts));
  }

  bool lee_edge_admissible(const Partition& base, int row, LeeVariant variant) const {
    const AreaSequence a0 = area_from_staircase(base, n_);
    const int j = n_ + 1 - row;
    if (j < 1 || a0.at(j) < 1) return false;
    const Edge e{j - a0.at(j), j};
    const auto cls = classify(a0);
    const auto& list = variant == LeeVariant::Lee ? cls.admissible : cls.dual_admissible;
    return std::find(list.begin(), list.end(), e) != list.end();
  }

  LinearExpr combine(const LaurentPoly& n1, const LaurentPoly& d1, const LinearExpr& e1,
                     const LaurentPoly& n2, const LaurentPoly& d2, const LinearExpr& e2) {
    LinearExpr out;
    for (const auto& t : e1.terms) out.add(n1 * t.num, d1 * t.den, t.diagram);
    for (const auto& t : e2.terms) out.add(n2 * t.num, d2 * t.den, t.diagram);
    return out;
  }

  // Telescoped Lee steps on one row:
  // [T+1]_q G_lam = G_mu + q [T]_q G_nu with T the row length.
  LinearExpr row_reduction(const Partition& lam, int row, int depth) {
    const int t_max = lam.part(row);
    const Partition mu = adjust(lam, row, -t_max);
    const Partition nu = adjust(lam, row, +1);
    for (int t = 0; t < t_max; ++t) {
      const Partition base = adjust(mu, row, +t);
      if (!lee_edge_admissible(base, row, LeeVariant::Lee))
        fail(ErrorCode::AdmissibilityViolation,
             "row reduction step not admissible at " + base.str());
    }
    const LaurentPoly den = q_bracket(t_max + 1);
    return combine(kOne, den, expr_for(mu, depth + 1), kQ * q_bracket(t_max), den,
                   expr_for(nu, depth + 1));
  }

  // Case with some row i satisfying lam_i <= l - i: a domino can be removed.
  LinearExpr removal_case(const Partition& lam, int depth) {
    const int l = lam.length();
    for (int r = 1; r <= l; ++r) {
      // horizontal: q G_lam = (1+q) G_{lam - e_r} - G_{lam - 2e_r}
      if (lam.part(r) - 2 >= lam.part(r + 1)) {
        const Partition base = adjust(adjust(lam, r, -1), r, -1);
        if (lee_edge_admissible(base, r, LeeVariant::Lee)) {
          const LaurentPoly one_plus_q = kOne + kQ;
          return combine(one_plus_q, kQ, expr_for(adjust(lam, r, -1), depth + 1), -kOne,
                         kQ, expr_for(base, depth + 1));
        }
      }
      // vertical: q G_lam = (1+q) G_{lam - e_{r+1}} - G_{lam - e_r - e_{r+1}}
      if (r < l && lam.part(r + 1) - 1 >= lam.part(r + 2) && lam.part(r) == lam.part(r + 1)) {
        const Partition base = adjust(adjust(lam, r + 1, -1), r, -1);
        if (lee_edge_admissible(base, r, LeeVariant::Dual)) {
          const LaurentPoly one_plus_q = kOne + kQ;
          return combine(one_plus_q, kQ, expr_for(adjust(lam, r + 1, -1), depth + 1),
                         -kOne, kQ, expr_for(base, depth + 1));
        }
      }
    }
    fail(ErrorCode::AdmissibilityViolation,
         "no admissible domino removal at " + lam.str());
  }

  // All rows long: grow toward a rectangle or drop the last row.
  LinearExpr growth_case(const Partition& lam, int depth) {
    const int l = lam.length();
    for (int r = 1; r <= l; ++r) {
      // horizontal addition: G_lam = (1+q) G_{lam + e_r} - q G_{lam + 2e_r}
      const bool fits_two = (r == 1 || lam.part(r - 1) >= lam.part(r) + 2);
      if (fits_two) {
        Partition plus1, plus2;
        try {
          plus1 = adjust(lam, r, +1);
          plus2 = adjust(lam, r, +2);
        } catch (const Error&) {
          continue;
        }
        if (staircase_is_abelian(plus2, n_) && plus2.part(1) <= n_ - 1 &&
            plus2.length() <= n_ && lee_edge_admissible(lam, r, LeeVariant::Lee)) {
          const LaurentPoly one_plus_q = kOne + kQ;
          return combine(one_plus_q, kOne, expr_for(plus1, depth + 1), -kQ, kOne,
                         expr_for(plus2, depth + 1));
        }
      }
    }
    for (int r = 1; r < l; ++r) {
      // vertical addition: G_lam = (1+q) G_{lam + e_r} - q G_{lam + e_r + e_{r+1}}
      Partition plus1, plus2;
      try {
        plus1 = adjust(lam, r, +1);
        plus2 = adjust(adjust(lam, r, +1), r + 1, +1);
      } catch (const Error&) {
        continue;
      }
      if (staircase_is_abelian(plus2, n_) && lee_edge_admissible(lam, r, LeeVariant::Dual)) {
        const LaurentPoly one_plus_q = kOne + kQ;
        return combine(one_plus_q, kOne, expr_for(plus1, depth + 1), -kQ, kOne,
                       expr_for(plus2, depth + 1));
      }
    }
    if (lam.part(l) < lam.part(l - 1)) return row_reduction(lam, l, depth);
    fail(ErrorCode::AdmissibilityViolation, "no applicable growth step at " + lam.str());
  }

  int n_;
  std::map<Partition, LinearExpr> memo_;
};

}  // namespace

LinearExpr abelian_reduce(const Partition& lam, int n) {
  (void)area_from_staircase(lam, n);  // validates the staircase bound
  AbelianReducer reducer(n);
  return reducer.reduce(lam);
}

AreaSequence melting_lollipop_area(int m, int k, int nline) {
  if (m < 1 || nline < 0 || k < 0 || k > m - 1)
    fail(ErrorCode::BadParams, "melting lollipop needs m >= 1, 0 <= k <= m-1, nline >= 0");
  std::vector<int> a;
  for (int i = 1; i < m; ++i) a.push_back(i - 1);
  a.push_back(m - 1 - k);
  for (int i = 0; i < nline; ++i) a.push_back(1);
  return AreaSequence(std::move(a));
}

bool is_complete_plus_line(const AreaSequence& a) {
  const int n = a.n();
  if (n == 0) return true;
  std::vector<int> zeros;
  for (int i = 1; i <= n; ++i)
    if (a.at(i) == 0) zeros.push_back(i);
  auto is_complete_run = [&](int lo, int hi) {
    for (int i = lo; i <= hi; ++i)
      if (a.at(i) != i - lo) return false;
    return true;
  };
  auto is_line_run = [&](int lo, int hi) {
    if (a.at(lo) != 0) return false;
    for (int i = lo + 1; i <= hi; ++i)
      if (a.at(i) != 1) return false;
    return true;
  };
  if (zeros.size() == 1) return is_complete_run(1, n) || is_line_run(1, n);
  if (zeros.size() == 2)
    return is_complete_run(1, zeros[1] - 1) && is_line_run(zeros[1], n);
  return false;
}

namespace {

LinearExpr melting_reduce_impl(int m, int k, int nline, int depth) {
  if (depth > 4 * (m + nline) + 8)
    fail(ErrorCode::ReductionDepthExceeded, "melting lollipop reduction too deep");
  const AreaSequence a = melting_lollipop_area(m, k, nline);
  LinearExpr out;
  if (is_complete_plus_line(a)) {
    out.add(kOne, kOne, StripDiagram(a));
    return out;
  }
  if (k == 0) {
    // same sequence re-read with the complete prefix one longer
    const LinearExpr sub = melting_reduce_impl(m + 1, m - 1, nline - 1, depth + 1);
    if (melting_lollipop_area(m + 1, m - 1, nline - 1) != a)
      throw std::logic_error("melting lollipop reparameterization mismatch");
    return sub;
  }
  // telescoped Lee steps in row m, between k=0 and the split base k=m-1
  for (int t = 0; t <= m - 3; ++t) {
    const AreaSequence base = melting_lollipop_area(m, t, nline);
    const Edge e{t + 1, m};
    const auto adm = classify(base).admissible;
    if (std::find(adm.begin(), adm.end(), e) == adm.end())
      fail(ErrorCode::AdmissibilityViolation,
           "melting lollipop Lee step not admissible at " + base.str());
  }
  // F_k = (([m-1]_q - [m-1-k]_q) F_{m-1} + [m-1-k]_q F_0) / [m-1]_q
  const LaurentPoly den = q_bracket(m - 1);
  const LaurentPoly c0 = q_bracket(m - 1 - k);
  const LaurentPoly cbase = den - c0;
  const AreaSequence split = melting_lollipop_area(m, m - 1, nline);
  if (!is_complete_plus_line(split))
    throw std::logic_error("melting lollipop base is not complete plus line");
  out.add(cbase, den, StripDiagram(split));
  const LinearExpr f0 = melting_reduce_impl(m, 0, nline, depth + 1);
  for (const auto& t : f0.terms) out.add(c0 * t.num, den * t.den, t.diagram);
  return out;
}

}  // namespace

LinearExpr melting_lollipop_reduce(int m, int k, int nline) {
  LinearExpr expr = melting_reduce_impl(m, k, nline, 0);
  for (const auto& t : expr.terms)
    if (!is_complete_plus_line(t.diagram.area))
      throw std::logic_error("melting lollipop reduction left a non-base term");
  return expr;
}

}  // namespace llt
