#include "lltlab/charge.hpp"

#include "lltlab/orientations.hpp"

namespace llt {

namespace {

int weight_over(const AreaSequence& a, const std::set<int>& positions) {
  const int n = a.n();
  int w = 0;
  for (int i : positions) w += a.at(n + 1 - i);
  return w;
}

}  // namespace

int wt(const AreaSequence& a, const Tableau& t) {
  if (t.size() != a.n())
    fail(ErrorCode::SizeMismatch, "tableau size differs from the area sequence length");
  return weight_over(a, t.descent_set());
}

int modwt(const AreaSequence& a, const Tableau& t) {
  if (t.size() != a.n())
    fail(ErrorCode::SizeMismatch, "tableau size differs from the area sequence length");
  const auto des = t.descent_set();
  std::set<int> rest;
  for (int i = 1; i < a.n(); ++i)
    if (!des.count(i)) rest.insert(i);
  return weight_over(a, rest);
}

SymFunc g_tilde(const AreaSequence& a) {
  const int n = a.n();
  SymFunc out(n, Basis::S);
  for (const auto& lam : partitions_of(n)) {
    LaurentPoly c;
    for (const auto& [tab, des] : syt_enumerate(lam))
      c += LaurentPoly::monomial(1, weight_over(a, des));
    if (!c.is_zero()) out.add_term(lam, c);
  }
  return out;
}

FamilyMatch detect_family(const AreaSequence& a) {
  const int n = a.n();
  auto matches = [&](const AreaSequence& b) { return a == b; };
  FamilyMatch m;
  if (n >= 0 && matches(family(Family::Complete, {n}))) {
    m.matched = true;
    m.description = "complete(" + std::to_string(n) + ")";
    return m;
  }
  if (n >= 1 && matches(family(Family::Line, {n}))) {
    m.matched = true;
    m.description = "line(" + std::to_string(n) + ")";
    return m;
  }
  for (int p = 1; p < n; ++p) {
    if (matches(family(Family::Lollipop, {p, n - p}))) {
      m.matched = true;
      m.description = "lollipop(" + std::to_string(p) + "," + std::to_string(n - p) + ")";
      return m;
    }
  }
  if (n >= 1)
    for (int k = 0; k <= n - 1; ++k)
      if (matches(family(Family::MeltingComplete, {n, k}))) {
        m.matched = true;
        m.description = "melting_complete(" + std::to_string(n) + "," + std::to_string(k) + ")";
        return m;
      }
  for (int p = 1; p < n; ++p)
    for (int k = 0; k <= p - 1; ++k)
      if (matches(family(Family::MeltingLollipop, {p, k, n - p}))) {
        m.matched = true;
        m.description = "melting_lollipop(" + std::to_string(p) + "," + std::to_string(k) +
                        "," + std::to_string(n - p) + ")";
        return m;
      }
  return m;
}

bool check_family_equality(const AreaSequence& a, const EnumOptions& opt) {
  if (!detect_family(a).matched)
    fail(ErrorCode::NotInFamilies, a.str() + " is not in the named graph families");
  return g_tilde(a).equals(llt_poly(StripDiagram(a), opt));
}

bool check_charge_theorem(const AreaSequence& a, const EnumOptions& opt) {
  const SymFunc lhs = g_tilde(a).shifted_coeffs(VarShift::QPlusOne);
  const SymFunc rhs = charge_rhs(a, Form::Shifted, opt);
  return lhs.equals(rhs);
}

bool check_fixed_tableau_identity(const AreaSequence& a, const Tableau& t,
                                  const EnumOptions& opt) {
  if (t.size() != a.n())
    fail(ErrorCode::SizeMismatch, "tableau size differs from the area sequence length");
  const int n = a.n();
  const auto des = t.descent_set();
  const LaurentPoly qp1(0, {mpz_class(1), mpz_class(1)});
  LaurentPoly lhs(1);
  for (int i = 1; i < n; ++i)
    if (!des.count(i)) lhs *= lp_pow(qp1, static_cast<unsigned long>(a.at(n + 1 - i)));

  const OrientationContext ctx(StripDiagram(a), opt);
  LaurentPoly rhs;
  for (std::uint64_t mask = 0; mask < ctx.count(); ++mask) {
    const auto d = d_set(ctx.sigma(mask));
    bool inside = true;
    for (int i : des)
      if (!d.count(i)) {
        inside = false;
        break;
      }
    if (inside) rhs += LaurentPoly::monomial(1, ctx.asc(mask));
  }
  return lhs == rhs;
}

}  // namespace llt
