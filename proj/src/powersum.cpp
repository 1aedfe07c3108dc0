#include "lltlab/powersum.hpp"

#include "lltlab/orientations.hpp"

namespace llt {

Poset::Poset(int n)
    : n_(n), le_(static_cast<std::size_t>(n) + 1,
                 std::vector<bool>(static_cast<std::size_t>(n) + 1, false)) {
  for (int v = 0; v <= n; ++v) le_[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = true;
}

void Poset::add_relation(int u, int v) {
  if (u < 1 || v <= u || v > n_)
    fail(ErrorCode::BadParams, "poset relations must go upward in label");
  le_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
}

void Poset::close() {
  for (int k = 1; k <= n_; ++k)
    for (int i = 1; i <= n_; ++i) {
      if (!le_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) continue;
      for (int j = 1; j <= n_; ++j)
        if (le_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
          le_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    }
}

Poset poset_of_orientation(const StripDiagram& d, std::uint64_t mask) {
  if (!d.is_unicellular())
    fail(ErrorCode::StrictEdgesPresent,
         "orientation posets are defined for unicellular diagrams only");
  const auto edges = edges_of(d.area);
  Poset p(d.n());
  for (std::size_t b = 0; b < edges.size(); ++b)
    if ((mask >> b) & 1) p.add_relation(edges[b].first, edges[b].second);
  p.close();
  return p;
}

Poset chains_poset(const Partition& lam) {
  Poset p(lam.size());
  int start = 1;
  for (int part : lam.parts) {
    for (int v = start; v < start + part - 1; ++v) p.add_relation(v, v + 1);
    start += part;
  }
  p.close();
  return p;
}

long count_star_surjections(const Poset& p, const Composition& alpha) {
  const int n = p.size();
  if (alpha.size() != n)
    fail(ErrorCode::SizeMismatch, "surjection type must have total size |P|");
  const int k = alpha.length();
  std::vector<int> rem = alpha.parts;
  std::vector<int> level(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> minima(static_cast<std::size_t>(k) + 1, 0);
  long count = 0;

  // Vertices are assigned in label order; predecessors always carry smaller
  // labels, so order preservation and block minimality are decided on
  // assignment.
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      ++count;
      return;
    }
    int lo = 1;
    for (int u = 1; u < v; ++u)
      if (p.less(u, v)) lo = std::max(lo, level[static_cast<std::size_t>(u)]);
    for (int j = lo; j <= k; ++j) {
      if (rem[static_cast<std::size_t>(j - 1)] == 0) continue;
      bool is_min = true;
      for (int u = 1; u < v && is_min; ++u)
        if (level[static_cast<std::size_t>(u)] == j && p.less(u, v)) is_min = false;
      if (is_min && minima[static_cast<std::size_t>(j)] == 1) continue;  // two minima
      --rem[static_cast<std::size_t>(j - 1)];
      level[static_cast<std::size_t>(v)] = j;
      if (is_min) ++minima[static_cast<std::size_t>(j)];
      self(self, v + 1);
      if (is_min) --minima[static_cast<std::size_t>(j)];
      level[static_cast<std::size_t>(v)] = 0;
      ++rem[static_cast<std::size_t>(j - 1)];
    }
  };
  rec(rec, 1);
  return count;
}

LaurentPoly star_surjection_series(const AreaSequence& a, const Partition& lam,
                                   bool chains, const EnumOptions& opt) {
  if (lam.size() != a.n()) fail(ErrorCode::SizeMismatch, "partition size must equal n");
  const StripDiagram d(a);
  const OrientationContext ctx(d, opt);
  const Composition type(lam.parts);
  LaurentPoly out;
  for (std::uint64_t mask = 0; mask < ctx.count(); ++mask) {
    const Poset p = chains ? chains_poset(ctx.hrvpp(mask)) : poset_of_orientation(d, mask);
    const long c = count_star_surjections(p, type);
    if (c) out += LaurentPoly::monomial(c, ctx.asc(mask));
  }
  return out;
}

bool check_pexpansion(const AreaSequence& a, const EnumOptions& opt) {
  const int n = a.n();
  const RatSymFunc lhs =
      to_p_basis(llt_poly(StripDiagram(a), opt).omega().shifted_coeffs(VarShift::QPlusOne));
  RatSymFunc rhs(n, Basis::P);
  for (const auto& lam : partitions_of(n)) {
    RatLaurentPoly c(star_surjection_series(a, lam, /*chains=*/false, opt));
    c /= mpq_class(z_of(lam));
    rhs.add_term(lam, c);
  }
  return lhs.equals(rhs);
}

bool check_equivalent_conjecture(const AreaSequence& a, const Partition& lam,
                                 const EnumOptions& opt) {
  return star_surjection_series(a, lam, false, opt) ==
         star_surjection_series(a, lam, true, opt);
}

RatSymFunc chains_power_sum(const Partition& rho) {
  const Poset b = chains_poset(rho);
  RatSymFunc out(rho.size(), Basis::P);
  for (const auto& lam : partitions_of(rho.size())) {
    const long c = count_star_surjections(b, Composition(lam.parts));
    if (c) {
      RatLaurentPoly coeff(static_cast<long>(c));
      coeff /= mpq_class(z_of(lam));
      out.add_term(lam, coeff);
    }
  }
  return out;
}

}  // namespace llt
