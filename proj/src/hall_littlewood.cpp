#include "lltlab/hall_littlewood.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lltlab/orientations.hpp"

namespace llt {

SymFunc hl_transformed(const Partition& lam, HLSeries series) {
  const int n = lam.size();
  if (n == 0) return SymFunc::one(Basis::H);

  // Operator pairs run over the zero-padded index vector of length n.
  // Groups are processed by decreasing second index j; once a group is done
  // no later operator touches entry j, so each geometric series can be
  // truncated at the current entry (anything below zero stays dead).
  std::vector<int> start(static_cast<std::size_t>(n), 0);
  std::copy(lam.parts.begin(), lam.parts.end(), start.begin());
  std::map<std::vector<int>, LaurentPoly> state;
  state[start] = LaurentPoly(1);

  const LaurentPoly one(1);
  const LaurentPoly qp1(0, {mpz_class(1), mpz_class(1)});
  for (int j = n; j >= 2; --j) {
    for (int i = j - 1; i >= 1; --i) {
      std::map<std::vector<int>, LaurentPoly> next;
      for (const auto& [v, c] : state) {
        const int cap = v[static_cast<std::size_t>(j - 1)];
        std::vector<int> w = v;
        for (int t = 0; t <= cap; ++t) {
          LaurentPoly coeff;
          if (t == 0) {
            coeff = one;
          } else if (series == HLSeries::Standard) {
            coeff = LaurentPoly::monomial(1, t) - LaurentPoly::monomial(1, t - 1);
          } else {
            coeff = LaurentPoly::q() * lp_pow(qp1, static_cast<unsigned long>(t - 1));
          }
          if (t > 0) {
            ++w[static_cast<std::size_t>(i - 1)];
            --w[static_cast<std::size_t>(j - 1)];
          }
          auto [it, fresh] = next.emplace(w, c * coeff);
          if (!fresh) {
            it->second += c * coeff;
            if (it->second.is_zero()) next.erase(it);
          }
        }
      }
      state = std::move(next);
    }
  }

  SymFunc out(n, Basis::H);
  for (const auto& [v, c] : state) {
    std::vector<int> parts;
    bool dead = false;
    for (int x : v) {
      if (x < 0) dead = true;
      if (x > 0) parts.push_back(x);
    }
    if (dead) continue;
    std::sort(parts.rbegin(), parts.rend());
    out.add_term(Partition(std::move(parts)), c);
  }
  return out;
}

LaurentPoly kostka_foulkes(const Partition& lam, const Partition& mu) {
  if (lam.size() != mu.size())
    fail(ErrorCode::SizeMismatch, "Kostka-Foulkes needs |lambda| = |mu|");
  return hl_transformed(mu, HLSeries::Standard).converted(Basis::S).coeff(lam);
}

namespace {

std::set<Edge> gamma_mu_edge_set(const Partition& mu, std::set<Edge>* clique_edges) {
  // Cliques live on the consecutive blocks of mu; block j ends at the
  // partial sum s_j.  Between block j-1 and block j there is a triangle of
  // binom(mu_j, 2) extra edges s_{j-1}-i -> s_{j-1}+k+1 with i+k <= mu_j-2.
  // The triangle bound is pinned by that count and by the worked nine-vertex
  // diagram; the looser i+k <= mu_j-1 bound would contradict both.
  std::set<Edge> edges;
  const int l = mu.length();
  std::vector<int> s(static_cast<std::size_t>(l) + 1, 0);
  for (int j = 1; j <= l; ++j)
    s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + mu.part(j);
  for (int j = 1; j <= l; ++j) {
    const int lo = s[static_cast<std::size_t>(j - 1)] + 1;
    const int hi = s[static_cast<std::size_t>(j)];
    for (int u = lo; u <= hi; ++u)
      for (int v = u + 1; v <= hi; ++v) edges.insert({u, v});
  }
  if (clique_edges) *clique_edges = edges;
  for (int j = 2; j <= l; ++j) {
    const int sj1 = s[static_cast<std::size_t>(j - 1)];
    for (int i = 0; i <= mu.part(j) - 2; ++i)
      for (int k = 0; i + k <= mu.part(j) - 2; ++k)
        edges.insert({sj1 - i, sj1 + k + 1});
  }
  return edges;
}

}  // namespace

StripDiagram gamma_mu(const Partition& mu) {
  if (mu.empty()) fail(ErrorCode::BadParams, "gamma_mu needs a nonempty partition");
  const int n = mu.size();
  const std::set<Edge> edges = gamma_mu_edge_set(mu, nullptr);
  std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u < 1 || v > n) fail(ErrorCode::NotUnitInterval, "edge outside the vertex range");
    ++indeg[static_cast<std::size_t>(v)];
  }
  for (int v = 1; v <= n; ++v)
    for (int u = v - indeg[static_cast<std::size_t>(v)]; u < v; ++u)
      if (!edges.count({u, v}))
        fail(ErrorCode::NotUnitInterval,
             "in-neighborhood of " + std::to_string(v) + " is not an interval");
  std::vector<int> a(indeg.begin() + 1, indeg.end());
  AreaSequence area;
  try {
    area = AreaSequence(std::move(a));
  } catch (const Error&) {
    fail(ErrorCode::NotUnitInterval, "assembled in-degrees are not an area sequence");
  }
  const StripDiagram bare(area);
  return StripDiagram(area, outer_corners(bare));
}

std::vector<Edge> gamma_mu_triangle_edges(const Partition& mu) {
  std::set<Edge> cliques;
  const std::set<Edge> all = gamma_mu_edge_set(mu, &cliques);
  std::vector<Edge> out;
  for (const Edge& e : all)
    if (!cliques.count(e)) out.push_back(e);
  long expected = 0;
  for (int i = 2; i <= mu.length(); ++i)
    expected += static_cast<long>(mu.part(i)) * (mu.part(i) - 1) / 2;
  if (static_cast<long>(out.size()) != expected)
    throw std::logic_error("triangle edge count mismatch in gamma_mu");
  return out;
}

bool check_hl_relation(const Partition& mu, const EnumOptions& opt) {
  const StripDiagram d = gamma_mu(mu);
  const SymFunc lhs = llt_poly(d, opt).omega();
  long a_exp = 0;
  for (int i = 2; i <= mu.length(); ++i)
    a_exp += static_cast<long>(mu.part(i)) * (mu.part(i) - 1) / 2;
  const SymFunc rhs = hl_transformed(conjugate(mu), HLSeries::Standard) *
                      LaurentPoly::monomial(1, a_exp);
  return lhs.equals(rhs);
}

SymFunc hl_restricted_orientation_sum(const Partition& mu, bool count_forced,
                                      const EnumOptions& opt) {
  const StripDiagram d = gamma_mu(mu);
  const OrientationContext ctx(d, opt);
  const auto triangle = gamma_mu_triangle_edges(mu);
  std::uint64_t forced = 0;
  for (const Edge& e : triangle) {
    const auto it = std::find(ctx.edges().begin(), ctx.edges().end(), e);
    forced |= std::uint64_t{1} << (it - ctx.edges().begin());
  }
  std::vector<int> free_bits;
  for (int b = 0; b < ctx.edge_count(); ++b)
    if (!((forced >> b) & 1)) free_bits.push_back(b);

  SymFunc out(d.n(), Basis::E);
  const std::uint64_t free_total = std::uint64_t{1} << free_bits.size();
  for (std::uint64_t pick = 0; pick < free_total; ++pick) {
    std::uint64_t mask = forced;
    for (std::size_t b = 0; b < free_bits.size(); ++b)
      if ((pick >> b) & 1) mask |= std::uint64_t{1} << free_bits[b];
    int asc = ctx.asc(mask);
    if (!count_forced) asc -= static_cast<int>(triangle.size());
    out.add_term(ctx.hrvpp(mask), LaurentPoly::monomial(1, asc));
  }
  return out;
}

}  // namespace llt
