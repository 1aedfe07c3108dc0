#pragma once

#include "lltlab/colorings.hpp"
#include "lltlab/diagrams.hpp"
#include "lltlab/symfunc.hpp"

namespace llt {

enum class HLSeries { Standard, Shifted };

/// Transformed Hall-Littlewood polynomial via raising operators:
/// H_lambda(x;q) = prod_{i<j} (1-R_ij)/(1-q R_ij) h_lambda(x), returned in
/// the h basis.  Shifted evaluates the series with coefficients q(1+q)^(t-1)
/// instead, producing H_lambda(x;q+1) directly; every coefficient of that
/// form lies in N[q].
SymFunc hl_transformed(const Partition& lam, HLSeries series);

/// Kostka-Foulkes polynomial: the s_lambda coefficient of H_mu(x;q).
LaurentPoly kostka_foulkes(const Partition& lam, const Partition& mu);

/// The vertical strip diagram attached to a partition mu: consecutive
/// cliques on the blocks of mu joined by triangles of extra edges, with all
/// outer corners marked strict.
StripDiagram gamma_mu(const Partition& mu);

/// The triangle edges of gamma_mu that are not clique edges; there are
/// sum_{i>=2} binom(mu_i, 2) of them.
std::vector<Edge> gamma_mu_triangle_edges(const Partition& mu);

/// omega G_{gamma_mu}(x;q) == q^(number of triangle edges) H_{mu'}(x;q).
bool check_hl_relation(const Partition& mu, const EnumOptions& opt = {});

/// Orientation sum restricted to triangle edges oriented ascending, with the
/// forced edges either counted in asc or not.  The natural guess equating
/// this with omega H_{mu'}(x;q+1) fails at mu = (2,2,2); the harness exists
/// to reproduce that failure.
SymFunc hl_restricted_orientation_sum(const Partition& mu, bool count_forced,
                                      const EnumOptions& opt = {});

}  // namespace llt
