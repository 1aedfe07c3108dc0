#pragma once

#include <vector>

#include "lltlab/diagrams.hpp"
#include "lltlab/symfunc.hpp"

namespace llt {

struct EnumOptions {
  int max_vertices = 8;  // coloring enumeration bound on n
  int max_bits = 26;     // orientation enumeration bound on the edge count
  int threads = 0;       // 0: use the process-wide default
};

/// The vertical-strip LLT polynomial G_{a,s}(x;q): the generating function of
/// valid colorings kappa:[n] -> [n] weighted by x^kappa q^asc(kappa), binned
/// into the monomial basis.  Strict edges force kappa(u) < kappa(v) and never
/// count as ascents.
SymFunc llt_poly(const StripDiagram& d, const EnumOptions& opt = {});

/// The chromatic quasisymmetric function X_a(x;q): same sum restricted to
/// proper colorings of Gamma_a.
SymFunc chromatic_qsym(const AreaSequence& a, const EnumOptions& opt = {});

/// Checks (q-1)^{-n} G_a[x(q-1);q] = X_a(x;q) in the multiplied form
/// pleth(G_a) == (q-1)^n X_a, both sides expanded over the rationals in the
/// power-sum basis.
bool check_pleth_relation(const AreaSequence& a, const EnumOptions& opt = {});

/// Ascent count of one explicit coloring; validates the strict constraints.
int asc_of_coloring(const StripDiagram& d, const std::vector<int>& colors);

}  // namespace llt
