#pragma once

#include <string>

#include "lltlab/colorings.hpp"
#include "lltlab/diagrams.hpp"
#include "lltlab/partitions.hpp"
#include "lltlab/symfunc.hpp"

namespace llt {

/// Generalized cocharge: wt_a(T) = sum over Des(T) of a_{n+1-i}, and its
/// complement modwt over [n-1] \ Des(T).  Requires a standard tableau of
/// size n.
int wt(const AreaSequence& a, const Tableau& t);
int modwt(const AreaSequence& a, const Tableau& t);

/// The Schur positive companion sum over all standard tableaux weighted by
/// q^wt.
SymFunc g_tilde(const AreaSequence& a);

struct FamilyMatch {
  bool matched = false;
  std::string description;
};

/// Matches the sequence against the named families (complete, line,
/// lollipop, melting complete, melting lollipop).
FamilyMatch detect_family(const AreaSequence& a);

/// g_tilde == G on the named families; NotInFamilies otherwise.
bool check_family_equality(const AreaSequence& a, const EnumOptions& opt = {});

/// The charge orientation theorem: g_tilde(x;q+1) equals the sigma-indexed
/// orientation sum.
bool check_charge_theorem(const AreaSequence& a, const EnumOptions& opt = {});

/// Fixed tableau identity: prod over non-descents of (1+q)^{a_{n+1-i}}
/// equals the asc-weighted count of orientations whose bottoms cover the
/// descents of T.
bool check_fixed_tableau_identity(const AreaSequence& a, const Tableau& t,
                                  const EnumOptions& opt = {});

}  // namespace llt
