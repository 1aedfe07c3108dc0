#pragma once

// Brute-force reference computations shared by the test suites.  Everything
// here is independent of the library's conversion and enumeration paths.

#include <algorithm>
#include <map>
#include <vector>

#include "lltlab/symfunc.hpp"

namespace llt::testing {

using VarPoly = std::map<std::vector<int>, LaurentPoly>;

/// Expands a symmetric function into an explicit polynomial in `nvars`
/// variables (exponent vector -> coefficient).
inline VarPoly expand_in_vars(const SymFunc& f, int nvars) {
  VarPoly out;
  const SymFunc m = f.converted(Basis::M);
  for (const auto& [lam, c] : m.terms()) {
    if (lam.length() > nvars) continue;
    std::vector<int> expo(static_cast<std::size_t>(nvars), 0);
    std::copy(lam.parts.begin(), lam.parts.end(), expo.begin());
    std::sort(expo.begin(), expo.end());
    do {
      out[expo] += c;
    } while (std::next_permutation(expo.begin(), expo.end()));
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

inline VarPoly var_poly_mult(const VarPoly& a, const VarPoly& b) {
  VarPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace llt::testing
