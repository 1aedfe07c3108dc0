#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "lltlab/error.hpp"

namespace llt {

/// Integer partition: weakly decreasing positive parts.  The empty partition
/// is the unique partition of 0.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);  // validates

  int size() const;                      // |lambda|
  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const {                // 1-based, 0 beyond the length
    return (i >= 1 && i <= length()) ? parts[static_cast<std::size_t>(i - 1)] : 0;
  }
  bool empty() const { return parts.empty(); }

  std::string str() const;

  friend auto operator<=>(const Partition& a, const Partition& b) = default;
};

/// Composition: ordered sequence of positive parts.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p);  // validates

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  std::string str() const;

  Partition sorted() const;

  friend auto operator<=>(const Composition& a, const Composition& b) = default;
};

/// All partitions of n, lexicographically decreasing: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

Partition conjugate(const Partition& lam);

/// Dominance order: mu <= lam iff every prefix sum of mu is at most the
/// corresponding prefix sum of lam.  Requires |mu| = |lam|.
bool dominance_leq(const Partition& mu, const Partition& lam);

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of the conjugacy
/// class of cycle type lambda.
long z_of(const Partition& lam);

/// D(gamma): the set of partial sums of gamma, total included.  Consumers of
/// "Des(T) subset of D(gamma)" intersect with [n-1] first since descent sets
/// never contain n.
std::set<int> d_set(const Composition& gamma);

/// Young tableau in English convention: rows weakly increase left to right,
/// columns strictly increase top to bottom.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {}

  Partition shape() const;
  int size() const;
  bool is_semistandard() const;
  bool is_standard() const;

  /// Rows read bottom to top, left to right within each row.
  std::vector<int> reading_word() const;

  /// Des(T) = { i : i+1 appears before i in the reading word }.  Requires a
  /// standard tableau.
  std::set<int> descent_set() const;

  Tableau transposed() const;

  std::string str() const;

  friend auto operator<=>(const Tableau& a, const Tableau& b) = default;
};

/// All standard Young tableaux of the given shape, each with its descent set.
std::vector<std::pair<Tableau, std::set<int>>> syt_enumerate(const Partition& lam);

/// All semistandard tableaux of shape lam and content gamma.
std::vector<Tableau> ssyt_enumerate(const Partition& lam, const Composition& gamma);

/// Kostka number |SSYT(lam, gamma)|.  Requires |lam| = |gamma|.
long kostka(const Partition& lam, const Composition& gamma);

}  // namespace llt
