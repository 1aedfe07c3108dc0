#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "lltlab/error.hpp"
#include "lltlab/partitions.hpp"

namespace llt {

using Edge = std::pair<int, int>;  // (u, v) with u < v, vertices 1-based

/// Area sequence of a Dyck diagram: 0 <= a_i <= i-1 and a_{i+1} <= a_i + 1.
/// Encodes the unit-interval graph on [n] with edges (i-a_i) -> i, ...,
/// (i-1) -> i.
struct AreaSequence {
  std::vector<int> a;

  AreaSequence() = default;
  explicit AreaSequence(std::vector<int> entries);  // validates

  int n() const { return static_cast<int>(a.size()); }
  int at(int i) const { return a[static_cast<std::size_t>(i - 1)]; }  // 1-based
  int area_sum() const;

  bool has_edge(int u, int v) const;  // u < v
  std::string str() const;            // "0,1,2,3,2,2"

  friend auto operator<=>(const AreaSequence& x, const AreaSequence& y) = default;
};

AreaSequence area_from_string(const std::string& text);

/// All area sequences of length n; the count is the nth Catalan number.
std::vector<AreaSequence> enumerate_area_sequences(int n);

/// Directed edges of Gamma_a, sorted by target then source.  This order is
/// the canonical bit order for orientation masks.
std::vector<Edge> edges_of(const AreaSequence& a);

/// Transpose: reverse every edge and relabel j -> n+1-j.
AreaSequence transpose(const AreaSequence& a);

/// Dyck diagram with marked strict edges.  Canonical vertical-strip form has
/// every strict edge an outer corner of Gamma_a; the recursion machinery also
/// builds generalized diagrams whose strict pairs are arbitrary non-edges.
struct StripDiagram {
  AreaSequence area;
  std::vector<Edge> strict;  // sorted, deduplicated

  StripDiagram() = default;
  explicit StripDiagram(AreaSequence a, std::vector<Edge> s = {});

  int n() const { return area.n(); }
  bool is_unicellular() const { return strict.empty(); }
  bool is_canonical() const;  // every strict edge an outer corner of Gamma_a
  std::string str() const;

  friend auto operator<=>(const StripDiagram& x, const StripDiagram& y) = default;
};

std::vector<Edge> strict_from_string(const std::string& text);  // "2-5,3-6"

/// Outer corners of the diagram: non-edges (u,v) with u+1 = v, or with both
/// (u+1,v) and (u,v-1) edges; pairs already strict in d are excluded.
std::vector<Edge> outer_corners(const StripDiagram& d);

enum class Family { Complete, Line, Lollipop, MeltingLollipop, MeltingComplete, Rectangular };

Family family_from_name(const std::string& name);
const char* family_name(Family f);

/// The named graph families.  Parameter meanings:
///   complete(n); line(n); lollipop(m, n); melting_complete(n, k);
///   melting_lollipop(m, k, n); rectangular(k, n).
AreaSequence family(Family kind, const std::vector<int>& params);

struct Classification {
  bool is_rectangular = false;
  bool is_abelian = false;
  std::vector<Edge> admissible;
  std::vector<Edge> dual_admissible;
};

Classification classify(const AreaSequence& a);

/// Staircase indexing: lambda_i = n - i - a_{n+1-i}.  The partition records
/// the shaded non-edge cells of the Dyck diagram.
Partition staircase_partition(const AreaSequence& a);
AreaSequence area_from_staircase(const Partition& lam, int n);

/// lambda fits some k x (n-k) rectangle, i.e. the area sequence is abelian.
bool staircase_is_abelian(const Partition& lam, int n);
/// lambda equals k^(n-k) for some k in [n] (the empty partition included).
bool staircase_is_rectangular(const Partition& lam, int n);

}  // namespace llt
