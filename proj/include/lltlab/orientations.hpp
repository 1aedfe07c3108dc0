#pragma once

#include <cstdint>
#include <vector>

#include "lltlab/colorings.hpp"
#include "lltlab/diagrams.hpp"
#include "lltlab/symfunc.hpp"

namespace llt {

/// Precomputed orientation machinery for one diagram.  An orientation is a
/// bitmask over edges_of(area) in canonical order; a set bit means the edge
/// is oriented as in Gamma_a (ascending).  Strict edges carry no bit and
/// never count as ascending, but they do join the hrv reachability.
class OrientationContext {
public:
  explicit OrientationContext(StripDiagram d, const EnumOptions& opt = {});

  const StripDiagram& diagram() const { return diagram_; }
  int n() const { return diagram_.n(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::uint64_t count() const { return std::uint64_t{1} << edge_count(); }
  const std::vector<Edge>& edges() const { return edges_; }

  int asc(std::uint64_t mask) const;

  /// Highest reachable vertex along strict-or-ascending edges, one entry per
  /// vertex.  Single reverse sweep; labels increase along such edges, so
  /// label order is a topological order.
  std::vector<int> hrv(std::uint64_t mask) const;

  /// Sorted block sizes of the hrv fibers.
  Partition hrvpp(std::uint64_t mask) const;

  /// Bottoms composition: parts are the gaps between consecutive bottoms read
  /// from the top.  Only defined on unicellular diagrams.
  Composition sigma(std::uint64_t mask) const;

private:
  friend SymFunc orientation_sum_impl(const OrientationContext&, bool, const EnumOptions&);

  StripDiagram diagram_;
  std::vector<Edge> edges_;
  // per source vertex: (edge bit, target) pairs, plus strict targets
  std::vector<std::vector<std::pair<int, int>>> out_edges_;
  std::vector<std::vector<int>> strict_out_;
  std::vector<std::uint64_t> in_mask_;  // bits of edges ending at each vertex
};

/// LLTc_{a,s}: the orientation sum over O(a,s) of q^asc(theta) e_hrvpp(theta).
/// Shifted returns the sum itself (the polynomial whose variable plays the
/// role of q in the q+1 form); Plain substitutes q -> q-1, giving the
/// function conjectured equal to G_{a,s}(x;q).
SymFunc lltc_poly(const StripDiagram& d, Form form = Form::Plain,
                  const EnumOptions& opt = {});

/// The charge-theorem right hand side: orientation sum of q^asc e_sigma over
/// O(a).  Same Shifted/Plain convention as lltc_poly.
SymFunc charge_rhs(const AreaSequence& a, Form form = Form::Shifted,
                   const EnumOptions& opt = {});

/// Main conjecture instance: G_{a,s}(x;q) == LLTc_{a,s}(x;q).
bool check_main_conjecture(const StripDiagram& d, const EnumOptions& opt = {});

struct OrientationRecord {
  std::uint64_t mask;
  int asc;
  Partition hrvpp;
  Composition sigma;  // empty when strict edges are present
};

std::vector<OrientationRecord> dump_orientations(const StripDiagram& d,
                                                 const EnumOptions& opt = {});

}  // namespace llt
