#pragma once

#include <cstdint>

#include "lltlab/colorings.hpp"
#include "lltlab/diagrams.hpp"
#include "lltlab/symfunc.hpp"

namespace llt {

/// Finite poset on 1..n whose relations only go upward in label (the
/// ascending-edge digraphs and chain unions used here all have that form).
class Poset {
public:
  explicit Poset(int n);

  int size() const { return n_; }
  void add_relation(int u, int v);  // requires u < v
  void close();                     // transitive closure
  bool less(int u, int v) const {   // strict order
    return u != v && le_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  }

private:
  int n_;
  std::vector<std::vector<bool>> le_;
};

/// Transitive closure of the ascending edges of an orientation of a
/// unicellular diagram.
Poset poset_of_orientation(const StripDiagram& d, std::uint64_t mask);

/// Disjoint union of chains with the given lengths, labels increasing along
/// each chain.
Poset chains_poset(const Partition& lam);

/// Number of order-preserving surjections onto [k] of type alpha whose level
/// blocks each have a unique minimal element.
long count_star_surjections(const Poset& p, const Composition& alpha);

/// sum over orientations of q^asc |O*_lambda(P(theta))| (chains = false) or
/// with B(theta), the chain poset of hrvpp (chains = true).
LaurentPoly star_surjection_series(const AreaSequence& a, const Partition& lam,
                                   bool chains, const EnumOptions& opt = {});

/// omega G_a(x;q+1) expanded in p_lambda/z_lambda through the surjection
/// counts; compared against the coloring engine route.
bool check_pexpansion(const AreaSequence& a, const EnumOptions& opt = {});

/// The equivalent form of the main conjecture at one (a, lambda).
bool check_equivalent_conjecture(const AreaSequence& a, const Partition& lam,
                                 const EnumOptions& opt = {});

/// sum_lambda |O*_lambda(chains(rho))| p_lambda / z_lambda, which expands
/// e_rho in the power-sum basis.
RatSymFunc chains_power_sum(const Partition& rho);

}  // namespace llt
