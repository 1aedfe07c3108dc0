#pragma once

#include <vector>

#include "lltlab/colorings.hpp"
#include "lltlab/diagrams.hpp"
#include "lltlab/orientations.hpp"

namespace llt {

enum class Side { G, LLTc };
enum class LeeVariant { Lee, Dual };

/// Formal linear combination of LLT polynomials with exact rational-function
/// coefficients, stored as numerator/denominator pairs.  Normalization is
/// deferred to evaluation, where the common denominator is cleared and the
/// final division must be exact.
struct LinearExpr {
  enum class Frame { Plain, Shifted };  // Shifted: identity read at q+1
  struct Term {
    LaurentPoly num;
    LaurentPoly den;
    StripDiagram diagram;
  };
  Frame frame = Frame::Plain;
  std::vector<Term> terms;

  void add(const LaurentPoly& num, const LaurentPoly& den, const StripDiagram& d);
  std::string str() const;
};

/// Evaluates the expression with the coloring engine.  In the Shifted frame
/// the polynomials are taken at q+1 before combining.
SymFunc evaluate_expr(const LinearExpr& expr, const EnumOptions& opt = {});

/// True iff the expression evaluates to G of the target diagram (shifted
/// accordingly when the frame says so).
bool expr_matches_llt(const LinearExpr& expr, const StripDiagram& target,
                      const EnumOptions& opt = {});

/// Corner recursion at q+1: adding the outer corner eps as an edge equals
/// keeping it absent plus q times marking it strict.  Holds for both the
/// coloring side and the orientation side.
bool corner_identity_check(const StripDiagram& d, Edge eps, Side side,
                           const EnumOptions& opt = {});

/// Removes all strict edges through the inverted corner recursion, yielding
/// a Laurent combination of unicellular polynomials in the q+1 frame.
LinearExpr strip_to_unicellular(const StripDiagram& d);

/// The two-term strict-edge identity G_{a-e_j,(i,j)} = q G_{a2,s2} for an
/// admissible (Lee) or dual-admissible (Dual) edge (i,j).
bool two_term_check(const AreaSequence& a, Edge e, LeeVariant variant,
                    const EnumOptions& opt = {});

/// The three-term recursion G_a - G_{a-e_j} = q (G_{a-e_j} - G_{a2}).
bool lee_check(const AreaSequence& a, Edge e, LeeVariant variant,
               const EnumOptions& opt = {});

/// Builds the complete graph polynomial from its recursion alone.  Side G
/// returns G_{K_n}(x;q); side LLTc returns the q+1 form, assembled with the
/// literal subset sum.
SymFunc complete_rec(int n, Side side);

/// G of the rectangular diagram equals G_{K_k} * G_{K_{n-k}}.
bool rectangular_factorization_check(int k, int n, const EnumOptions& opt = {});

/// Expresses an abelian staircase partition through Lee's recursions as a
/// linear combination over rectangular shapes, following the five-case
/// induction.  Every Lee step asserts admissibility first.
LinearExpr abelian_reduce(const Partition& lam, int n);

/// Expresses a melting lollipop polynomial through repeated Lee steps in row
/// m, terminating at complete-plus-line base diagrams.
LinearExpr melting_lollipop_reduce(int m, int k, int nline);

/// Area sequence of the melting lollipop with an allowed empty line part.
AreaSequence melting_lollipop_area(int m, int k, int nline);

/// The diagram splits as a complete graph followed by a line graph (either
/// part may be missing).
bool is_complete_plus_line(const AreaSequence& a);

}  // namespace llt
