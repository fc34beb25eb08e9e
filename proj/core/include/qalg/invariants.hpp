#ifndef QALG_INVARIANTS_HPP
#define QALG_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "qalg/graded_dims.hpp"
#include "qalg/group_action.hpp"
#include "qalg/groebner.hpp"

namespace qalg {

/* Reynolds operator: the average (1/|G|) sum of g.p over all elements.
   A projector onto the fixed subspace. */
Polynomial reynolds(const Polynomial& p, const GroupAction& group);

/* Monomials of weighted degree d fixed with sign +1 by every element.
   Requires a monomial-diagonal action (each variable to +/- itself);
   otherwise single monomials need not span the fixed subspace. */
std::vector<Monomial> invariant_monomials(const GroupAction& group, int degree);

/* True iff the image of every generator under every element reduces to
   zero modulo the ideal, i.e. the ideal is G-stable. */
bool check_stability(const Ideal& ideal, const GroupAction& group, const MonomialOrder& order);

/* Degreewise dimension of (R/I)^G: the rank of the Reynolds projector on
   the standard-monomial basis of each degree slice. The ideal must be
   G-stable. */
GradedDims fixed_quotient_dims(const Ideal& ideal, const GroupAction& group,
                               const MonomialOrder& order, int bound);

struct FixedPointReport {
    bool stable = false;
    bool equal = false;
    GradedDims quotient_fixed; /* dims of (R/I)^G */
    GradedDims fixed_quotient; /* dims of R^G/I^G */
    std::optional<DimsMismatch> mismatch;
};

/* Computes both sides of the isomorphism (R/I)^G = R^G/I^G degreewise and
   compares them. A mismatch on a stable ideal indicates a bug, not
   mathematics. Requires a monomial-diagonal action. */
FixedPointReport verify_fixed_point_lemma(const Ideal& ideal, const GroupAction& group,
                                          const MonomialOrder& order, int bound);

} // namespace qalg

#endif
