#ifndef QALG_HILBERT_HPP
#define QALG_HILBERT_HPP

#include <vector>

#include "qalg/graded_dims.hpp"
#include "qalg/groebner.hpp"

namespace qalg {

/* Monomials of the given weighted degree in the ring. Canonical order:
   declared variable order, lexicographic, biggest first. */
std::vector<Monomial> monomials_of_degree(const RingSpec& ring, int degree);

/* Monomials of weighted degree d divisible by none of the given leading
   terms, canonically sorted. */
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leading_terms,
                                         const RingSpec& ring, int degree);

/* Hilbert function of R/I, degrees 0..bound, via the standard monomials
   of the leading term ideal. The ideal must be homogeneous. */
GradedDims hilbert_function(const Ideal& ideal, const MonomialOrder& order, int bound);

/* Same table computed from an already known basis. */
GradedDims hilbert_function(const GroebnerBasis& gb, int bound);

/* Independent check: dim of the degree-d slice of R/I by exact linear
   algebra over the full monomial basis of R_d. Never consults leading
   terms or standard monomials. */
long rank_oracle(const Ideal& ideal, int degree);

} // namespace qalg

#endif
