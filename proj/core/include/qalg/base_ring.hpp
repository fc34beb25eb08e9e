#ifndef QALG_BASE_RING_HPP
#define QALG_BASE_RING_HPP

#include <memory>
#include <optional>
#include <vector>

#include "qalg/graded_dims.hpp"
#include "qalg/groebner.hpp"
#include "qalg/hilbert.hpp"

namespace qalg {

/* A graded quotient ring R/I presented by a homogeneous ideal and a
   monomial order. Gives normal forms and the standard-monomial basis of
   each degree slice. With a zero ideal it is the free polynomial ring.
   Immutable; all queries are pure. */
class BaseRing {
public:
    BaseRing(Ideal ideal, MonomialOrder order);
    static BaseRing free_ring(RingPtr ring);

    const RingPtr& ring() const { return ideal_.ring; }
    const Ideal& ideal() const { return ideal_; }
    const MonomialOrder& order() const { return order_; }
    bool is_free() const { return ideal_.is_zero(); }
    const std::optional<GroebnerBasis>& gb() const { return gb_; }
    const std::vector<Monomial>& lt() const { return lt_; }

    /* Normal form modulo the ideal (identity for the free ring). */
    Polynomial reduce(const Polynomial& p) const;

    std::vector<Monomial> basis(int degree) const;
    long dim(int degree) const;
    GradedDims dims(int bound) const;

    /* Coordinates of a reduced polynomial in basis(degree); the polynomial
       must be supported on standard monomials of that degree. */
    std::vector<Rat> coordinates(const Polynomial& reduced, int degree) const;

private:
    Ideal ideal_;
    MonomialOrder order_;
    std::optional<GroebnerBasis> gb_;
    std::vector<Monomial> lt_;
};

using BaseRingPtr = std::shared_ptr<const BaseRing>;

} // namespace qalg

#endif
