#ifndef QALG_GROEBNER_HPP
#define QALG_GROEBNER_HPP

#include <vector>

#include "qalg/order.hpp"
#include "qalg/ring.hpp"

namespace qalg {

/* Finitely generated ideal. An empty generator list is the zero ideal;
   listed generators must be nonzero. */
struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> generators;

    Ideal(RingPtr r, std::vector<Polynomial> gens);
    bool is_zero() const { return generators.empty(); }
    /* Every generator weighted-homogeneous. */
    bool is_homogeneous() const;
};

const Monomial& leading_monomial(const Polynomial& p, const MonomialOrder& o);
const Rat& leading_coefficient(const Polynomial& p, const MonomialOrder& o);
Polynomial make_monic(const Polynomial& p, const MonomialOrder& o);

/* Remainder of division by the listed divisors: no term of the result is
   divisible by any divisor's leading term. Deterministic rule: the current
   o-largest term is reduced by the first divisor in list order whose
   leading term divides it. */
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& o);

/* Reduced monic Groebner basis, elements sorted by leading term ascending. */
class GroebnerBasis {
public:
    GroebnerBasis(MonomialOrder order, std::vector<Polynomial> elements);

    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const Monomial& leading(std::size_t i) const { return leads_[i]; }

private:
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
    std::vector<Monomial> leads_;
};

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

struct BuchbergerOptions {
    /* Safety cap on processed critical pairs; exceeding it aborts with a
       diagnostic. The intended workloads use a handful of pairs. */
    std::size_t pair_cap = 200000;
};

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& o,
                         const BuchbergerOptions& options = {});

/* Minimal monomial generators of the leading term ideal, ascending in o. */
std::vector<Monomial> leading_term_ideal(const GroebnerBasis& gb);

} // namespace qalg

#endif
