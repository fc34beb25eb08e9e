#ifndef QALG_ORDER_HPP
#define QALG_ORDER_HPP

#include <string>
#include <vector>

#include "qalg/ring.hpp"

namespace qalg {

enum class OrderKind { Lex, Grevlex };

std::string order_kind_name(OrderKind k);
OrderKind order_kind_from_name(const std::string& name);

/* A monomial order on a fixed ring: lex or graded-reverse-lex, with an
   explicit precedence permutation (most significant variable first). */
class MonomialOrder {
public:
    MonomialOrder(RingPtr ring, OrderKind kind, std::vector<std::size_t> precedence);

    /* Precedence defaults to the declared variable order. */
    static MonomialOrder lex(RingPtr ring);
    static MonomialOrder grevlex(RingPtr ring);
    static MonomialOrder with_names(RingPtr ring, OrderKind kind,
                                    const std::vector<std::string>& names);

    const RingPtr& ring() const { return ring_; }
    OrderKind kind() const { return kind_; }
    const std::vector<std::size_t>& precedence() const { return precedence_; }
    std::vector<std::string> precedence_names() const;

    /* Total order: -1 if a < b, 0 if equal, 1 if a > b. */
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    RingPtr ring_;
    OrderKind kind_;
    std::vector<std::size_t> precedence_;
};

} // namespace qalg

#endif
