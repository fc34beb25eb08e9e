#include "qalg/base_ring.hpp"

#include <algorithm>

#include "qalg/errors.hpp"

namespace qalg {

BaseRing::BaseRing(Ideal ideal, MonomialOrder order)
    : ideal_(std::move(ideal)), order_(std::move(order)) {
    if (*ideal_.ring != *order_.ring())
        throw RingMismatch("order ring does not match quotient ring");
    if (!ideal_.is_homogeneous())
        throw NonHomogeneous("quotient ring needs a weighted-homogeneous ideal");
    if (!ideal_.is_zero()) {
        gb_ = buchberger(ideal_, order_);
        lt_ = leading_term_ideal(*gb_);
    }
}

BaseRing BaseRing::free_ring(RingPtr ring) {
    MonomialOrder order = MonomialOrder::lex(ring);
    return BaseRing(Ideal(std::move(ring), {}), std::move(order));
}

Polynomial BaseRing::reduce(const Polynomial& p) const {
    if (*p.ring() != *ring())
        throw RingMismatch("reducing a polynomial from a different ring");
    if (!gb_)
        return p;
    return normal_form(p, *gb_);
}

std::vector<Monomial> BaseRing::basis(int degree) const {
    return standard_monomials(lt_, *ring(), degree);
}

long BaseRing::dim(int degree) const { return static_cast<long>(basis(degree).size()); }

GradedDims BaseRing::dims(int bound) const {
    GradedDims out(bound);
    for (int d = 0; d <= bound; ++d)
        out.set(d, dim(d));
    return out;
}

std::vector<Rat> BaseRing::coordinates(const Polynomial& reduced, int degree) const {
    std::vector<Monomial> b = basis(degree);
    std::vector<Rat> v(b.size(), Rat(0));
    for (const auto& [m, c] : reduced.terms()) {
        auto it = std::lower_bound(b.begin(), b.end(), m, MonoLexGreater{});
        if (it == b.end() || !(*it == m))
            throw Error("polynomial is not supported on the degree-" + std::to_string(degree) +
                        " standard monomials");
        v[static_cast<std::size_t>(it - b.begin())] = c;
    }
    return v;
}

} // namespace qalg
