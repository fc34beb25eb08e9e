#include "qalg/order.hpp"

#include <algorithm>
#include <numeric>

#include "qalg/errors.hpp"

namespace qalg {

std::string order_kind_name(OrderKind k) { return k == OrderKind::Lex ? "lex" : "grevlex"; }

OrderKind order_kind_from_name(const std::string& name) {
    if (name == "lex")
        return OrderKind::Lex;
    if (name == "grevlex")
        return OrderKind::Grevlex;
    throw Error("unknown monomial order '" + name + "' (expected lex or grevlex)");
}

MonomialOrder::MonomialOrder(RingPtr ring, OrderKind kind, std::vector<std::size_t> precedence)
    : ring_(std::move(ring)), kind_(kind), precedence_(std::move(precedence)) {
    if (precedence_.size() != ring_->size())
        throw Error("order precedence must list every variable exactly once");
    std::vector<bool> seen(ring_->size(), false);
    for (std::size_t i : precedence_) {
        if (i >= ring_->size() || seen[i])
            throw Error("order precedence is not a permutation of the variables");
        seen[i] = true;
    }
}

MonomialOrder MonomialOrder::lex(RingPtr ring) {
    std::vector<std::size_t> prec(ring->size());
    std::iota(prec.begin(), prec.end(), 0u);
    return MonomialOrder(std::move(ring), OrderKind::Lex, std::move(prec));
}

MonomialOrder MonomialOrder::grevlex(RingPtr ring) {
    std::vector<std::size_t> prec(ring->size());
    std::iota(prec.begin(), prec.end(), 0u);
    return MonomialOrder(std::move(ring), OrderKind::Grevlex, std::move(prec));
}

MonomialOrder MonomialOrder::with_names(RingPtr ring, OrderKind kind,
                                        const std::vector<std::string>& names) {
    std::vector<std::size_t> prec;
    prec.reserve(names.size());
    for (const auto& n : names) {
        auto idx = ring->index_of(n);
        if (!idx)
            throw Error("order precedence names unknown variable '" + n + "'");
        prec.push_back(*idx);
    }
    return MonomialOrder(std::move(ring), kind, std::move(prec));
}

std::vector<std::string> MonomialOrder::precedence_names() const {
    std::vector<std::string> out;
    out.reserve(precedence_.size());
    for (std::size_t i : precedence_)
        out.push_back(ring_->name(i));
    return out;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != ring_->size() || b.size() != ring_->size())
        throw RingMismatch("comparing monomials from a different ring");
    if (kind_ == OrderKind::Lex) {
        for (std::size_t i : precedence_) {
            if (a.exp(i) != b.exp(i))
                return a.exp(i) < b.exp(i) ? -1 : 1;
        }
        return 0;
    }
    /* grevlex: total degree first, then the rightmost (least significant)
       position where they differ decides, reversed. */
    int da = a.total_degree();
    int db = b.total_degree();
    if (da != db)
        return da < db ? -1 : 1;
    for (std::size_t k = precedence_.size(); k-- > 0;) {
        std::size_t i = precedence_[k];
        if (a.exp(i) != b.exp(i))
            return a.exp(i) > b.exp(i) ? -1 : 1;
    }
    return 0;
}

} // namespace qalg
