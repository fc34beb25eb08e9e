#ifndef QALG_GROUP_ACTION_HPP
#define QALG_GROUP_ACTION_HPP

#include <cstddef>
#include <vector>

#include "qalg/ring.hpp"

namespace qalg {

/* A finite group of signed variable substitutions, stored as the full
   element list (closure of the generators under composition). */
class GroupAction {
public:
    static constexpr std::size_t kDefaultClosureCap = 1024;

    /* Closure of the generators; throws ClosureCapExceeded past the cap. */
    static GroupAction close(RingPtr ring, std::vector<SignedSubstitution> generators,
                             std::size_t cap = kDefaultClosureCap);
    static GroupAction trivial(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<SignedSubstitution>& generators() const { return generators_; }
    const std::vector<SignedSubstitution>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

    /* Every element sends every variable to +/- itself. */
    bool is_monomial_diagonal() const;

private:
    GroupAction(RingPtr ring, std::vector<SignedSubstitution> generators,
                std::vector<SignedSubstitution> elements);

    RingPtr ring_;
    std::vector<SignedSubstitution> generators_;
    std::vector<SignedSubstitution> elements_;
};

} // namespace qalg

#endif
