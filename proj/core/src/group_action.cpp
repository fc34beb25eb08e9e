#include "qalg/group_action.hpp"

#include <set>

#include "qalg/errors.hpp"

namespace qalg {

GroupAction::GroupAction(RingPtr ring, std::vector<SignedSubstitution> generators,
                         std::vector<SignedSubstitution> elements)
    : ring_(std::move(ring)), generators_(std::move(generators)), elements_(std::move(elements)) {}

GroupAction GroupAction::close(RingPtr ring, std::vector<SignedSubstitution> generators,
                               std::size_t cap) {
    for (const auto& g : generators)
        if (*g.ring() != *ring)
            throw RingMismatch("action generator lives in a different ring");

    std::set<SignedSubstitution> closure;
    closure.insert(SignedSubstitution::identity(ring));
    std::vector<SignedSubstitution> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        std::vector<SignedSubstitution> next;
        for (const auto& e : frontier) {
            for (const auto& g : generators) {
                SignedSubstitution prod = g.after(e);
                if (closure.insert(prod).second) {
                    if (closure.size() > cap)
                        throw ClosureCapExceeded("group closure exceeded the cap of " +
                                                 std::to_string(cap) + " elements");
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<SignedSubstitution> elements(closure.begin(), closure.end());
    return GroupAction(std::move(ring), std::move(generators), std::move(elements));
}

GroupAction GroupAction::trivial(RingPtr ring) { return close(ring, {}); }

bool GroupAction::is_monomial_diagonal() const {
    for (const auto& e : elements_)
        if (!e.is_diagonal())
            return false;
    return true;
}

} // namespace qalg
