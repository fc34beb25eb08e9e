#ifndef QALG_SCENARIOS_HPP
#define QALG_SCENARIOS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qalg/group_action.hpp"
#include "qalg/specseq.hpp"

namespace qalg::builtin {

/* Q[m,h,n,t], every generator of degree 2. */
RingPtr ring_mhnt();
/* lex with m > h > n > t */
MonomialOrder order_mhnt();
/* (m*h, n*t, m^2+h^2) */
Ideal ideal_i1();
/* (m*h, n*t, m^2+h^2-n^2-t^2) */
Ideal ideal_i2();
/* C2 x C2: one generator flips m,h, the other flips n,t. */
GroupAction action_c2c2();

/* Q[m,h] with |m| = |h| = 2. */
RingPtr ring_mh();
/* (m*h): the ring of a fixed point. */
Ideal ideal_point();
/* (m^2+h^2, m*h): the ring of a fixed disc. */
Ideal ideal_disc();

/* A first-quadrant fibration scenario: base ring, fiber algebra and the
   differential specs that determine the sequence. An explicit column
   bound overrides the automatic safety margin (and is refused if it
   cannot stay exact through the reported window). */
struct Scenario {
    std::string name;
    std::string description;
    BaseRingPtr base;
    FiberPtr fiber;
    std::vector<DifferentialSpec> specs;
    std::optional<int> col_bound;
};

const std::vector<Scenario>& scenarios();
const Scenario& scenario(const std::string& name);

} // namespace qalg::builtin

#endif
