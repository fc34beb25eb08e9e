#ifndef QALG_TEST_SUPPORT_HPP
#define QALG_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "qalg/groebner.hpp"
#include "qalg/hilbert.hpp"

namespace testsup {

using qalg::Ideal;
using qalg::Monomial;
using qalg::Polynomial;
using qalg::Rat;
using qalg::RingPtr;

inline Rat random_coeff(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    int n = num(rng);
    if (n == 0)
        n = 1;
    Rat r(n, den(rng));
    r.canonicalize();
    return r;
}

inline Polynomial random_poly(std::mt19937& rng, const RingPtr& ring, int max_terms = 5,
                              int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    Polynomial p = Polynomial::zero(ring);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<int> e(ring->size());
        for (auto& x : e)
            x = exp(rng);
        p = p + Polynomial::term(ring, Monomial(std::move(e)), random_coeff(rng));
    }
    return p;
}

inline Polynomial random_homogeneous(std::mt19937& rng, const RingPtr& ring, int wdeg) {
    std::vector<Monomial> monos = qalg::monomials_of_degree(*ring, wdeg);
    Polynomial p = Polynomial::zero(ring);
    if (monos.empty())
        return p;
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<int> nterms(1, 3);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        p = p + Polynomial::term(ring, monos[pick(rng)], random_coeff(rng));
    return p;
}

/* Ring with <= 3 variables of small degrees, uniformly chosen. */
inline RingPtr random_small_ring(std::mt19937& rng) {
    static const std::vector<std::vector<int>> configs = {
        {1}, {2}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 2, 2}, {2, 2, 2}};
    std::uniform_int_distribution<std::size_t> pick(0, configs.size() - 1);
    const std::vector<int>& degs = configs[pick(rng)];
    std::vector<qalg::VarSpec> vars;
    const char* names[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < degs.size(); ++i)
        vars.push_back({names[i], degs[i]});
    return qalg::make_ring(std::move(vars));
}

/* Homogeneous ideal with 1..3 nonzero generators of weighted degree <= 6. */
inline Ideal random_homogeneous_ideal(std::mt19937& rng, const RingPtr& ring) {
    std::uniform_int_distribution<int> ngens(1, 3);
    std::uniform_int_distribution<int> wdeg(1, 6);
    std::vector<Polynomial> gens;
    int want = ngens(rng);
    for (int i = 0; i < want; ++i) {
        Polynomial g = random_homogeneous(rng, ring, wdeg(rng));
        if (!g.is_zero())
            gens.push_back(std::move(g));
    }
    if (gens.empty())
        gens.push_back(Polynomial::variable(ring, 0));
    return Ideal(ring, std::move(gens));
}

} // namespace testsup

#endif
