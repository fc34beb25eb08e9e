#include "qalg/hilbert.hpp"

#include <algorithm>

#include "qalg/errors.hpp"
#include "qalg/qmatrix.hpp"

namespace qalg {

namespace {

void enumerate(const RingSpec& ring, int remaining, std::size_t var, std::vector<int>& exps,
               std::vector<Monomial>& out) {
    if (var + 1 == ring.size()) {
        int deg = ring.degree(var);
        if (remaining % deg == 0) {
            exps[var] = remaining / deg;
            out.emplace_back(exps);
            exps[var] = 0;
        }
        return;
    }
    int deg = ring.degree(var);
    for (int e = 0; e * deg <= remaining; ++e) {
        exps[var] = e;
        enumerate(ring, remaining - e * deg, var + 1, exps, out);
    }
    exps[var] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(const RingSpec& ring, int degree) {
    std::vector<Monomial> out;
    if (degree < 0)
        return out;
    std::vector<int> exps(ring.size(), 0);
    enumerate(ring, degree, 0, exps, out);
    std::sort(out.begin(), out.end(), MonoLexGreater{});
    return out;
}

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leading_terms,
                                         const RingSpec& ring, int degree) {
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(ring, degree)) {
        bool divisible = std::any_of(leading_terms.begin(), leading_terms.end(),
                                     [&m](const Monomial& lt) { return lt.divides(m); });
        if (!divisible)
            out.push_back(m);
    }
    return out;
}

GradedDims hilbert_function(const GroebnerBasis& gb, int bound) {
    std::vector<Monomial> lt = leading_term_ideal(gb);
    const RingSpec& ring = *gb.order().ring();
    GradedDims dims(bound);
    for (int d = 0; d <= bound; ++d)
        dims.set(d, static_cast<long>(standard_monomials(lt, ring, d).size()));
    return dims;
}

GradedDims hilbert_function(const Ideal& ideal, const MonomialOrder& order, int bound) {
    if (!ideal.is_homogeneous())
        throw NonHomogeneous("Hilbert function needs weighted-homogeneous generators");
    if (ideal.is_zero()) {
        GradedDims dims(bound);
        for (int d = 0; d <= bound; ++d)
            dims.set(d, static_cast<long>(monomials_of_degree(*ideal.ring, d).size()));
        return dims;
    }
    return hilbert_function(buchberger(ideal, order), bound);
}

long rank_oracle(const Ideal& ideal, int degree) {
    if (!ideal.is_homogeneous())
        throw NonHomogeneous("rank oracle needs weighted-homogeneous generators");
    const RingSpec& ring = *ideal.ring;
    std::vector<Monomial> basis = monomials_of_degree(ring, degree);
    if (basis.empty())
        return 0;

    /* Index of each degree-d monomial in the slice basis. */
    auto coord_of = [&basis](const Monomial& m) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m,
                                   [](const Monomial& a, const Monomial& b) {
                                       return MonoLexGreater{}(a, b);
                                   });
        return static_cast<std::size_t>(it - basis.begin());
    };

    std::vector<std::vector<Rat>> span;
    for (const auto& g : ideal.generators) {
        int gdeg = *g.homogeneous_degree();
        for (const auto& m : monomials_of_degree(ring, degree - gdeg)) {
            Polynomial p = Polynomial::term(ideal.ring, m, Rat(1)) * g;
            std::vector<Rat> v(basis.size(), Rat(0));
            for (const auto& [mono, c] : p.terms())
                v[coord_of(mono)] = c;
            span.push_back(std::move(v));
        }
    }
    std::size_t rank = rank_of_vectors(basis.size(), span);
    return static_cast<long>(basis.size() - rank);
}

} // namespace qalg
