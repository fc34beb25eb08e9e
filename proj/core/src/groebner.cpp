#include "qalg/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "qalg/errors.hpp"

namespace qalg {

Ideal::Ideal(RingPtr r, std::vector<Polynomial> gens)
    : ring(std::move(r)), generators(std::move(gens)) {
    for (const auto& g : generators) {
        if (g.is_zero())
            throw Error("ideal generators must be nonzero");
        if (*g.ring() != *ring)
            throw RingMismatch("ideal generator lives in a different ring");
    }
}

bool Ideal::is_homogeneous() const {
    return std::all_of(generators.begin(), generators.end(),
                       [](const Polynomial& g) { return g.homogeneous_degree().has_value(); });
}

const Monomial& leading_monomial(const Polynomial& p, const MonomialOrder& o) {
    if (p.is_zero())
        throw Error("the zero polynomial has no leading term");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : p.terms())
        if (!best || o.greater(m, *best))
            best = &m;
    return *best;
}

const Rat& leading_coefficient(const Polynomial& p, const MonomialOrder& o) {
    return p.terms().at(leading_monomial(p, o));
}

Polynomial make_monic(const Polynomial& p, const MonomialOrder& o) {
    const Rat& lc = leading_coefficient(p, o);
    return p.scaled(1 / lc);
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& o) {
    for (const auto& g : divisors)
        if (g.is_zero())
            throw Error("division by a zero polynomial");

    Polynomial remainder = Polynomial::zero(p.ring());
    Polynomial work = p;
    while (!work.is_zero()) {
        const Monomial lead = leading_monomial(work, o);
        const Rat coeff = work.terms().at(lead);
        bool reduced = false;
        for (const auto& g : divisors) {
            const Monomial& gl = leading_monomial(g, o);
            if (gl.divides(lead)) {
                Rat factor = coeff / leading_coefficient(g, o);
                Polynomial sub =
                    Polynomial::term(p.ring(), lead.divided_by(gl), factor) * g;
                work = work - sub;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            Polynomial t = Polynomial::term(p.ring(), lead, coeff);
            remainder = remainder + t;
            work = work - t;
        }
    }
    return remainder;
}

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<Polynomial> elements)
    : order_(std::move(order)), elements_(std::move(elements)) {
    leads_.reserve(elements_.size());
    for (const auto& g : elements_)
        leads_.push_back(leading_monomial(g, order_));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    return normal_form(p, gb.elements(), gb.order());
}

namespace {

/* Critical pair, ordered by (weighted lcm degree, lcm in o, i, j). */
struct PairKey {
    int wdeg;
    Monomial lcm;
    std::size_t i, j;
};

struct PairLess {
    const MonomialOrder* order;
    bool operator()(const PairKey& a, const PairKey& b) const {
        if (a.wdeg != b.wdeg)
            return a.wdeg < b.wdeg;
        int c = order->compare(a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }
};

std::vector<Polynomial> sorted_by_lead(const std::vector<Polynomial>& basis,
                                       const MonomialOrder& o) {
    std::vector<Polynomial> view = basis;
    std::stable_sort(view.begin(), view.end(), [&o](const Polynomial& a, const Polynomial& b) {
        return o.less(leading_monomial(a, o), leading_monomial(b, o));
    });
    return view;
}

} // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& o,
                         const BuchbergerOptions& options) {
    if (*ideal.ring != *o.ring())
        throw RingMismatch("order ring does not match ideal ring");

    std::vector<Polynomial> basis;
    for (const auto& g : ideal.generators)
        basis.push_back(make_monic(g, o));

    std::set<PairKey, PairLess> pairs(PairLess{&o});
    auto push_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(leading_monomial(basis[i], o), leading_monomial(basis[j], o));
            pairs.insert(PairKey{weighted_degree(l, *ideal.ring), std::move(l), i, j});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j)
        push_pairs_with(j);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        PairKey pk = *pairs.begin();
        pairs.erase(pairs.begin());
        if (++processed > options.pair_cap)
            throw PairCapExceeded("Buchberger aborted: more than " +
                                  std::to_string(options.pair_cap) +
                                  " critical pairs processed; the input looks pathological");

        const Monomial& li = leading_monomial(basis[pk.i], o);
        const Monomial& lj = leading_monomial(basis[pk.j], o);
        if (Monomial::coprime(li, lj))
            continue; // first Buchberger criterion

        Monomial l = Monomial::lcm(li, lj);
        Polynomial spoly =
            Polynomial::term(ideal.ring, l.divided_by(li), Rat(1)) * basis[pk.i] -
            Polynomial::term(ideal.ring, l.divided_by(lj), Rat(1)) * basis[pk.j];
        Polynomial r = normal_form(spoly, sorted_by_lead(basis, o), o);
        if (!r.is_zero()) {
            basis.push_back(make_monic(r, o));
            push_pairs_with(basis.size() - 1);
        }
    }

    /* Minimalize: drop elements whose lead is divisible by another lead. */
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = leading_monomial(basis[i], o);
        bool dominated = false;
        for (std::size_t j = 0; j < basis.size() && !dominated; ++j) {
            if (i == j)
                continue;
            const Monomial& lj = leading_monomial(basis[j], o);
            if (lj.divides(li) && (li != lj || j < i))
                dominated = true;
        }
        if (!dominated)
            minimal.push_back(basis[i]);
    }

    /* Tail-reduce every element against the others. */
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        Polynomial r = normal_form(minimal[i], sorted_by_lead(others, o), o);
        if (!r.is_zero())
            reduced.push_back(make_monic(r, o));
    }

    std::sort(reduced.begin(), reduced.end(), [&o](const Polynomial& a, const Polynomial& b) {
        return o.less(leading_monomial(a, o), leading_monomial(b, o));
    });
    return GroebnerBasis(o, std::move(reduced));
}

std::vector<Monomial> leading_term_ideal(const GroebnerBasis& gb) {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < gb.size(); ++i) {
        const Monomial& m = gb.leading(i);
        bool dominated = false;
        for (std::size_t j = 0; j < gb.size() && !dominated; ++j)
            if (j != i && gb.leading(j).divides(m) && (gb.leading(j) != m || j < i))
                dominated = true;
        if (!dominated)
            gens.push_back(m);
    }
    std::sort(gens.begin(), gens.end(), [&gb](const Monomial& a, const Monomial& b) {
        return gb.order().less(a, b);
    });
    return gens;
}

} // namespace qalg
