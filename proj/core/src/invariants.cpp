#include "qalg/invariants.hpp"

#include <algorithm>

#include "qalg/errors.hpp"
#include "qalg/hilbert.hpp"
#include "qalg/qmatrix.hpp"

namespace qalg {

Polynomial reynolds(const Polynomial& p, const GroupAction& group) {
    if (*p.ring() != *group.ring())
        throw RingMismatch("polynomial ring does not match the action ring");
    Polynomial sum = Polynomial::zero(p.ring());
    for (const auto& g : group.elements())
        sum = sum + substitute(p, g);
    return sum.scaled(Rat(1) / Rat(static_cast<long>(group.order())));
}

std::vector<Monomial> invariant_monomials(const GroupAction& group, int degree) {
    if (!group.is_monomial_diagonal())
        throw NotMonomialDiagonal(
            "invariant monomial enumeration needs every element to fix each variable up to sign");
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(*group.ring(), degree)) {
        bool fixed = true;
        for (const auto& g : group.elements()) {
            auto [im, sign] = g.apply(m);
            if (sign != 1) { /* im == m for diagonal actions */
                fixed = false;
                break;
            }
        }
        if (fixed)
            out.push_back(m);
    }
    return out;
}

bool check_stability(const Ideal& ideal, const GroupAction& group, const MonomialOrder& order) {
    if (ideal.is_zero())
        return true;
    GroebnerBasis gb = buchberger(ideal, order);
    for (const auto& f : ideal.generators)
        for (const auto& g : group.elements())
            if (!normal_form(substitute(f, g), gb).is_zero())
                return false;
    return true;
}

namespace {

std::vector<Rat> coords_in(const std::vector<Monomial>& basis, const Polynomial& p) {
    std::vector<Rat> v(basis.size(), Rat(0));
    for (const auto& [m, c] : p.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m, MonoLexGreater{});
        if (it == basis.end() || !(*it == m))
            throw Error("polynomial leaves the expected monomial span");
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

/* Terms iterate canonically descending, so the coordinate indices come
   out ascending, as SparseVec requires. */
SparseVec sparse_coords_in(const std::vector<Monomial>& basis, const Polynomial& p) {
    SparseVec v;
    v.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m, MonoLexGreater{});
        if (it == basis.end() || !(*it == m))
            throw Error("polynomial leaves the expected monomial span");
        v.emplace_back(static_cast<std::size_t>(it - basis.begin()), c);
    }
    return v;
}

} // namespace

GradedDims fixed_quotient_dims(const Ideal& ideal, const GroupAction& group,
                               const MonomialOrder& order, int bound) {
    if (!ideal.is_homogeneous())
        throw NonHomogeneous("fixed quotient dims need a weighted-homogeneous ideal");
    if (!check_stability(ideal, group, order))
        throw UnstableIdeal("the ideal is not stable under the group action");

    std::vector<Monomial> lt;
    std::vector<Polynomial> gb_elems;
    if (!ideal.is_zero()) {
        GroebnerBasis gb = buchberger(ideal, order);
        lt = leading_term_ideal(gb);
        gb_elems = gb.elements();
    }

    GradedDims dims(bound);
    for (int d = 0; d <= bound; ++d) {
        std::vector<Monomial> basis = standard_monomials(lt, *ideal.ring, d);
        if (basis.empty())
            continue;
        std::vector<std::vector<Rat>> projected;
        projected.reserve(basis.size());
        for (const auto& m : basis) {
            Polynomial avg = reynolds(Polynomial::term(ideal.ring, m, Rat(1)), group);
            Polynomial reduced = gb_elems.empty() ? avg : normal_form(avg, gb_elems, order);
            projected.push_back(coords_in(basis, reduced));
        }
        dims.set(d, static_cast<long>(rank_of_vectors(basis.size(), projected)));
    }
    return dims;
}

FixedPointReport verify_fixed_point_lemma(const Ideal& ideal, const GroupAction& group,
                                          const MonomialOrder& order, int bound) {
    FixedPointReport report{false, false, GradedDims(bound), GradedDims(bound), std::nullopt};
    report.stable = check_stability(ideal, group, order);
    if (!report.stable)
        throw UnstableIdeal("fixed point comparison needs a G-stable ideal");

    report.quotient_fixed = fixed_quotient_dims(ideal, group, order, bound);

    /* R^G/I^G degreewise: invariant monomials modulo the Reynolds images
       of the degree-d slice of I. */
    for (int d = 0; d <= bound; ++d) {
        std::vector<Monomial> inv = invariant_monomials(group, d);
        if (inv.empty())
            continue;
        std::vector<SparseVec> images;
        for (const auto& f : ideal.generators) {
            int fdeg = *f.homogeneous_degree();
            for (const auto& m : monomials_of_degree(*ideal.ring, d - fdeg)) {
                Polynomial r = reynolds(Polynomial::term(ideal.ring, m, Rat(1)) * f, group);
                if (!r.is_zero())
                    images.push_back(sparse_coords_in(inv, r));
            }
        }
        long quotient = static_cast<long>(inv.size()) -
                        static_cast<long>(rank_of_sparse_vectors(images));
        report.fixed_quotient.set(d, quotient);
    }

    report.mismatch = dims_first_mismatch(report.quotient_fixed, report.fixed_quotient);
    report.equal = !report.mismatch.has_value();
    return report;
}

} // namespace qalg
