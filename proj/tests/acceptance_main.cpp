/* Acceptance suite: one line per criterion, always-on checks, nonzero exit
   on any failure. Checks are exact; each criterion also has to finish
   inside its time budget. */

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qalg/charrings.hpp"
#include "qalg/invariants.hpp"
#include "qalg/scenarios.hpp"
#include "test_support.hpp"

using namespace qalg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    double budget_ms;
    Clock::time_point start = Clock::now();
    std::vector<std::string> problems;

    Criterion(std::string n, double budget) : name(std::move(n)), budget_ms(budget) {}

    void require(bool ok, const std::string& what) {
        if (!ok)
            problems.push_back(what);
    }

    void finish() {
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (ms > budget_ms)
            problems.push_back("took " + std::to_string(ms) + " ms (budget " +
                               std::to_string(budget_ms) + " ms)");
        if (problems.empty()) {
            std::cout << "[PASS] " << name << "\n";
        } else {
            ++failures;
            std::cout << "[FAIL] " << name << "\n";
            for (const auto& p : problems)
                std::cout << "       " << p << "\n";
        }
    }
};

GradedDims point_table(int bound) {
    GradedDims d(bound);
    d.set(0, 1);
    for (int k = 2; k <= bound; k += 2)
        d.set(k, 2);
    return d;
}

GradedDims disc_table(int bound) {
    GradedDims d(bound);
    d.set(0, 1);
    d.set(2, 2);
    d.set(4, 1);
    return d;
}

GradedDims main_table(int bound) {
    GradedDims d(bound);
    d.set(0, 1);
    d.set(2, 4);
    d.set(4, 7);
    for (int k = 6; k <= bound; k += 2)
        d.set(k, 8);
    return d;
}

GradedDims fixed_table(int bound) {
    GradedDims d(bound);
    d.set(0, 1);
    d.set(4, 3);
    for (int k = 8; k <= bound; k += 4)
        d.set(k, 4);
    return d;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool spoly_criterion_holds(const GroebnerBasis& gb) {
    const MonomialOrder& o = gb.order();
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
            Monomial l = Monomial::lcm(gb.leading(i), gb.leading(j));
            Polynomial s = Polynomial::term(o.ring(), l.divided_by(gb.leading(i)), Rat(1)) *
                               gb.elements()[i] -
                           Polynomial::term(o.ring(), l.divided_by(gb.leading(j)), Rat(1)) *
                               gb.elements()[j];
            if (!normal_form(s, gb).is_zero())
                return false;
        }
    return true;
}

} // namespace

int main() {
    const int D = 40;

    { /* 1: the fixed-point ring table */
        Criterion c("criterion 1: Hilbert(Q[m,h]/(m*h)) equals 1,2,2,... on even degrees 0..40",
                    100);
        GradedDims dims =
            hilbert_function(builtin::ideal_point(), MonomialOrder::lex(builtin::ring_mh()), D);
        c.require(dims == point_table(D), "table mismatch: " + dims.comma_list());
        c.finish();
    }

    { /* 2: the fixed-disc ring table */
        Criterion c("criterion 2: Hilbert(Q[m,h]/(m^2+h^2, m*h)) equals 1,0,2,0,1,0,...", 100);
        GradedDims dims =
            hilbert_function(builtin::ideal_disc(), MonomialOrder::lex(builtin::ring_mh()), D);
        c.require(dims == disc_table(D), "table mismatch: " + dims.comma_list());
        c.finish();
    }

    { /* 3: identical leading term ideals */
        Criterion c("criterion 3: reduced lex bases of I1 and I2 share LT = {m*h, n*t, m^2, h^3}",
                    100);
        GroebnerBasis g1 = buchberger(builtin::ideal_i1(), builtin::order_mhnt());
        GroebnerBasis g2 = buchberger(builtin::ideal_i2(), builtin::order_mhnt());
        std::vector<Monomial> expected{Monomial({0, 0, 1, 1}), Monomial({0, 3, 0, 0}),
                                       Monomial({1, 1, 0, 0}), Monomial({2, 0, 0, 0})};
        c.require(leading_term_ideal(g1) == expected, "LT(I1) differs");
        c.require(leading_term_ideal(g2) == expected, "LT(I2) differs");
        c.finish();
    }

    { /* 4: the connected-sum table and the degreewise agreement */
        Criterion c("criterion 4: Hilbert(R/I2) equals 1,4,7,8,8,... and matches R/I1 through 40",
                    500);
        GradedDims d2 = hilbert_function(builtin::ideal_i2(), builtin::order_mhnt(), D);
        GradedDims d1 = hilbert_function(builtin::ideal_i1(), builtin::order_mhnt(), D);
        c.require(d2 == main_table(D), "table mismatch: " + d2.comma_list());
        c.require(dims_equal(d1, d2), "R/I1 and R/I2 disagree");
        c.finish();
    }

    { /* 5: the four spectral sequence scenarios */
        Criterion c("criterion 5: scenarios A-D reproduce the four fibration computations", 2000);

        const auto& a = builtin::scenario("point-over-torus");
        SpectralRun ra = run_to_infinity(a.base, a.fiber, a.specs, D);
        c.require(concentrated_in_row_zero(ra.trace.back()), "A: classes above row 0 survive");
        c.require(dims_equal(ra.totals, point_table(D)), "A: totals " + ra.totals.comma_list());

        const auto& b = builtin::scenario("disc-over-bso4");
        SpectralRun rb = run_to_infinity(b.base, b.fiber, b.specs, D);
        GradedDims contractible(D);
        contractible.set(0, 1);
        c.require(dims_equal(rb.totals, contractible), "B: totals " + rb.totals.comma_list());

        const auto& cd = builtin::scenario("disc-over-torus");
        SpectralRun rc = run_to_infinity(cd.base, cd.fiber, cd.specs, D);
        c.require(dims_equal(rc.totals, disc_table(D)), "C: totals " + rc.totals.comma_list());
        std::set<std::pair<int, int>> support;
        for (const auto& [pq, entry] : rc.trace.back().entries)
            if (entry.dim() > 0 && pq.first <= rc.trace.back().exact_col)
                support.insert(pq);
        c.require(support == std::set<std::pair<int, int>>{{0, 0}, {2, 0}, {4, 0}},
                  "C: survivors away from (0,0),(2,0),(4,0)");

        const auto& dmain = builtin::scenario("main");
        SpectralRun rd = run_to_infinity(dmain.base, dmain.fiber, dmain.specs, D);
        c.require(rd.collapse_page == 2,
                  "D: collapse page " + std::to_string(rd.collapse_page));
        c.require(dims_equal(rd.totals, main_table(D)), "D: totals " + rd.totals.comma_list());
        c.finish();
    }

    { /* 6: the invariant-theory computations */
        Criterion c("criterion 6: invariant monomials, fixed dims and the fixed-point comparison",
                    1000);
        GroupAction g = builtin::action_c2c2();
        std::vector<Monomial> inv = invariant_monomials(g, 4);
        std::vector<Monomial> expected{Monomial({2, 0, 0, 0}), Monomial({1, 1, 0, 0}),
                                       Monomial({0, 2, 0, 0}), Monomial({0, 0, 2, 0}),
                                       Monomial({0, 0, 1, 1}), Monomial({0, 0, 0, 2})};
        c.require(inv == expected, "degree-4 invariant monomials differ");

        GradedDims fixed = fixed_quotient_dims(builtin::ideal_i2(), g, builtin::order_mhnt(), D);
        c.require(fixed == fixed_table(D), "fixed dims " + fixed.comma_list());

        FixedPointReport rep =
            verify_fixed_point_lemma(builtin::ideal_i2(), g, builtin::order_mhnt(), D);
        c.require(rep.equal, "fixed-point comparison mismatch");
        c.finish();
    }

    { /* 7: zero divisors in the quotient */
        Criterion c("criterion 7: m^2, h^2 nonzero in R/I2 while m^2*h^2 reduces to 0", 100);
        GroebnerBasis gb = buchberger(builtin::ideal_i2(), builtin::order_mhnt());
        RingPtr r = builtin::ring_mhnt();
        c.require(!normal_form(Polynomial::parse("m^2", r), gb).is_zero(), "m^2 reduced to 0");
        c.require(!normal_form(Polynomial::parse("h^2", r), gb).is_zero(), "h^2 reduced to 0");
        c.require(normal_form(Polynomial::parse("m^2*h^2", r), gb).is_zero(),
                  "m^2*h^2 did not reduce to 0");
        c.finish();
    }

    { /* 8: property suites */
        Criterion c("criterion 8: property suites (bases, division, oracle, Reynolds, pages)",
                    30000);
        std::mt19937 rng(69);

        /* Buchberger criterion on every produced basis */
        c.require(spoly_criterion_holds(buchberger(builtin::ideal_i1(), builtin::order_mhnt())),
                  "S-polynomial criterion fails on GB(I1)");
        c.require(spoly_criterion_holds(buchberger(builtin::ideal_i2(), builtin::order_mhnt())),
                  "S-polynomial criterion fails on GB(I2)");
        for (int i = 0; i < 20; ++i) {
            RingPtr ring = testsup::random_small_ring(rng);
            Ideal ideal = testsup::random_homogeneous_ideal(rng, ring);
            if (!spoly_criterion_holds(buchberger(ideal, MonomialOrder::lex(ring)))) {
                c.require(false, "S-polynomial criterion fails on a random basis");
                break;
            }
        }

        /* normal-form idempotence on 1000 random polynomials */
        {
            GroebnerBasis gb = buchberger(builtin::ideal_i2(), builtin::order_mhnt());
            bool ok = true;
            for (int i = 0; i < 1000 && ok; ++i) {
                Polynomial p = testsup::random_poly(rng, builtin::ring_mhnt());
                Polynomial once = normal_form(p, gb);
                ok = normal_form(once, gb) == once;
            }
            c.require(ok, "normal form is not idempotent");
        }

        /* rank oracle vs standard-monomial dims on 50 random ideals */
        {
            int mismatches = 0;
            for (int i = 0; i < 50; ++i) {
                RingPtr ring = testsup::random_small_ring(rng);
                Ideal ideal = testsup::random_homogeneous_ideal(rng, ring);
                GradedDims dims = hilbert_function(ideal, MonomialOrder::lex(ring), 10);
                for (int d = 0; d <= 10; ++d)
                    if (dims.dim(d) != rank_oracle(ideal, d))
                        ++mismatches;
            }
            c.require(mismatches == 0,
                      std::to_string(mismatches) + " oracle mismatches");
        }

        /* Reynolds projector identities on 1000 random polynomials */
        {
            GroupAction g = builtin::action_c2c2();
            bool ok = true;
            for (int i = 0; i < 1000 && ok; ++i) {
                Polynomial p = testsup::random_poly(rng, builtin::ring_mhnt());
                Polynomial avg = reynolds(p, g);
                ok = reynolds(avg, g) == avg;
                for (const auto& e : g.elements())
                    ok = ok && reynolds(substitute(p, e), g) == avg && substitute(avg, e) == avg;
            }
            c.require(ok, "Reynolds projector identities fail");
        }

        /* d after d = 0 and dimension monotonicity on every page turn */
        for (const auto& s : builtin::scenarios()) {
            Page page = build_e2(s.base, s.fiber, 24 + 4, s.fiber->top_degree());
            for (int r = 2; r <= s.fiber->top_degree() + 1; ++r) {
                const DifferentialSpec* spec = nullptr;
                for (const auto& sp : s.specs)
                    if (sp.page == r)
                        spec = &sp;
                if (!spec) {
                    page.r = r + 1;
                    continue;
                }
                apply_leibniz(page, *spec);
                for (const auto& [pq, m1] : page.differentials) {
                    const QMatrix* m2 = page.differential(pq.first + r, pq.second - r + 1);
                    if (m2 && !((*m2) * m1).is_zero())
                        c.require(false, s.name + ": d after d nonzero");
                }
                Page next = turn_page(page);
                for (const auto& [pq, entry] : next.entries)
                    if (entry.dim() > page.dim(pq.first, pq.second))
                        c.require(false, s.name + ": dimension grew across a turn");
                page = std::move(next);
            }
        }
        c.finish();
    }

    { /* 9: the one-shot verification pipeline */
        Criterion c("criterion 9: full verification run passes, exit 0, byte-identical reports",
                    10000);
        namespace fs = std::filesystem;
        fs::create_directories("qalg_acceptance_tmp");
        auto invoke = [](const std::string& out, const std::string& json) {
            std::string cmd = std::string(QALG_BIN) + " verify paper --json " + json + " > " +
                              out + " 2> /dev/null";
            int status = std::system(cmd.c_str());
            return (status >> 8) & 0xff;
        };
        int e1 = invoke("qalg_acceptance_tmp/run1.txt", "qalg_acceptance_tmp/rep1.json");
        int e2 = invoke("qalg_acceptance_tmp/run2.txt", "qalg_acceptance_tmp/rep2.json");
        c.require(e1 == 0, "first run exited " + std::to_string(e1));
        c.require(e2 == 0, "second run exited " + std::to_string(e2));
        std::string t1 = slurp("qalg_acceptance_tmp/run1.txt");
        c.require(!t1.empty() && t1 == slurp("qalg_acceptance_tmp/run2.txt"),
                  "text reports differ between runs");
        std::string j1 = slurp("qalg_acceptance_tmp/rep1.json");
        c.require(!j1.empty() && j1 == slurp("qalg_acceptance_tmp/rep2.json"),
                  "JSON reports differ between runs");
        c.require(t1.find("0 failed, 0 refused") != std::string::npos,
                  "verification reported failures");
        c.finish();
    }

    if (failures == 0) {
        std::cout << "acceptance: 9/9 criteria passed\n";
        return EXIT_SUCCESS;
    }
    std::cout << "acceptance: " << (9 - failures) << "/9 criteria passed\n";
    return EXIT_FAILURE;
}
