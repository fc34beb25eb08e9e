#include <set>

#include "doctest.h"

#include "qalg/errors.hpp"
#include "qalg/jsonio.hpp"
#include "qalg/scenarios.hpp"

using namespace qalg;

namespace {

FiberPtr exterior_ab() {
    std::vector<FiberAlgebra::Class> classes{{"1", 0}, {"a", 3}, {"b", 3}, {"ab", 6}};
    std::vector<FiberAlgebra::ProductEntry> products{{"a", "b", {{Rat(1), "ab"}}}};
    return std::make_shared<const FiberAlgebra>(std::move(classes), "1",
                                                std::vector<std::string>{"a", "b"}, products);
}

/* Signed sum of ranks of the page differentials on sources of total
   degree n. */
long rank_at_total_degree(const Page& page, int n) {
    long rank = 0;
    for (const auto& [pq, mat] : page.differentials)
        if (pq.first + pq.second == n)
            rank += static_cast<long>(mat.rank());
    return rank;
}

long chi_up_to(const Page& page, int bound) {
    long chi = 0;
    for (const auto& [pq, entry] : page.entries) {
        int n = pq.first + pq.second;
        if (n <= bound)
            chi += (n % 2 == 0 ? 1 : -1) * entry.dim();
    }
    return chi;
}

} // namespace

TEST_CASE("fiber algebra axioms") {
    FiberPtr f = exterior_ab();
    CHECK(f->top_degree() == 6);
    CHECK(f->dim(0) == 1);
    CHECK(f->dim(3) == 2);
    CHECK(f->dim(6) == 1);
    /* Koszul sign filled automatically: b*a = -ab */
    std::size_t a = *f->index_of("a");
    std::size_t b = *f->index_of("b");
    std::size_t ab = *f->index_of("ab");
    REQUIRE(f->product(b, a).size() == 1);
    CHECK(f->product(b, a)[0].first == ab);
    CHECK(f->product(b, a)[0].second == Rat(-1));
    CHECK(f->product(a, a).empty());
    /* unit acts as identity */
    CHECK(f->product(f->unit(), ab).size() == 1);
    CHECK(f->product(f->unit(), ab)[0].second == Rat(1));
    /* ab factors through a*b for Leibniz */
    CHECK(f->factorization(ab).gen == a);
    CHECK(f->factorization(ab).rest == b);
    CHECK(f->factorization(ab).scale == Rat(1));
}

TEST_CASE("fiber algebra rejects bad structure constants") {
    using Classes = std::vector<FiberAlgebra::Class>;
    using Products = std::vector<FiberAlgebra::ProductEntry>;
    using Gens = std::vector<std::string>;

    /* odd square nonzero */
    CHECK_THROWS_AS(FiberAlgebra(Classes{{"1", 0}, {"a", 3}, {"x", 6}}, "1", Gens{"a"},
                                 Products{{"a", "a", {{Rat(1), "x"}}}}),
                    FiberError);
    /* grading violation */
    CHECK_THROWS_AS(FiberAlgebra(Classes{{"1", 0}, {"a", 2}, {"x", 5}}, "1", Gens{"a"},
                                 Products{{"a", "a", {{Rat(1), "x"}}}}),
                    FiberError);
    /* Koszul inconsistency between the two given directions */
    CHECK_THROWS_AS(FiberAlgebra(Classes{{"1", 0}, {"a", 3}, {"b", 3}, {"ab", 6}}, "1",
                                 Gens{"a", "b"},
                                 Products{{"a", "b", {{Rat(1), "ab"}}},
                                          {"b", "a", {{Rat(1), "ab"}}}}),
                    FiberError);
    /* a class no differential could reach: not generator*class */
    CHECK_THROWS_AS(FiberAlgebra(Classes{{"1", 0}, {"a", 3}, {"x", 7}}, "1", Gens{"a"},
                                 Products{}),
                    FiberError);
    /* two degree-0 classes */
    CHECK_THROWS_AS(FiberAlgebra(Classes{{"1", 0}, {"u", 0}}, "1", Gens{}, Products{}),
                    FiberError);
}

TEST_CASE("kuenneth page dimensions") {
    const auto& a = builtin::scenario("point-over-torus");
    Page e2 = build_e2(a.base, a.fiber, 10, 3);
    CHECK(e2.dim(4, 3) == 3); /* e1^2, e1*e2, e2^2 against the sphere class */
    CHECK(e2.dim(0, 0) == 1);
    CHECK(e2.dim(3, 0) == 0);

    const auto& d = builtin::scenario("main");
    Page m2 = build_e2(d.base, d.fiber, 8, 4);
    CHECK(m2.dim(2, 2) == 4);
    CHECK(m2.dim(0, 2) == 2);
    CHECK(m2.dim(0, 4) == 1);
    CHECK(m2.dim(2, 1) == 0);

    const PageEntry* entry = m2.entry(2, 2);
    REQUIRE(entry != nullptr);
    CHECK(entry->labels == std::vector<std::string>{"n*m", "t*m", "n*h", "t*h"});
}

TEST_CASE("leibniz fills the disc-over-bso4 differential") {
    const auto& b = builtin::scenario("disc-over-bso4");
    Page page = build_e2(b.base, b.fiber, 12, 6);
    page.r = 4; /* pages 2 and 3 have zero differentials here */
    apply_leibniz(page, b.specs[0]);

    /* d(ab) = e (x) b - p1 (x) a: the (0,6) entry maps into (4,3) with
       basis [p1*a, e*a, p1*b, e*b]. */
    const QMatrix* m = page.differential(0, 6);
    REQUIRE(m != nullptr);
    REQUIRE(m->rows() == 4);
    REQUIRE(m->cols() == 1);
    CHECK(m->at(0, 0) == Rat(-1));
    CHECK(m->at(1, 0) == Rat(0));
    CHECK(m->at(2, 0) == Rat(0));
    CHECK(m->at(3, 0) == Rat(1));

    /* base-only classes are permanent cycles: no differential leaves row 0 */
    CHECK(page.differential(4, 0) == nullptr);
}

TEST_CASE("leibniz multiplies generator images by base monomials") {
    const auto& a = builtin::scenario("point-over-torus");
    Page page = build_e2(a.base, a.fiber, 10, 3);
    page.r = 4;
    apply_leibniz(page, a.specs[0]);

    /* (2,3) has basis [e1*s, e2*s]; target (6,0) basis is
       [e1^3, e1^2*e2, e1*e2^2, e2^3]. e1*s maps to e1^2*e2. */
    const QMatrix* m = page.differential(2, 3);
    REQUIRE(m != nullptr);
    REQUIRE(m->rows() == 4);
    REQUIRE(m->cols() == 2);
    CHECK(m->at(1, 0) == Rat(1));
    CHECK(m->at(2, 1) == Rat(1));
    CHECK(m->at(0, 0) == Rat(0));
    CHECK(m->at(3, 1) == Rat(0));
}

TEST_CASE("leibniz rejects malformed specs") {
    const auto& a = builtin::scenario("point-over-torus");
    Page page = build_e2(a.base, a.fiber, 10, 3);
    page.r = 4;

    DifferentialSpec wrong_degree;
    wrong_degree.page = 4;
    wrong_degree.images["s"] = {
        DifferentialSpec::Term{Polynomial::parse("e1", a.base->ring()), "1"}};
    CHECK_THROWS_AS(apply_leibniz(page, wrong_degree), DegreeMismatch);

    DifferentialSpec wrong_page = a.specs[0];
    wrong_page.page = 3;
    CHECK_THROWS_AS(apply_leibniz(page, wrong_page), SpecseqError);
}

TEST_CASE("turning with zero differentials changes nothing") {
    const auto& d = builtin::scenario("main");
    Page e2 = build_e2(d.base, d.fiber, 8, 4);
    Page e3 = turn_page(e2);
    CHECK(e3.r == 3);
    for (const auto& [pq, entry] : e2.entries)
        CHECK(e3.dim(pq.first, pq.second) == entry.dim());
    CHECK(e3.tensor_basis);
    CHECK(e3.exact_col == e2.exact_col);
}

TEST_CASE("page turn takes homology and keeps deterministic labels") {
    const auto& a = builtin::scenario("point-over-torus");
    Page page = build_e2(a.base, a.fiber, 12, 3);
    page.r = 4;
    apply_leibniz(page, a.specs[0]);
    Page e5 = turn_page(page);

    /* row 3 is annihilated, row 0 is cut down to Q[e1,e2]/(e1*e2) */
    for (int p = 0; p <= 12 - 4; ++p)
        CHECK(e5.dim(p, 3) == 0);
    CHECK(e5.dim(0, 0) == 1);
    CHECK(e5.dim(2, 0) == 2);
    for (int p = 4; p <= 12 - 4; p += 2)
        CHECK(e5.dim(p, 0) == 2);

    const PageEntry* entry = e5.entry(4, 0);
    REQUIRE(entry != nullptr);
    CHECK(entry->labels == std::vector<std::string>{"[e1^2]", "[e2^2]"});
    CHECK_FALSE(e5.tensor_basis);
    CHECK(e5.exact_col == 12 - 4);

    /* dimensions never grow across a turn */
    for (const auto& [pq, e] : e5.entries)
        CHECK(e.dim() <= page.dim(pq.first, pq.second));
}

TEST_CASE("composing nonzero differentials is rejected") {
    Page page;
    page.r = 2;
    page.col_bound = 4;
    page.row_bound = 2;
    page.exact_col = 4;
    page.entries[{0, 2}] = PageEntry{{"u"}, {}};
    page.entries[{2, 1}] = PageEntry{{"v"}, {}};
    page.entries[{4, 0}] = PageEntry{{"w"}, {}};
    QMatrix one(1, 1);
    one.at(0, 0) = 1;
    page.differentials[{0, 2}] = one;
    page.differentials[{2, 1}] = one;
    CHECK_THROWS_AS(turn_page(page), SpecseqError);
}

TEST_CASE("the four scenarios reproduce the expected tables") {
    const int D = 24;

    SpectralRun a = run_to_infinity(builtin::scenario("point-over-torus").base,
                                    builtin::scenario("point-over-torus").fiber,
                                    builtin::scenario("point-over-torus").specs, D);
    CHECK(a.collapse_page == 5);
    CHECK(concentrated_in_row_zero(a.trace.back()));
    RingPtr er = make_ring({{"e1", 2}, {"e2", 2}});
    RingComparison cmp_a = compare_with_ring(
        a.totals, Ideal(er, {Polynomial::parse("e1*e2", er)}), MonomialOrder::lex(er));
    CHECK(cmp_a.equal);

    SpectralRun b = run_to_infinity(builtin::scenario("disc-over-bso4").base,
                                    builtin::scenario("disc-over-bso4").fiber,
                                    builtin::scenario("disc-over-bso4").specs, D);
    CHECK(b.totals.dim(0) == 1);
    for (int n = 1; n <= D; ++n)
        CHECK(b.totals.dim(n) == 0);

    SpectralRun c = run_to_infinity(builtin::scenario("disc-over-torus").base,
                                    builtin::scenario("disc-over-torus").fiber,
                                    builtin::scenario("disc-over-torus").specs, D);
    RingComparison cmp_c =
        compare_with_ring(c.totals, builtin::ideal_disc(), MonomialOrder::lex(builtin::ring_mh()));
    CHECK(cmp_c.equal);
    /* survivors exactly at (0,0), (2,0), (4,0) */
    std::set<std::pair<int, int>> support;
    for (const auto& [pq, entry] : c.trace.back().entries)
        if (entry.dim() > 0 && pq.first <= c.trace.back().exact_col)
            support.insert(pq);
    CHECK(support == std::set<std::pair<int, int>>{{0, 0}, {2, 0}, {4, 0}});

    SpectralRun d = run_to_infinity(builtin::scenario("main").base,
                                    builtin::scenario("main").fiber,
                                    builtin::scenario("main").specs, D);
    CHECK(d.collapse_page == 2);
    RingComparison cmp_d =
        compare_with_ring(d.totals, builtin::ideal_i2(), builtin::order_mhnt());
    CHECK(cmp_d.equal);
    CHECK(d.totals.dim(4) == 7);
    CHECK(d.totals.dim(6) == 8);
}

TEST_CASE("euler characteristic is preserved up to the boundary rank") {
    /* Page turning takes homology: the alternating sum over total degrees
       <= N changes exactly by the rank of the differentials leaving
       degree N. */
    for (const char* name : {"point-over-torus", "disc-over-torus", "disc-over-bso4"}) {
        const auto& s = builtin::scenario(name);
        Page page = build_e2(s.base, s.fiber, 16, s.fiber->top_degree());
        page.r = 4;
        apply_leibniz(page, s.specs[0]);
        Page next = turn_page(page);
        for (int N = 0; N <= 12; ++N) {
            long correction = (N % 2 == 0 ? 1 : -1) * rank_at_total_degree(page, N);
            CHECK(chi_up_to(next, N) == chi_up_to(page, N) - correction);
        }
    }
}

TEST_CASE("even pages force zero differentials") {
    const auto& d = builtin::scenario("main");
    Page e2 = build_e2(d.base, d.fiber, 10, 4);
    for (const auto& [pq, entry] : e2.entries)
        CHECK((pq.first + pq.second) % 2 == 0);
    /* no differential matrix can be nonzero: run asserts structurally */
    SpectralRun run = run_to_infinity(d.base, d.fiber, d.specs, 10);
    for (const auto& page : run.trace)
        CHECK(page.differentials_all_zero());
}

TEST_CASE("odd base columns carry the Koszul sign") {
    RingPtr r = make_ring({{"x", 1}});
    BaseRingPtr base = std::make_shared<const BaseRing>(Ideal(r, {}), MonomialOrder::lex(r));
    FiberPtr fiber = sphere_fiber("s", 3);
    DifferentialSpec spec;
    spec.page = 4;
    spec.images["s"] = {DifferentialSpec::Term{Polynomial::parse("x^4", r), "1"}};

    Page page = build_e2(base, fiber, 12, 3);
    page.r = 4;
    apply_leibniz(page, spec);
    /* d(x (x) s) = -x*x^4 = -x^5 */
    const QMatrix* m = page.differential(1, 3);
    REQUIRE(m != nullptr);
    REQUIRE(m->rows() == 1);
    CHECK(m->at(0, 0) == Rat(-1));

    SpectralRun run = run_to_infinity(base, fiber, {spec}, 8);
    RingComparison cmp = compare_with_ring(
        run.totals, Ideal(r, {Polynomial::parse("x^4", r)}), MonomialOrder::lex(r));
    CHECK(cmp.equal);
    CHECK(concentrated_in_row_zero(run.trace.back()));
}

TEST_CASE("ambiguous differentials are refused") {
    /* A sphere fiber with an odd-degree base makes (0,3) -> (4,0) joinable
       on page 4; without a spec the run must refuse. */
    RingPtr r = make_ring({{"x", 1}});
    BaseRingPtr base = std::make_shared<const BaseRing>(Ideal(r, {}), MonomialOrder::lex(r));
    FiberPtr fiber = sphere_fiber("s", 3);
    CHECK_THROWS_AS(run_to_infinity(base, fiber, {}, 8), SpecseqError);
}

TEST_CASE("undersized explicit windows are refused") {
    const auto& a = builtin::scenario("point-over-torus");
    CHECK_THROWS_AS(run_to_infinity(a.base, a.fiber, a.specs, 20, 21), TruncationTooSmall);
    /* a window with the full margin is accepted */
    SpectralRun ok = run_to_infinity(a.base, a.fiber, a.specs, 20, 24);
    CHECK(ok.totals.dim(20) == 2);
}
