#include "doctest.h"

#include "qalg/errors.hpp"
#include "qalg/scenarios.hpp"
#include "test_support.hpp"

using namespace qalg;

namespace {
RingPtr R() { return builtin::ring_mhnt(); }
} // namespace

TEST_CASE("standard monomials examples") {
    RingPtr mh = builtin::ring_mh();
    /* Q[m,h] mod (m*h) in weighted degree 4: m^2 and h^2 */
    std::vector<Monomial> sm = standard_monomials({Monomial({1, 1})}, *mh, 4);
    CHECK(sm == std::vector<Monomial>{Monomial({2, 0}), Monomial({0, 2})});

    /* the degree-4 slice of R/I2 has exactly 7 classes */
    std::vector<Monomial> lt{Monomial({1, 1, 0, 0}), Monomial({0, 0, 1, 1}),
                             Monomial({2, 0, 0, 0}), Monomial({0, 3, 0, 0})};
    std::vector<Monomial> s4 = standard_monomials(lt, *R(), 4);
    std::vector<Monomial> expected{Monomial({1, 0, 1, 0}), Monomial({1, 0, 0, 1}),
                                   Monomial({0, 2, 0, 0}), Monomial({0, 1, 1, 0}),
                                   Monomial({0, 1, 0, 1}), Monomial({0, 0, 2, 0}),
                                   Monomial({0, 0, 0, 2})};
    CHECK(s4 == expected);

    CHECK(standard_monomials(lt, *R(), 0) == std::vector<Monomial>{Monomial::one(4)});
    CHECK(standard_monomials(lt, *R(), 3).empty()); /* odd degree, even variables */
}

TEST_CASE("hilbert function of the fixed-point ring") {
    GradedDims dims =
        hilbert_function(builtin::ideal_point(), MonomialOrder::lex(builtin::ring_mh()), 8);
    CHECK(dims.comma_list() == "1,0,2,0,2,0,2,0,2");
}

TEST_CASE("hilbert function of the fixed-disc ring") {
    GradedDims dims =
        hilbert_function(builtin::ideal_disc(), MonomialOrder::lex(builtin::ring_mh()), 8);
    CHECK(dims.comma_list() == "1,0,2,0,1,0,0,0,0");
}

TEST_CASE("hilbert function of the connected-sum ring") {
    GradedDims dims = hilbert_function(builtin::ideal_i2(), builtin::order_mhnt(), 12);
    CHECK(dims.comma_list() == "1,0,4,0,7,0,8,0,8,0,8,0,8");
}

TEST_CASE("hilbert function of a free ring") {
    RingPtr e = make_ring({{"e", 2}});
    GradedDims dims = hilbert_function(Ideal(e, {}), MonomialOrder::lex(e), 6);
    CHECK(dims.comma_list() == "1,0,1,0,1,0,1");
}

TEST_CASE("non-homogeneous generators are rejected") {
    Ideal bad(R(), {Polynomial::parse("m^2+h", R())});
    CHECK_THROWS_AS(hilbert_function(bad, builtin::order_mhnt(), 4), NonHomogeneous);
    CHECK_THROWS_AS(rank_oracle(bad, 4), NonHomogeneous);
}

TEST_CASE("dims comparison") {
    RingPtr mh = builtin::ring_mh();
    MonomialOrder o = MonomialOrder::lex(mh);
    GradedDims a = hilbert_function(builtin::ideal_point(), o, 10);
    Ideal larger(mh, {Polynomial::parse("m*h", mh), Polynomial::parse("m^2", mh)});
    GradedDims b = hilbert_function(larger, o, 10);
    auto mismatch = dims_first_mismatch(a, b);
    REQUIRE(mismatch.has_value());
    CHECK(mismatch->degree == 4);
    CHECK(mismatch->left == 2);
    CHECK(mismatch->right == 1);

    CHECK(dims_equal(a, a));
    GradedDims other_bound(12);
    CHECK_THROWS_AS(dims_first_mismatch(a, other_bound), Error);
}

TEST_CASE("rank oracle examples") {
    CHECK(rank_oracle(builtin::ideal_i2(), 4) == 7);
    RingPtr m1 = make_ring({{"m", 2}});
    CHECK(rank_oracle(Ideal(m1, {Polynomial::parse("m", m1)}), 2) == 0);
    /* zero ideal: every monomial survives */
    CHECK(rank_oracle(Ideal(R(), {}), 4) == 7 + 3); /* 10 monomials of weighted degree 4 */
    CHECK(rank_oracle(Ideal(R(), {}), 4) ==
          static_cast<long>(monomials_of_degree(*R(), 4).size()));
}

TEST_CASE("rank oracle agrees with standard monomial counts") {
    std::mt19937 rng(5150);
    for (int i = 0; i < 12; ++i) {
        RingPtr ring = testsup::random_small_ring(rng);
        Ideal ideal = testsup::random_homogeneous_ideal(rng, ring);
        GradedDims dims = hilbert_function(ideal, MonomialOrder::lex(ring), 10);
        for (int d = 0; d <= 10; ++d)
            CHECK(dims.dim(d) == rank_oracle(ideal, d));
    }
}

TEST_CASE("hilbert function does not depend on the order") {
    std::mt19937 rng(6021023);
    CHECK(hilbert_function(builtin::ideal_i1(), builtin::order_mhnt(), 12) ==
          hilbert_function(builtin::ideal_i1(), MonomialOrder::grevlex(R()), 12));
    CHECK(hilbert_function(builtin::ideal_i2(), builtin::order_mhnt(), 12) ==
          hilbert_function(builtin::ideal_i2(), MonomialOrder::grevlex(R()), 12));
    for (int i = 0; i < 8; ++i) {
        RingPtr ring = testsup::random_small_ring(rng);
        Ideal ideal = testsup::random_homogeneous_ideal(rng, ring);
        CHECK(hilbert_function(ideal, MonomialOrder::lex(ring), 8) ==
              hilbert_function(ideal, MonomialOrder::grevlex(ring), 8));
    }
}

TEST_CASE("adding a generator never increases a dimension") {
    std::mt19937 rng(140);
    for (int i = 0; i < 10; ++i) {
        RingPtr ring = testsup::random_small_ring(rng);
        Ideal ideal = testsup::random_homogeneous_ideal(rng, ring);
        Polynomial extra = testsup::random_homogeneous(rng, ring, 3);
        if (extra.is_zero())
            continue;
        std::vector<Polynomial> gens = ideal.generators;
        gens.push_back(extra);
        GradedDims before = hilbert_function(ideal, MonomialOrder::lex(ring), 8);
        GradedDims after = hilbert_function(Ideal(ring, gens), MonomialOrder::lex(ring), 8);
        for (int d = 0; d <= 8; ++d)
            CHECK(after.dim(d) <= before.dim(d));
    }
}
