#include "qalg/scenarios.hpp"

#include "qalg/errors.hpp"

namespace qalg::builtin {

RingPtr ring_mhnt() {
    static const RingPtr ring = make_ring({{"m", 2}, {"h", 2}, {"n", 2}, {"t", 2}});
    return ring;
}

MonomialOrder order_mhnt() { return MonomialOrder::lex(ring_mhnt()); }

Ideal ideal_i1() {
    RingPtr r = ring_mhnt();
    return Ideal(r, {Polynomial::parse("m*h", r), Polynomial::parse("n*t", r),
                     Polynomial::parse("m^2+h^2", r)});
}

Ideal ideal_i2() {
    RingPtr r = ring_mhnt();
    return Ideal(r, {Polynomial::parse("m*h", r), Polynomial::parse("n*t", r),
                     Polynomial::parse("m^2+h^2-n^2-t^2", r)});
}

GroupAction action_c2c2() {
    RingPtr r = ring_mhnt();
    SignedSubstitution flip_mh(r, {{0, -1}, {1, -1}, {2, 1}, {3, 1}});
    SignedSubstitution flip_nt(r, {{0, 1}, {1, 1}, {2, -1}, {3, -1}});
    return GroupAction::close(r, {flip_mh, flip_nt});
}

RingPtr ring_mh() {
    static const RingPtr ring = make_ring({{"m", 2}, {"h", 2}});
    return ring;
}

Ideal ideal_point() {
    RingPtr r = ring_mh();
    return Ideal(r, {Polynomial::parse("m*h", r)});
}

Ideal ideal_disc() {
    RingPtr r = ring_mh();
    return Ideal(r, {Polynomial::parse("m^2+h^2", r), Polynomial::parse("m*h", r)});
}

namespace {

/* H^*(S^3): the unit and one degree-3 class. */
FiberPtr fiber_s3() {
    static const FiberPtr fiber = sphere_fiber("s", 3);
    return fiber;
}

/* Q[a,b]/(a^2,b^2), |a| = |b| = 3: embeddings of a disc in the 3-sphere. */
FiberPtr fiber_disc_embeddings() {
    static const FiberPtr fiber = [] {
        std::vector<FiberAlgebra::Class> classes{{"1", 0}, {"a", 3}, {"b", 3}, {"ab", 6}};
        std::vector<FiberAlgebra::ProductEntry> products{
            {"a", "b", {{Rat(1), "ab"}}},
        };
        return std::make_shared<const FiberAlgebra>(std::move(classes), "1",
                                                    std::vector<std::string>{"a", "b"}, products);
    }();
    return fiber;
}

/* Q[m,h]/(m^2+h^2, m*h) as a 4-dimensional algebra: 1, m, h, m^2 with
   h^2 = -m^2 and m*h = 0. */
FiberPtr fiber_disc_ring() {
    static const FiberPtr fiber = [] {
        std::vector<FiberAlgebra::Class> classes{{"1", 0}, {"m", 2}, {"h", 2}, {"m2", 4}};
        std::vector<FiberAlgebra::ProductEntry> products{
            {"m", "m", {{Rat(1), "m2"}}},
            {"h", "h", {{Rat(-1), "m2"}}},
            {"m", "h", {}},
            {"m", "m2", {}},
            {"h", "m2", {}},
            {"m2", "m2", {}},
        };
        return std::make_shared<const FiberAlgebra>(std::move(classes), "1",
                                                    std::vector<std::string>{"m", "h"}, products);
    }();
    return fiber;
}

BaseRingPtr base_torus() {
    static const BaseRingPtr base = [] {
        RingPtr r = make_ring({{"e1", 2}, {"e2", 2}});
        return std::make_shared<const BaseRing>(Ideal(r, {}), MonomialOrder::lex(r));
    }();
    return base;
}

BaseRingPtr base_bso4() {
    static const BaseRingPtr base = [] {
        RingPtr r = make_ring({{"p1", 4}, {"e", 4}});
        return std::make_shared<const BaseRing>(Ideal(r, {}), MonomialOrder::lex(r));
    }();
    return base;
}

BaseRingPtr base_point_ring() {
    static const BaseRingPtr base = [] {
        RingPtr r = make_ring({{"n", 2}, {"t", 2}});
        Ideal ideal(r, {Polynomial::parse("n*t", r)});
        return std::make_shared<const BaseRing>(std::move(ideal), MonomialOrder::lex(r));
    }();
    return base;
}

DifferentialSpec d4_single(const std::string& gen, const std::string& value, const RingPtr& ring) {
    DifferentialSpec spec;
    spec.page = 4;
    spec.images[gen] = {DifferentialSpec::Term{Polynomial::parse(value, ring), "1"}};
    return spec;
}

std::vector<Scenario> make_scenarios() {
    std::vector<Scenario> out;

    {
        Scenario s;
        s.name = "point-over-torus";
        s.description = "S^3 over BSO(2)xBSO(2); d4(s) = e1*e2";
        s.base = base_torus();
        s.fiber = fiber_s3();
        s.specs = {d4_single("s", "e1*e2", s.base->ring())};
        out.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "disc-over-bso4";
        s.description = "Emb(D^3,S^3) over BSO(4); d4(a) = e, d4(b) = p1";
        s.base = base_bso4();
        s.fiber = fiber_disc_embeddings();
        DifferentialSpec spec;
        spec.page = 4;
        spec.images["a"] = {DifferentialSpec::Term{Polynomial::parse("e", s.base->ring()), "1"}};
        spec.images["b"] = {DifferentialSpec::Term{Polynomial::parse("p1", s.base->ring()), "1"}};
        s.specs = {spec};
        out.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "disc-over-torus";
        s.description = "Emb(D^3,S^3) over BSO(2)xBSO(2); d4(a) = e1*e2, d4(b) = e1^2+e2^2";
        s.base = base_torus();
        s.fiber = fiber_disc_embeddings();
        DifferentialSpec spec;
        spec.page = 4;
        spec.images["a"] = {
            DifferentialSpec::Term{Polynomial::parse("e1*e2", s.base->ring()), "1"}};
        spec.images["b"] = {
            DifferentialSpec::Term{Polynomial::parse("e1^2+e2^2", s.base->ring()), "1"}};
        s.specs = {spec};
        out.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "main";
        s.description = "disc ring over Q[n,t]/(n*t); no differentials (even grading)";
        s.base = base_point_ring();
        s.fiber = fiber_disc_ring();
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

const std::vector<Scenario>& scenarios() {
    static const std::vector<Scenario> all = make_scenarios();
    return all;
}

const Scenario& scenario(const std::string& name) {
    for (const auto& s : scenarios())
        if (s.name == name)
            return s;
    throw Error("unknown scenario '" + name + "'");
}

} // namespace qalg::builtin
