#include "qalg/charrings.hpp"

#include "qalg/errors.hpp"
#include "qalg/scenarios.hpp"

namespace qalg {

namespace {

BaseRingPtr free_base(std::vector<VarSpec> vars) {
    RingPtr r = make_ring(std::move(vars));
    return std::make_shared<const BaseRing>(Ideal(r, {}), MonomialOrder::lex(r));
}

Polynomial poly_pow(const Polynomial& p, int e) {
    Polynomial acc = Polynomial::constant(p.ring(), Rat(1));
    for (int i = 0; i < e; ++i)
        acc = acc * p;
    return acc;
}

} // namespace

BaseRingPtr bso_ring(ClassifyingRing which) {
    static const BaseRingPtr bso2 = free_base({{"e", 2}});
    static const BaseRingPtr bso3 = free_base({{"p1", 4}});
    static const BaseRingPtr bso4 = free_base({{"p1", 4}, {"e", 4}});
    static const BaseRingPtr torus = free_base({{"e1", 2}, {"e2", 2}});
    switch (which) {
    case ClassifyingRing::Bso2:
        return bso2;
    case ClassifyingRing::Bso3:
        return bso3;
    case ClassifyingRing::Bso4:
        return bso4;
    case ClassifyingRing::Bso2xBso2:
        return torus;
    }
    throw Error("unsupported classifying ring");
}

ClassifyingRing classifying_ring_from_name(const std::string& name) {
    if (name == "bso2" || name == "2")
        return ClassifyingRing::Bso2;
    if (name == "bso3" || name == "3")
        return ClassifyingRing::Bso3;
    if (name == "bso4" || name == "4")
        return ClassifyingRing::Bso4;
    if (name == "bso2xbso2" || name == "2x2" || name == "torus")
        return ClassifyingRing::Bso2xBso2;
    throw Error("unknown classifying ring '" + name + "' (bso2, bso3, bso4, bso2xbso2)");
}

RingMap::RingMap(std::string name, std::string anchor, BaseRingPtr source, BaseRingPtr target,
                 std::vector<Polynomial> images)
    : name_(std::move(name)), anchor_(std::move(anchor)), source_(std::move(source)),
      target_(std::move(target)), images_(std::move(images)) {
    const RingSpec& src = *source_->ring();
    if (images_.size() != src.size())
        throw Error("ring map must give an image for every source generator");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (*images_[i].ring() != *target_->ring())
            throw RingMismatch("image of '" + src.name(i) + "' lives in the wrong ring");
        Polynomial reduced = target_->reduce(images_[i]);
        auto deg = reduced.homogeneous_degree();
        if (!reduced.is_zero() && (!deg || *deg != src.degree(i)))
            throw DegreeMismatch("image of '" + src.name(i) + "' must be homogeneous of degree " +
                                 std::to_string(src.degree(i)));
        images_[i] = std::move(reduced);
    }
}

std::string RingMap::describe() const {
    std::string out = name_ + ":";
    const RingSpec& src = *source_->ring();
    for (std::size_t i = 0; i < src.size(); ++i)
        out += " " + src.name(i) + " -> " + images_[i].format() + (i + 1 < src.size() ? "," : "");
    return out;
}

Polynomial apply_ring_map(const RingMap& map, const Polynomial& p) {
    if (*p.ring() != *map.source()->ring())
        throw RingMismatch("polynomial is not in the source ring of '" + map.name() + "'");
    const RingPtr& target = map.target()->ring();
    Polynomial acc = Polynomial::zero(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m.exp(i) > 0)
                term = term * poly_pow(map.images()[i], m.exp(i));
        acc = acc + term;
    }
    return map.target()->reduce(acc);
}

WellDefinedReport check_well_defined(const RingMap& map) {
    WellDefinedReport report;
    for (const auto& g : map.source()->ideal().generators) {
        Polynomial image = apply_ring_map(map, g);
        if (!image.is_zero()) {
            report.ok = false;
            report.failures.emplace_back(g.format(), image);
        }
    }
    return report;
}

bool kernel_element_check(const RingMap& map, const Polynomial& p) {
    return apply_ring_map(map, p).is_zero();
}

namespace {

std::vector<RingMap> make_builtin_maps() {
    std::vector<RingMap> maps;

    BaseRingPtr bso2 = bso_ring(ClassifyingRing::Bso2);
    BaseRingPtr bso3 = bso_ring(ClassifyingRing::Bso3);
    BaseRingPtr bso4 = bso_ring(ClassifyingRing::Bso4);
    BaseRingPtr torus = bso_ring(ClassifyingRing::Bso2xBso2);

    const RingPtr torus_ring = torus->ring();
    maps.emplace_back("i_star", "p1 -> e1^2+e2^2, e -> e1*e2", bso4, torus,
                      std::vector<Polynomial>{Polynomial::parse("e1^2+e2^2", torus_ring),
                                              Polynomial::parse("e1*e2", torus_ring)});

    maps.emplace_back("bso3_restriction", "p1 -> p1, e -> 0", bso4, bso3,
                      std::vector<Polynomial>{Polynomial::parse("p1", bso3->ring()),
                                              Polynomial::zero(bso3->ring())});

    /* Q[m,h]/(m*h): classes fixing a point in a lens space. */
    RingPtr mh = builtin::ring_mh();
    BaseRingPtr point_ring =
        std::make_shared<const BaseRing>(builtin::ideal_point(), MonomialOrder::lex(mh));
    maps.emplace_back("t_pt_star", "p1 -> m^2+h^2", bso3, point_ring,
                      std::vector<Polynomial>{Polynomial::parse("m^2+h^2", mh)});

    maps.emplace_back("b_iota_1", "e1 -> 0, e2 -> e", torus, bso2,
                      std::vector<Polynomial>{Polynomial::zero(bso2->ring()),
                                              Polynomial::parse("e", bso2->ring())});
    maps.emplace_back("b_iota_1j", "e1 -> e, e2 -> 0", torus, bso2,
                      std::vector<Polynomial>{Polynomial::parse("e", bso2->ring()),
                                              Polynomial::zero(bso2->ring())});

    /* Restriction product onto the connected-sum classes: the quotient of
       Q[m,h,n,t]/(m*h, n*t) by the extra relation m^2+h^2-n^2-t^2. */
    RingPtr r4 = builtin::ring_mhnt();
    Ideal product_ideal(r4, {Polynomial::parse("m*h", r4), Polynomial::parse("n*t", r4)});
    BaseRingPtr product_ring =
        std::make_shared<const BaseRing>(std::move(product_ideal), builtin::order_mhnt());
    BaseRingPtr sum_ring =
        std::make_shared<const BaseRing>(builtin::ideal_i2(), builtin::order_mhnt());
    maps.emplace_back("f", "m^2+h^2-n^2-t^2 in ker(f)", product_ring, sum_ring,
                      std::vector<Polynomial>{
                          Polynomial::parse("m", r4),
                          Polynomial::parse("h", r4),
                          Polynomial::parse("n", r4),
                          Polynomial::parse("t", r4),
                      });

    return maps;
}

} // namespace

const std::vector<RingMap>& builtin_maps() {
    static const std::vector<RingMap> maps = make_builtin_maps();
    return maps;
}

const RingMap& builtin_map(const std::string& name) {
    for (const auto& m : builtin_maps())
        if (m.name() == name)
            return m;
    throw Error("unknown map '" + name + "'");
}

} // namespace qalg
