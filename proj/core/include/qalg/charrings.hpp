#ifndef QALG_CHARRINGS_HPP
#define QALG_CHARRINGS_HPP

#include <string>
#include <vector>

#include "qalg/base_ring.hpp"

namespace qalg {

/* Rational cohomology rings of the classifying spaces the computation
   touches. BSO(4) is modeled as the free ring Q[p1, e] with |p1| = |e| = 4;
   the class p2 (= e^2) is outside every degree this tool inspects, so it
   is omitted. */
enum class ClassifyingRing { Bso2, Bso3, Bso4, Bso2xBso2 };

BaseRingPtr bso_ring(ClassifyingRing which);
ClassifyingRing classifying_ring_from_name(const std::string& name);

/* A graded ring map given by generator images. Images must be homogeneous
   of the generator's degree (or zero); well-definedness on the quotient is
   a separate, reported check. */
class RingMap {
public:
    RingMap(std::string name, std::string anchor, BaseRingPtr source, BaseRingPtr target,
            std::vector<Polynomial> images);

    const std::string& name() const { return name_; }
    /* The identity this map realizes, quoted in reports. */
    const std::string& anchor() const { return anchor_; }
    const BaseRingPtr& source() const { return source_; }
    const BaseRingPtr& target() const { return target_; }
    const std::vector<Polynomial>& images() const { return images_; }

    std::string describe() const;

private:
    std::string name_;
    std::string anchor_;
    BaseRingPtr source_;
    BaseRingPtr target_;
    std::vector<Polynomial> images_;
};

/* Substitute generator images and reduce modulo the target ideal. */
Polynomial apply_ring_map(const RingMap& map, const Polynomial& p);

struct WellDefinedReport {
    bool ok = true;
    /* Source ideal generators whose image does not reduce to zero,
       together with the offending normal form. */
    std::vector<std::pair<std::string, Polynomial>> failures;
};

WellDefinedReport check_well_defined(const RingMap& map);

/* True iff the image of p reduces to zero in the target. */
bool kernel_element_check(const RingMap& map, const Polynomial& p);

/* The catalogued maps between these rings, by name:
   i_star, bso3_restriction, t_pt_star, b_iota_1, b_iota_1j, f. */
const std::vector<RingMap>& builtin_maps();
const RingMap& builtin_map(const std::string& name);

} // namespace qalg

#endif
