#ifndef QALG_JSONIO_HPP
#define QALG_JSONIO_HPP

#include <string>

#include "json.hpp"

#include "qalg/graded_dims.hpp"
#include "qalg/group_action.hpp"
#include "qalg/scenarios.hpp"

namespace qalg::io {

using nlohmann::json;

/* Parses a file into JSON; wraps syntax failures in qalg::ParseError. */
json load_json_file(const std::string& path);

/* {"vars":[{"name":"m","degree":2}, ...]} */
RingPtr ring_from_json(const json& j);
json ring_to_json(const RingSpec& ring);

/* {"kind":"lex","precedence":["m","h","n","t"]} */
MonomialOrder order_from_json(const json& j, RingPtr ring);
json order_to_json(const MonomialOrder& order);

/* {"ring":..., "generators":["m*h", ...], "order":... (optional)} */
struct IdealFile {
    Ideal ideal;
    MonomialOrder order;
};
IdealFile ideal_from_json(const json& j);

/* {"generators":[{"m":"-m","h":"-h","n":"n","t":"t"}, ...]} */
GroupAction action_from_json(const json& j, RingPtr ring,
                             std::size_t cap = GroupAction::kDefaultClosureCap);

/* {"bound":40,"dims":{"0":1,"2":4,...}} (zero entries omitted) */
GradedDims dims_from_json(const json& j);
json dims_to_json(const GradedDims& dims);

/* {"base":{...ideal file...}, "fiber":{"classes":[...],"unit":"1",
    "generators":[...],"products":[...]}, "differentials":[...]} */
builtin::Scenario scenario_from_json(const json& j);

} // namespace qalg::io

#endif
