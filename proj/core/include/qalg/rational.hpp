#ifndef QALG_RATIONAL_HPP
#define QALG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "qalg/errors.hpp"

namespace qalg {

/* Exact arbitrary-precision rational. Floating point is banned everywhere;
   every coefficient, matrix entry and dimension in the library is exact. */
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

/* Accepts "n" or "n/d" with optional leading '-'. */
inline Rat rat_from_string(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0)
        throw ParseError("invalid rational literal '" + s + "'", 0);
    r.canonicalize();
    return r;
}

} // namespace qalg

#endif
