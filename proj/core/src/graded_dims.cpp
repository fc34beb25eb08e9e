#include "qalg/graded_dims.hpp"

#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

GradedDims::GradedDims(int bound) : bound_(bound) {
    if (bound < 0)
        throw Error("degree bound must be non-negative");
}

long GradedDims::dim(int degree) const {
    if (degree < 0 || degree > bound_)
        throw Error("degree " + std::to_string(degree) + " outside bound 0.." +
                    std::to_string(bound_));
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

void GradedDims::set(int degree, long value) {
    if (degree < 0 || degree > bound_)
        throw Error("degree " + std::to_string(degree) + " outside bound 0.." +
                    std::to_string(bound_));
    if (value < 0)
        throw Error("dimensions cannot be negative");
    if (value == 0)
        dims_.erase(degree);
    else
        dims_[degree] = value;
}

bool GradedDims::operator==(const GradedDims& other) const {
    return bound_ == other.bound_ && dims_ == other.dims_;
}

std::string GradedDims::comma_list() const {
    std::string out;
    for (int d = 0; d <= bound_; ++d) {
        if (d)
            out += ',';
        out += std::to_string(dim(d));
    }
    return out;
}

std::string GradedDims::table() const {
    std::ostringstream os;
    os << "degree dim (bound " << bound_ << ", omitted degrees are 0)\n";
    for (const auto& [d, v] : dims_)
        os << "  " << d << "  " << v << "\n";
    return os.str();
}

std::optional<DimsMismatch> dims_first_mismatch(const GradedDims& a, const GradedDims& b) {
    if (a.bound() != b.bound())
        throw Error("comparing dimension tables with different bounds");
    for (int d = 0; d <= a.bound(); ++d)
        if (a.dim(d) != b.dim(d))
            return DimsMismatch{d, a.dim(d), b.dim(d)};
    return std::nullopt;
}

bool dims_equal(const GradedDims& a, const GradedDims& b) {
    return !dims_first_mismatch(a, b).has_value();
}

} // namespace qalg
