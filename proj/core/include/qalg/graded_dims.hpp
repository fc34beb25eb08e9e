#ifndef QALG_GRADED_DIMS_HPP
#define QALG_GRADED_DIMS_HPP

#include <map>
#include <optional>
#include <string>

namespace qalg {

/* Dimension of each graded slice up to a bound; absent degrees are zero. */
class GradedDims {
public:
    explicit GradedDims(int bound);

    int bound() const { return bound_; }
    long dim(int degree) const;
    void set(int degree, long value);
    const std::map<int, long>& nonzero() const { return dims_; }

    bool operator==(const GradedDims& other) const;

    /* Comma list "1,0,4,0,7,..." over degrees 0..bound. */
    std::string comma_list() const;
    /* Two-column table of the nonzero entries. */
    std::string table() const;

private:
    int bound_;
    std::map<int, long> dims_;
};

struct DimsMismatch {
    int degree;
    long left;
    long right;
};

/* First degree at which the tables differ; bounds must agree. */
std::optional<DimsMismatch> dims_first_mismatch(const GradedDims& a, const GradedDims& b);
bool dims_equal(const GradedDims& a, const GradedDims& b);

} // namespace qalg

#endif
