#ifndef QALG_FIBER_ALGEBRA_HPP
#define QALG_FIBER_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qalg/rational.hpp"

namespace qalg {

/* A finite-dimensional graded-commutative Q-algebra given by a labeled
   basis and structure constants. Validated on construction: unit acts as
   the identity, products respect degrees, graded commutativity with Koszul
   signs holds, odd classes square to zero, and multiplication is
   associative. Missing products default to zero.

   For Leibniz propagation of differentials, every basis class other than
   the unit and the listed generators must factor as a scalar multiple of
   generator * class. */
class FiberAlgebra {
public:
    struct Class {
        std::string label;
        int degree = 0;
    };

    struct ProductTerm {
        Rat coeff;
        std::string cls;
    };

    struct ProductEntry {
        std::string left;
        std::string right;
        std::vector<ProductTerm> value;
    };

    /* x_i = scale * (x_gen * x_rest) */
    struct Factorization {
        std::size_t gen = 0;
        std::size_t rest = 0;
        Rat scale;
    };

    FiberAlgebra(std::vector<Class> classes, const std::string& unit_label,
                 std::vector<std::string> generator_labels,
                 const std::vector<ProductEntry>& products);

    std::size_t size() const { return classes_.size(); }
    const Class& cls(std::size_t i) const { return classes_[i]; }
    std::size_t unit() const { return unit_; }
    const std::vector<std::size_t>& generators() const { return generators_; }
    bool is_generator(std::size_t i) const;
    std::optional<std::size_t> index_of(const std::string& label) const;

    int top_degree() const;
    std::vector<std::size_t> classes_of_degree(int q) const;
    long dim(int q) const { return static_cast<long>(classes_of_degree(q).size()); }

    /* Structure constants of x_i * x_j as (class index, coefficient). */
    const std::vector<std::pair<std::size_t, Rat>>& product(std::size_t i, std::size_t j) const;

    const Factorization& factorization(std::size_t i) const;

private:
    std::vector<Class> classes_;
    std::size_t unit_ = 0;
    std::vector<std::size_t> generators_;
    std::vector<std::vector<std::vector<std::pair<std::size_t, Rat>>>> mult_;
    std::map<std::size_t, Factorization> factorization_;
};

using FiberPtr = std::shared_ptr<const FiberAlgebra>;

/* Exterior generator in one degree: basis {1, x}, x*x = 0. */
FiberPtr sphere_fiber(const std::string& label, int degree);

} // namespace qalg

#endif
