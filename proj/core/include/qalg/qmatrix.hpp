#ifndef QALG_QMATRIX_HPP
#define QALG_QMATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qalg/rational.hpp"

namespace qalg {

/* Dense exact-rational matrix. Sized for the tiny systems this library
   meets (dozens of rows); no pivoting heuristics needed for exactness. */
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    static QMatrix identity(std::size_t n);
    static QMatrix from_columns(std::size_t rows, const std::vector<std::vector<Rat>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Rat> column(std::size_t j) const;
    bool is_zero() const;

    QMatrix operator*(const QMatrix& other) const;

    std::size_t rank() const;
    /* Basis of the right nullspace, one vector per column, ordered by the
       free-column index. */
    QMatrix kernel_basis() const;

    /* In-place reduced row echelon form; returns the pivot columns. */
    static std::vector<std::size_t> rref(QMatrix& m);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> a_;
};

/* Incremental row-space in reduced echelon form. Pivots sit on the first
   nonzero coordinate, so representatives prefer earlier basis elements. */
class RowReducer {
public:
    explicit RowReducer(std::size_t width) : width_(width) {}

    /* Eliminates known pivots from v in place. */
    void reduce(std::vector<Rat>& v) const;

    /* Reduce, then insert if nonzero. Returns the pivot column of the
       inserted row, or nullopt if v lies in the current row space. */
    std::optional<std::size_t> insert(std::vector<Rat> v);

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t width_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> pivots_;
};

/* Coordinate vector stored as (index, coefficient) pairs, index
   ascending, coefficients nonzero. */
using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

/* Rank by leading-entry elimination; suited to wide, mostly-empty rows. */
std::size_t rank_of_sparse_vectors(const std::vector<SparseVec>& vectors);

/* Rank of a list of coordinate vectors. */
std::size_t rank_of_vectors(std::size_t width, const std::vector<std::vector<Rat>>& vectors);

struct QuotientBasis {
    /* One representative per quotient basis vector (reduced against the
       image and earlier representatives). */
    std::vector<std::vector<Rat>> representatives;
    /* Pivot coordinate of each representative. */
    std::vector<std::size_t> pivots;
};

/* Basis of span(kernel)/span(image); image must lie inside the kernel. */
QuotientBasis quotient_basis(std::size_t width, const std::vector<std::vector<Rat>>& kernel,
                             const std::vector<std::vector<Rat>>& image);

} // namespace qalg

#endif
