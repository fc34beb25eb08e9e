#include "qalg/qmatrix.hpp"

#include <algorithm>
#include <map>

#include "qalg/errors.hpp"

namespace qalg {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Rat>>& cols) {
    QMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw Error("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m.at(i, j) = cols[j][i];
    }
    return m;
}

std::vector<Rat> QMatrix::column(std::size_t j) const {
    std::vector<Rat> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = at(i, j);
    return c;
}

bool QMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (cols_ != other.rows_)
        throw Error("matrix product shape mismatch");
    QMatrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                r.at(i, j) += x * other.at(k, j);
        }
    return r;
}

std::vector<std::size_t> QMatrix::rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols_ && row < m.rows_; ++col) {
        std::size_t sel = row;
        while (sel < m.rows_ && m.at(sel, col) == 0)
            ++sel;
        if (sel == m.rows_)
            continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols_; ++j)
                std::swap(m.at(sel, j), m.at(row, j));
        Rat inv = 1 / m.at(row, col);
        for (std::size_t j = col; j < m.cols_; ++j)
            m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (i == row || m.at(i, col) == 0)
                continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < m.cols_; ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t QMatrix::rank() const {
    QMatrix copy = *this;
    return rref(copy).size();
}

QMatrix QMatrix::kernel_basis() const {
    QMatrix r = *this;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r.at(k, f);
        basis.push_back(std::move(v));
    }
    return from_columns(cols_, basis);
}

void RowReducer::reduce(std::vector<Rat>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rat& c = v[pivots_[k]];
        if (c == 0)
            continue;
        Rat f = c;
        const auto& row = rows_[k];
        for (std::size_t j = pivots_[k]; j < width_; ++j)
            if (row[j] != 0)
                v[j] -= f * row[j];
    }
}

std::optional<std::size_t> RowReducer::insert(std::vector<Rat> v) {
    if (v.size() != width_)
        throw Error("row width mismatch");
    reduce(v);
    std::size_t pivot = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (v[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot == width_)
        return std::nullopt;
    Rat inv = 1 / v[pivot];
    for (std::size_t j = pivot; j < width_; ++j)
        v[j] *= inv;
    /* Back-substitute to keep the stored rows fully reduced. */
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Rat c = rows_[k][pivot];
        if (c == 0)
            continue;
        for (std::size_t j = pivot; j < width_; ++j)
            rows_[k][j] -= c * v[j];
    }
    /* Keep rows sorted by pivot for determinism. */
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot)
        ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, pivot);
    return pivot;
}

namespace {

/* v + c*row, merged by index with zero sums dropped. */
SparseVec sparse_axpy(const SparseVec& v, const Rat& c, const SparseVec& row) {
    SparseVec out;
    out.reserve(v.size() + row.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < row.size()) {
        if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
            out.push_back(v[i++]);
        } else if (i == v.size() || row[j].first < v[i].first) {
            out.emplace_back(row[j].first, c * row[j].second);
            ++j;
        } else {
            Rat sum = v[i].second + c * row[j].second;
            if (sum != 0)
                out.emplace_back(v[i].first, std::move(sum));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

std::size_t rank_of_sparse_vectors(const std::vector<SparseVec>& vectors) {
    std::map<std::size_t, SparseVec> rows; /* pivot -> normalized row */
    for (const auto& vec : vectors) {
        SparseVec v = vec;
        while (!v.empty()) {
            const std::size_t pivot = v.front().first;
            auto it = rows.find(pivot);
            if (it == rows.end()) {
                Rat inv = 1 / v.front().second;
                for (auto& [idx, coeff] : v)
                    coeff *= inv;
                rows.emplace(pivot, std::move(v));
                break;
            }
            v = sparse_axpy(v, -v.front().second, it->second);
        }
    }
    return rows.size();
}

std::size_t rank_of_vectors(std::size_t width, const std::vector<std::vector<Rat>>& vectors) {
    std::vector<SparseVec> sparse;
    sparse.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != width)
            throw Error("row width mismatch");
        SparseVec s;
        for (std::size_t j = 0; j < width; ++j)
            if (v[j] != 0)
                s.emplace_back(j, v[j]);
        if (!s.empty())
            sparse.push_back(std::move(s));
    }
    return rank_of_sparse_vectors(sparse);
}

QuotientBasis quotient_basis(std::size_t width, const std::vector<std::vector<Rat>>& kernel,
                             const std::vector<std::vector<Rat>>& image) {
    RowReducer red(width);
    for (const auto& v : image)
        red.insert(v);
    QuotientBasis out;
    for (const auto& v : kernel) {
        std::vector<Rat> w = v;
        red.reduce(w);
        std::size_t pivot = width;
        for (std::size_t j = 0; j < width; ++j)
            if (w[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot == width)
            continue;
        Rat inv = 1 / w[pivot];
        for (std::size_t j = pivot; j < width; ++j)
            w[j] *= inv;
        out.pivots.push_back(pivot);
        out.representatives.push_back(w);
        red.insert(std::move(w));
    }
    return out;
}

} // namespace qalg
