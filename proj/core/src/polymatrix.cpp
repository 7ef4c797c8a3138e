#include "pidisc/polymatrix.hpp"

#include <algorithm>

namespace pidisc {

PolyMatrix::PolyMatrix(const FieldSpec& f, std::size_t nvars, std::size_t rows, std::size_t cols)
    : field_(f), nvars_(nvars), rows_(rows), cols_(cols), data_(rows * cols, MultiPoly(f, nvars)) {}

MultiPoly& PolyMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw shape_error("matrix index out of range");
    return data_[r * cols_ + c];
}

const MultiPoly& PolyMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw shape_error("matrix index out of range");
    return data_[r * cols_ + c];
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
    PolyMatrix s(field_, nvars_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = at(rows[i], cols[j]);
    return s;
}

std::vector<std::vector<Scalar>> PolyMatrix::eval(const std::vector<Scalar>& point) const {
    std::vector<std::vector<Scalar>> out(rows_, std::vector<Scalar>(cols_, Scalar::zero(field_)));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j).eval(point);
    return out;
}

MultiPoly bareiss_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw shape_error("determinant of non-square matrix");
    std::size_t n = m.rows();
    const FieldSpec& f = m.field();
    if (n == 0) return MultiPoly::from_int(f, m.nvars(), 1);

    std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n, MultiPoly(f, m.nvars())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    bool negate = false;
    MultiPoly prev = MultiPoly::from_int(f, m.nvars(), 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MultiPoly(f, m.nvars()); // singular
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = num.exact_div(prev);
                if (!q) throw inconsistency_error("Bareiss division not exact");
                a[i][j] = std::move(*q);
            }
            a[i][k] = MultiPoly(f, m.nvars());
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

MultiPoly minor_det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw shape_error("minor index sets differ in size");
    for (auto r : rows)
        if (r >= m.rows()) throw shape_error("minor row index out of range");
    for (auto c : cols)
        if (c >= m.cols()) throw shape_error("minor column index out of range");
    return bareiss_det(m.submatrix(rows, cols));
}

MultiPoly cofactor_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw shape_error("determinant of non-square matrix");
    std::size_t n = m.rows();
    const FieldSpec& f = m.field();
    if (n == 0) return MultiPoly::from_int(f, m.nvars(), 1);
    if (n == 1) return m.at(0, 0);
    MultiPoly acc(f, m.nvars());
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(j);
    std::vector<std::size_t> rows;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        std::vector<std::size_t> subc;
        for (std::size_t c : cols)
            if (c != j) subc.push_back(c);
        MultiPoly sub = cofactor_det(m.submatrix(rows, subc));
        MultiPoly term = m.at(0, j) * sub;
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

std::size_t scalar_rank(std::vector<std::vector<Scalar>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        Scalar inv = m[rank][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c].is_zero()) continue;
            Scalar factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::size_t> row_reduce(std::vector<std::vector<Scalar>>& rows, const FieldSpec& f) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Scalar inv = rows[r][c].inverse();
        for (std::size_t j = 0; j < cols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar factor = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size(), std::vector<Scalar>(cols, Scalar::zero(f)));
    return pivots;
}

void reduce_against(std::vector<Scalar>& v, const std::vector<std::vector<Scalar>>& rows,
                    const std::vector<std::size_t>& pivots) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Scalar factor = v[pivots[r]];
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * rows[r][j];
    }
}

std::vector<std::vector<Scalar>> scalar_kernel(std::vector<std::vector<Scalar>> m, const FieldSpec& f) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    auto pivots = row_reduce(m, f);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(cols, Scalar::zero(f));
        v[c] = Scalar::one(f);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t poly_rank(PolyMatrix m, const std::function<MultiPoly(const MultiPoly&)>& normalize) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && normalize(m.at(piv, c)).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        // cross-multiplication elimination keeps entries polynomial
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (normalize(m.at(i, c)).is_zero()) {
                m.at(i, c) = MultiPoly(m.field(), m.nvars());
                continue;
            }
            for (std::size_t j = c + 1; j < cols; ++j)
                m.at(i, j) = normalize(m.at(i, j) * m.at(rank, c) - m.at(rank, j) * m.at(i, c));
            m.at(i, c) = MultiPoly(m.field(), m.nvars());
        }
        ++rank;
    }
    return rank;
}

} // namespace pidisc
