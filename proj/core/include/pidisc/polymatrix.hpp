#pragma once

#include <functional>
#include <vector>

#include "pidisc/poly.hpp"

namespace pidisc {

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(const FieldSpec& f, std::size_t nvars, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }

    MultiPoly& at(std::size_t r, std::size_t c);
    const MultiPoly& at(std::size_t r, std::size_t c) const;

    PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    std::vector<std::vector<Scalar>> eval(const std::vector<Scalar>& point) const;

private:
    FieldSpec field_{};
    std::size_t nvars_ = 0, rows_ = 0, cols_ = 0;
    std::vector<MultiPoly> data_;
};

// Exact determinant by one-step fraction-free Bareiss elimination; every internal
// division is exact in the polynomial ring.
MultiPoly bareiss_det(const PolyMatrix& m);

MultiPoly minor_det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols);

// naive cofactor expansion; test oracle for bareiss_det
MultiPoly cofactor_det(const PolyMatrix& m);

// rank of a scalar matrix by Gaussian elimination
std::size_t scalar_rank(std::vector<std::vector<Scalar>> m);

// kernel basis (row vectors v with v*M = 0 ... see note) — this computes the
// null space of M x = 0, returned as a basis of column-coordinate vectors
std::vector<std::vector<Scalar>> scalar_kernel(std::vector<std::vector<Scalar>> m, const FieldSpec& f);

// rank over the fraction field of the entry ring; `normalize` is applied after each
// elimination step so quotient-ring relations can cancel (pass identity for plain rings)
std::size_t poly_rank(PolyMatrix m, const std::function<MultiPoly(const MultiPoly&)>& normalize);

// row-reduce rows in place over the scalar field; returns pivot column list
std::vector<std::size_t> row_reduce(std::vector<std::vector<Scalar>>& rows, const FieldSpec& f);

// reduce vector v against echelon rows (pivots as returned by row_reduce)
void reduce_against(std::vector<Scalar>& v, const std::vector<std::vector<Scalar>>& rows,
                    const std::vector<std::size_t>& pivots);

} // namespace pidisc
