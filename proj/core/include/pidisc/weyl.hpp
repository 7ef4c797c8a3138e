#pragma once

#include "pidisc/algebra.hpp"

namespace pidisc {

// Parameters of a cocycle-twisted tensor product of quantized Weyl algebras:
// a partition grouping the N coordinate pairs into tensor factors, a root of
// unity epsilon_i != 1 per coordinate, and an antisymmetric bicharacter twist.
struct WeylParams {
    FieldSpec field;
    std::vector<unsigned> lambda;           // partition, non-increasing, sums to N
    std::vector<Scalar> epsilon;            // length N
    std::vector<std::vector<Scalar>> chi;   // N x N twist values chi(e_i, e_j)

    std::size_t n_coords() const { return epsilon.size(); }
};

void validate_weyl_params(const WeylParams& p);

// divisibility condition: ord(eps_i) and ord(chi(e_i, e_j)) divide ord(eps_l)
// whenever i, l share a block and i <= l
bool check_center_condition(const WeylParams& p);

class WeylAlgebra {
public:
    PresentedAlgebra alg;                // free over K[X_i, Y_i]
    WeylParams params;
    std::vector<std::uint64_t> d;        // orders of the epsilons
    std::uint64_t r = 1;                 // prod d_i
    std::vector<std::size_t> block_of;   // coordinate -> block
    std::vector<std::size_t> nprime;     // coordinate -> first coordinate of its block

    std::size_t n_coords() const { return params.n_coords(); }
    // basis monomial x_1^{a_1} y_1^{b_1} ... with exponents e = (a_1, b_1, a_2, b_2, ...)
    std::size_t index_of(const ExpVec& e) const;
    const ExpVec& exps_of(std::size_t idx) const { return basis_exps_[idx]; }

    AlgElement gen_x(std::size_t i) const;
    AlgElement gen_y(std::size_t i) const;

    const std::vector<AlgElement>& z_elems() const { return z_elems_; }
    const std::vector<MultiPoly>& Z_polys() const { return Z_polys_; }

    friend WeylAlgebra build_weyl(const WeylParams& p);

private:
    std::vector<ExpVec> basis_exps_;
    std::vector<AlgElement> z_elems_;
    std::vector<MultiPoly> Z_polys_;
};

WeylAlgebra build_weyl(const WeylParams& p);

// z_i = [x_i, y_i]; normality against every generator is verified, failures are
// builder bugs
std::vector<AlgElement> z_elements(const WeylAlgebra& w);

// central polynomials Z_i with z_i^{d_i} = Z_i, from the block recursion
std::vector<MultiPoly> Z_centrals(const WeylAlgebra& w);

// r * prod Z_i^{r^2 (d_i - 1)/d_i}, the discriminant up to a scalar; char must not divide r
MultiPoly predicted_discriminant(const WeylAlgebra& w);

// every Z_i nonzero at the point
bool azumaya_predicate(const WeylAlgebra& w, const std::vector<Scalar>& point);

} // namespace pidisc
