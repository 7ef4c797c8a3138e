#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pidisc/central_ring.hpp"
#include "pidisc/polymatrix.hpp"
#include "pidisc/rng.hpp"

namespace pidisc {

// coordinates over the spanning set L: label index -> central coefficient
using LinComb = std::map<std::size_t, MultiPoly>;

struct AlgElement {
    LinComb coeffs;
    bool is_zero() const { return coeffs.empty(); }
};

// coordinate canonicalization schemes for spanning sets with relations
enum class CanonKind {
    none,
    // L ends with (..., x*e12, y*e12); the pair (alpha, beta) with alpha*x + beta*y
    // is canonical when alpha has no y-monomials
    matrix_order_e12,
    // coordinates re-decomposed through the ambient monomials X1^a X2^b X3^c
    quantum_affine,
};

// An algebra given by a finite spanning set over a central ring together with
// structure constants  y_i y_j = sum_k c_ijk y_k.
class PresentedAlgebra {
public:
    CentralRing center;
    std::vector<std::string> basis_labels;
    std::vector<LinComb> table; // row-major |L| x |L|
    LinComb identity;
    bool is_free = false;
    std::optional<unsigned> pi_degree_hint;
    // generators of the module of relations among the spanning set (empty if free)
    std::vector<LinComb> syzygies;
    // a fraction-field basis of size n^2 (indices into L); all labels when free
    std::vector<std::size_t> qbasis;
    // expansion of L \ qbasis members over qbasis with fraction coefficients
    std::map<std::size_t, std::vector<std::pair<std::size_t, PolyFraction>>> qexpansion;
    CanonKind canon = CanonKind::none;
    // direct sampler of relation-satisfying central points (rejection otherwise)
    std::function<std::vector<Scalar>(Rng&)> point_sampler;

    std::size_t size() const { return basis_labels.size(); }
    const LinComb& entry(std::size_t i, std::size_t j) const { return table[i * size() + j]; }

    AlgElement zero() const { return AlgElement{}; }
    AlgElement one() const { return AlgElement{identity}; }
    AlgElement basis_element(std::size_t i) const;
    AlgElement from_label(const std::string& label) const;
    std::size_t label_index(const std::string& label) const;

    AlgElement add(const AlgElement& a, const AlgElement& b) const;
    AlgElement sub(const AlgElement& a, const AlgElement& b) const;
    AlgElement scale(const AlgElement& a, const MultiPoly& c) const;
    AlgElement scale(const AlgElement& a, const Scalar& c) const;
    AlgElement multiply(const AlgElement& a, const AlgElement& b) const;
    AlgElement power(const AlgElement& a, unsigned e) const;

    void canonicalize(AlgElement& a) const;
    bool equal(const AlgElement& a, const AlgElement& b) const;

    // |L| x |L| matrix M with a*y_j = sum_i M_ij y_i; free presentations only
    PolyMatrix left_mult_matrix(const AlgElement& a) const;

    // dimension of R tensor Frac(C): |L| - generic rank of the syzygy matrix,
    // cross-checked at random central points, symbolic when |L| <= 8
    unsigned generic_rank(Rng& rng) const;
    unsigned pi_degree(Rng& rng) const;

    std::string str(const AlgElement& a) const;

    // random element with small sparse central coefficients (tests, property suites)
    AlgElement random_element(Rng& rng, int max_terms = 2, std::uint32_t max_deg = 1,
                              long long coeff_range = 4) const;

    // random valid central point; for relation rings, retries until the relations hold
    std::vector<Scalar> random_point(Rng& rng) const;

    void validate() const; // identity is two-sided unit; table shape sane
};

// the subalgebra [[Z, <x,y>], [Z, Z]] of M_2(K[x,y]); char != 2
PresentedAlgebra build_matrix_order(const FieldSpec& f);

// quantum affine 3-space K_p[X1,X2,X3] with p12 = p13 = -1, p23 = 1 presented over
// its center K<X1^2, X2^2, X3^2, X2X3>; char not in {2, 3}
PresentedAlgebra build_quantum_affine(const FieldSpec& f, const std::vector<std::vector<Scalar>>& pij);

} // namespace pidisc
