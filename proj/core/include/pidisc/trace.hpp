#pragma once

#include "pidisc/algebra.hpp"

namespace pidisc {

enum class TraceKind { regular, standard, reduced, scaled };

std::string trace_kind_name(TraceKind k);

// A central-valued, C-linear, cyclic map on a presented algebra, held as its values
// on the spanning set. Values are computed once at construction; afterwards the map
// is read-only and shareable across threads.
class TraceMap {
public:
    static TraceMap regular(const PresentedAlgebra& a);
    // standard trace over the fraction field on the algebra's qbasis
    static TraceMap standard(const PresentedAlgebra& a);
    static TraceMap standard(const PresentedAlgebra& a, const std::vector<std::size_t>& qbasis);
    // standard / n; n must be invertible in K
    static TraceMap reduced(const PresentedAlgebra& a, unsigned n);
    // z * base, the almost-representation-theoretic family
    static TraceMap scaled(const TraceMap& base, const MultiPoly& z);

    TraceKind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    const PresentedAlgebra& algebra() const { return *alg_; }

    const MultiPoly& basis_value(std::size_t i) const { return values_[i]; }
    MultiPoly value(const AlgElement& a) const;
    // tr(a*b) through the cached basis values
    MultiPoly pair(const AlgElement& a, const AlgElement& b) const;

private:
    TraceKind kind_ = TraceKind::regular;
    const PresentedAlgebra* alg_ = nullptr;
    std::vector<MultiPoly> values_;
    std::string label_;
};

// coefficients c_1..c_n of x^n - c_1 x^{n-1} + ... + (-1)^n c_n from the Newton
// power-sum recursion over traces of powers
struct CharPoly {
    unsigned degree = 0;
    std::vector<MultiPoly> coeffs;
};

CharPoly newton_char_poly(const PresentedAlgebra& a, const AlgElement& elem, unsigned n,
                          const TraceMap& tr);

// chi(elem) == 0 in the algebra
bool cayley_hamilton_check(const PresentedAlgebra& a, const AlgElement& elem, unsigned n,
                           const TraceMap& tr);

} // namespace pidisc
