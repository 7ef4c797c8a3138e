#pragma once

#include <functional>
#include <vector>

#include "pidisc/poly.hpp"

namespace pidisc {

// Generator list for an ideal of the center. Normalized on construction: zeros
// dropped, generators made monic, scalar-duplicate generators merged, sorted.
struct IdealGens {
    std::vector<MultiPoly> generators;
    bool monomial_flag = false;

    static IdealGens make(std::vector<MultiPoly> gens);
    bool is_zero_ideal() const { return generators.empty(); }
};

// maps a monomial's exponent vector to exponents in an ambient polynomial ring;
// identity for plain polynomial centers
using AmbientMap = std::function<ExpVec(const ExpVec&)>;

AmbientMap identity_ambient_map();

// equality of two monomial ideals by mutual divisibility of generators, with
// divisibility tested in ambient exponents
bool monomial_ideal_equal(const IdealGens& a, const IdealGens& b, const AmbientMap& ambient);
bool monomial_ideal_equal(const IdealGens& a, const IdealGens& b);

// f in <gens> with quotient degrees bounded by degree_bound - deg(g_i), decided by
// exact linear algebra on coefficient vectors (plain polynomial rings only)
bool linear_membership(const MultiPoly& f, const IdealGens& gens, long long degree_bound);

} // namespace pidisc
