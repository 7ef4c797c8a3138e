#pragma once

#include "pidisc/ideal.hpp"
#include "pidisc/trace.hpp"

namespace pidisc {

// matrix of pairwise trace values tr(y_i y_j) over the spanning set
struct GramMatrix {
    PolyMatrix mat;
    TraceKind kind;
    std::string trace_label;
};

GramMatrix gram(const PresentedAlgebra& a, const TraceMap& tr);

enum class DiscVariant { d_restricted, md };

struct DiscriminantResult {
    unsigned level = 0;
    DiscVariant variant = DiscVariant::md;
    std::string trace_label;
    IdealGens ideal;
    std::uint64_t determinants_evaluated = 0;
};

// all det([tr(y_i y'_j)]) over pairs of level-subsets of L, deduplicated up to
// scalars; levels above |L| give the zero ideal
DiscriminantResult md_generators(const PresentedAlgebra& a, const TraceMap& tr, unsigned level,
                                 std::uint64_t max_dets = 1000000, bool force_rational = false);
DiscriminantResult md_generators(const PresentedAlgebra& a, const GramMatrix& g, unsigned level,
                                 std::uint64_t max_dets = 1000000, bool force_rational = false);

// symmetric determinants only (same subset on rows and columns)
DiscriminantResult d_generators_restricted(const PresentedAlgebra& a, const TraceMap& tr, unsigned level,
                                           std::uint64_t max_dets = 1000000, bool force_rational = false);
DiscriminantResult d_generators_restricted(const PresentedAlgebra& a, const GramMatrix& g, unsigned level,
                                           std::uint64_t max_dets = 1000000, bool force_rational = false);

// determinant of the full Gram matrix on a free basis, defined up to a unit
MultiPoly free_discriminant(const PresentedAlgebra& a, const TraceMap& tr, bool force_rational = false);

// rank over K of the Gram matrix evaluated at a valid central point
unsigned point_gram_rank(const PresentedAlgebra& a, const TraceMap& tr, const std::vector<Scalar>& point);
unsigned point_gram_rank(const PresentedAlgebra& a, const GramMatrix& g, const std::vector<Scalar>& point);

// m lies in V(MD_level) (equivalently V(D_level)): evaluated Gram rank < level
bool zero_set_membership(const PresentedAlgebra& a, const TraceMap& tr, unsigned level,
                         const std::vector<Scalar>& point);

// guard for symbolic determinants in rational mode (coefficient blowup)
inline constexpr std::size_t kRationalDetSizeLimit = 12;

} // namespace pidisc
