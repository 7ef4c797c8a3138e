#pragma once

#include <array>
#include <optional>

#include "pidisc/discriminant.hpp"
#include "pidisc/trace.hpp"

#include <json.hpp>

namespace pidisc {

// The fiber R/mR (or one of its quotients): a finite-dimensional structure-constant
// algebra over the scalar field, remembering how its basis lifts to the spanning set.
struct FiniteAlgebra {
    FieldSpec field;
    std::size_t dim = 0;
    // table[i][j] = coordinates of b_i * b_j
    std::vector<std::vector<std::vector<Scalar>>> table;
    std::vector<Scalar> identity;
    // each basis vector written over the original spanning set L (coset representative)
    std::vector<std::vector<Scalar>> lift_L;
    // for quotients: basis index -> surviving index of the parent algebra
    std::vector<std::size_t> parent_keep;

    std::vector<Scalar> mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
    // matrix of left multiplication by a, column j = coords of a * b_j
    std::vector<std::vector<Scalar>> left_matrix(const std::vector<Scalar>& a) const;
    Scalar left_trace(const std::vector<Scalar>& a) const;
    std::vector<Scalar> zero_vec() const { return std::vector<Scalar>(dim, Scalar::zero(field)); }
};

// structure constants evaluated at the point, then quotiented by the specialized
// module relations; prime fields require p > fiber dimension
FiniteAlgebra specialize(const PresentedAlgebra& a, const std::vector<Scalar>& point);

// kernel of the left-regular trace form; equals the Jacobson radical when char = 0
// or p > dim
std::vector<std::vector<Scalar>> radical(const FiniteAlgebra& f);

// quotient by a (two-sided) ideal given by a spanning set of coordinate vectors
FiniteAlgebra quotient_by(const FiniteAlgebra& f, const std::vector<std::vector<Scalar>>& ideal_basis);

// Brute-force radical, independent of the trace form: repeatedly enumerate all
// projective x with x*Q*x = 0 (each spans a nilpotent ideal), quotient, and repeat
// until none remain. Exact over F_p; throws budget_error when p^dim > max_enum.
std::vector<std::vector<Scalar>> radical_oracle(const FiniteAlgebra& f, std::uint64_t max_enum);

struct BlockInfo {
    std::size_t dim = 0; // e * n^2
    std::size_t e = 0;   // center dimension (residue field degree)
    std::size_t n = 0;   // matrix size
    std::vector<Scalar> unit; // block identity, in quotient coordinates
    std::vector<std::vector<Scalar>> basis; // echelon basis of the block subspace
    std::vector<std::size_t> pivots;
};

struct BlockData {
    std::vector<BlockInfo> blocks;
    std::vector<std::size_t> irreducibles; // n_i with multiplicity e_i, sorted
};

// Wedderburn decomposition of a semisimple algebra over F_p via primitive central
// idempotents from the factored minimal polynomial of a random central element
BlockData block_decompose(const FiniteAlgebra& s, Rng& rng);

struct TraceDecomposition {
    bool representation_theoretic = false;
    // one coefficient per block, block order of BlockData
    std::vector<std::uint64_t> k_per_block;
    // aligned with BlockData::irreducibles
    std::vector<std::uint64_t> k_per_irreducible;
};

// solve tr_m = sum_i s_i tr_{V_i} on block identities and verify on a full basis;
// for reduced traces also checks the positive integer decomposition of n
TraceDecomposition decompose_trace(const PresentedAlgebra& a, const TraceMap& tr,
                                   const std::vector<Scalar>& point, const FiniteAlgebra& fiber,
                                   const std::vector<std::vector<Scalar>>& rad,
                                   const FiniteAlgebra& ss, const BlockData& blocks, unsigned n);

struct FiberReport {
    std::vector<Scalar> point;
    std::size_t dim = 0;
    std::size_t radical_dim = 0;
    std::size_t ss_dim = 0;
    std::vector<std::array<std::size_t, 3>> blocks; // (block_dim, e, n)
    std::vector<std::size_t> irreducibles;
    std::vector<std::pair<std::string, unsigned>> gram_ranks;
    bool azumaya = false;
    std::optional<std::vector<std::uint64_t>> k_m;
    bool pence_ok = true;
    bool sum_ok = true;
    // rank of every representation-theoretic Gram equals ss_dim
    bool gram_matches_ss = true;
    bool km_ok = true;
};

// full per-point analysis; precompute the Gram matrices once per trace when
// analyzing many points
FiberReport analyze_point(const PresentedAlgebra& a, const std::vector<TraceMap>& traces,
                          const std::vector<Scalar>& point, Rng& rng, unsigned pi_degree,
                          bool want_km, const std::vector<const GramMatrix*>& grams = {});

// random lifts of radical elements have traces inside m
bool descent_check(const PresentedAlgebra& a, const TraceMap& tr, const std::vector<Scalar>& point,
                   unsigned samples, Rng& rng);

nlohmann::json fiber_report_json(const FiberReport& r);

} // namespace pidisc
