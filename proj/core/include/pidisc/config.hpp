#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pidisc/trace.hpp"
#include "pidisc/weyl.hpp"

namespace pidisc {

struct TraceSpec {
    TraceKind kind = TraceKind::standard;
    std::string factor; // scaled traces: central polynomial text
    std::string base = "red";
};

struct EpsilonSpec {
    std::optional<std::uint64_t> order;
    std::optional<long long> residue;
};

// One run of the tool: field, algebra family with parameters, requested traces,
// grid, seed. Parsed from the JSON configuration file.
struct RunConfig {
    FieldSpec field = FieldSpec::rationals();
    std::string family; // weyl | quantum_affine_space | matrix_order | structure_constants

    // weyl family
    std::vector<unsigned> lambda;
    std::vector<EpsilonSpec> epsilon;
    std::vector<std::vector<long long>> chi; // empty = trivial twist

    // quantum affine family
    long long p12 = -1, p13 = -1, p23 = 1;

    // structure_constants family: raw JSON handed to the builder
    nlohmann::json structure;

    std::vector<TraceSpec> traces;

    bool grid_full = false;
    std::map<std::string, std::vector<long long>> grid_values;

    std::uint64_t seed = 0;
    std::uint64_t max_dets = 1000000;
    bool force_rational = false;
    std::string out_path;
};

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

// The instantiated algebra; heap-held so trace maps can keep stable references.
struct AlgebraBundle {
    std::shared_ptr<const WeylAlgebra> weyl;
    std::shared_ptr<const PresentedAlgebra> plain;
    std::string family;
    unsigned pi_deg = 0;

    const PresentedAlgebra& alg() const { return weyl ? weyl->alg : *plain; }
};

AlgebraBundle build_family(const RunConfig& cfg, Rng& rng);
std::vector<TraceMap> build_traces(const RunConfig& cfg, const AlgebraBundle& bundle);

// user-supplied structure-constant presentations from JSON
PresentedAlgebra build_structure_constants(const FieldSpec& f, const nlohmann::json& j);

// "X1=3,Y1=0" over the center's variable names
std::vector<Scalar> parse_point(const PresentedAlgebra& a, const std::string& text);

// grid enumeration in lexicographic order; relation-aware for the builtin cone
std::vector<std::vector<Scalar>> grid_points(const RunConfig& cfg, const AlgebraBundle& bundle,
                                             std::uint64_t budget = 100000);

} // namespace pidisc
